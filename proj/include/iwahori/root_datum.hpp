#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwahori/f2.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori {

class RootDatum;

// Element of the finite Weyl group W_0. Stores the canonical reduced word
// (lexicographically least) and the action on cocharacter-lattice
// coordinates as an integer matrix (row vector * matrix convention).
class WeylElt {
public:
  WeylElt() = default;

  const std::vector<int>& word() const { return word_; }
  const IMat& action() const { return action_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) {
    return !(a == b);
  }
  friend bool operator<(const WeylElt& a, const WeylElt& b) {
    if (a.word_.size() != b.word_.size())
      return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

  std::string str() const;

private:
  friend class RootDatum;
  std::vector<int> word_;
  IMat action_;
};

enum class TypeLabel : char { A = 'A', B = 'B', C = 'C', D = 'D',
                              E = 'E', F = 'F', G = 'G' };

struct Component {
  TypeLabel type;
  int rank;
  int node_offset;  // index of this component's first simple root
};

struct PosRoot {
  IVec root;     // coordinates over all simple roots
  IVec coroot;   // lattice coordinates of the coroot
  int component;
};

// Root datum of a split reductive group: Cartan data for a product of
// simple types, a cocharacter lattice X_*(T) with Z Phi^vee <= X_*(T) inside
// P^vee + central directions, and the W-invariant inner product.
//
// Coordinate conventions, used everywhere downstream:
//  * roots are integer rows over the simple roots (dimension ss_rank)
//  * cocharacters are integer rows over the chosen basis of X_*(T)
//    (dimension = ss_rank + central_rank); the basis matrix expresses that
//    basis in "coroot + central" coordinates
//  * cartan(i,j) = <alpha_j, alpha_i^vee>, Bourbaki numbering per component
class RootDatum {
public:
  // basis: rows = basis of X_*(T) in coroot+central coordinates
  // (ss_rank + central_rank columns). Throws if Z Phi^vee is not contained
  // in the lattice or some basis vector pairs non-integrally with a root.
  RootDatum(std::vector<std::pair<TypeLabel, int>> components,
            RMat basis, int central_rank);

  static RootDatum simply_connected(
      std::vector<std::pair<TypeLabel, int>> components);
  static RootDatum adjoint(
      std::vector<std::pair<TypeLabel, int>> components);

  // --- shape ---
  int ss_rank() const { return ss_rank_; }
  int central_rank() const { return central_rank_; }
  int dim() const { return ss_rank_ + central_rank_; }
  const std::vector<Component>& components() const { return components_; }
  int component_of_node(int i) const;
  const IMat& cartan() const { return cartan_; }
  const RMat& basis() const { return basis_; }
  long long weyl_order() const;

  // --- roots ---
  const std::vector<PosRoot>& positive_roots() const { return pos_roots_; }
  // index into positive_roots() of the simple root alpha_i
  int simple_root_index(int i) const { return simple_pos_index_[i]; }
  // highest root of a component, as root coordinates
  const IVec& highest_root(int comp) const { return highest_[comp]; }
  const IVec& highest_coroot(int comp) const { return highest_coroot_[comp]; }
  // lattice coordinates of alpha_i^vee
  const IVec& simple_coroot(int i) const { return simple_coroot_[i]; }
  // <alpha_i, x> for x in lattice coordinates
  long long pair_simple(int i, const IVec& x) const;
  Rat pair_simple(int i, const RVec& x) const;
  // <b, x> for a root b in root coordinates
  long long pair_root(const IVec& b, const IVec& x) const;
  Rat pair_root(const IVec& b, const RVec& x) const;
  bool root_is_positive(const IVec& b) const;
  // lattice coordinates of the coroot of +-b (b any root); throws if b is
  // not a root
  IVec coroot_of(const IVec& b) const;

  // --- Weyl group ---
  const WeylElt& identity() const { return identity_; }
  WeylElt simple_reflection(int i) const;
  WeylElt reflection(const IVec& root) const;
  WeylElt normal_form(const std::vector<int>& word) const;
  WeylElt from_action(const IMat& m) const;
  WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
  WeylElt inverse(const WeylElt& a) const;
  // action on cocharacters, s_i(v) = v - <alpha_i, v> alpha_i^vee
  IVec act(const WeylElt& w, const IVec& v) const;
  RVec act(const WeylElt& w, const RVec& v) const;
  // same action in ambient (coroot+central) coordinates
  RVec act_ambient(const WeylElt& w, const RVec& v) const;
  // action on roots (root coordinates)
  IVec act_root(const WeylElt& w, const IVec& b) const;
  F2Vec act_f2(const WeylElt& w, const F2Vec& e) const;
  WeylElt longest_element(const std::vector<int>& nodes) const;
  // order of s_i s_j in W_0
  int braid_order(int i, int j) const;
  std::vector<IVec> inversion_set(const WeylElt& w) const;
  // enumerate the whole group (intended for small data)
  std::vector<WeylElt> enumerate_weyl(std::size_t limit = 2000000) const;

  // y_(i) = y_{I minus i} * y_I, the finite part of nu_{ad,(i)}
  WeylElt y_paren(int i) const;
  // is omega_i^vee minuscule, i.e. coefficient of alpha_i in the highest
  // root of its component equals 1
  bool minuscule(int i) const;
  // fundamental coweight omega_i^vee in coroot+central coordinates
  RVec fundamental_coweight(int i) const;

  // --- lattice ---
  // coroot+central coordinates of a lattice row vector
  RVec to_ambient(const IVec& lattice) const;
  RVec to_ambient(const RVec& lattice) const;
  // lattice coordinates of an ambient vector, if it lies in X_*(T)
  std::optional<IVec> from_ambient(const RVec& ambient) const;
  RVec from_ambient_q(const RVec& ambient) const;
  // F_2 span of the coroot images in X/2X ("S_2 breve")
  const F2Span& coroot_span_mod2() const { return s2_; }
  F2Vec mod2(const IVec& lattice) const { return F2Vec::from_ivec(lattice); }

  // --- invariant inner product ---
  // on roots: <b, b'> with short roots of squared length 2/(bond ratio)
  // and long roots of squared length 2 per component
  Rat inner_root(const IVec& a, const IVec& b) const;
  // on the cocharacter space (coroot+central coordinates); central block
  // orthonormal
  Rat inner_cochar(const RVec& x, const RVec& y) const;

  std::string describe_type() const;

private:
  void build_cartan();
  void close_roots();
  void build_lattice_data();
  void build_inner_product();

  std::vector<Component> components_;
  int ss_rank_ = 0;
  int central_rank_ = 0;
  IMat cartan_;
  RMat basis_;       // dim x dim, rows = lattice basis in ambient coords
  RMat basis_inv_;   // ambient -> lattice coordinates
  IMat pairing_;     // pairing_(j,i) = <alpha_i, basis row j>
  std::vector<IVec> simple_coroot_;      // lattice coords
  std::vector<IMat> refl_lattice_;       // s_i on lattice coords
  std::vector<PosRoot> pos_roots_;
  std::vector<int> simple_pos_index_;
  std::vector<IVec> highest_;
  std::vector<IVec> highest_coroot_;
  std::vector<Rat> root_len2_;           // squared length of alpha_i
  RVec rho_check_lattice_;               // regular dominant coweight, lattice coords (rational)
  F2Span s2_;
  WeylElt identity_;
};

}  // namespace iwahori
