#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwahori/tits.hpp"

namespace iwahori {

// Inner-twist datum behind sigma* = Ad(g_nu) o sigma. The element
// nu_ad = t_{beta_ad} z lives in the adjoint length-zero group; only its
// combinatorial shadow enters: beta_ad, z, the least k with k beta_ad in
// j(X_*(T)), a preimage eta, and the Tits-group lift g_z.
struct InnerTwistDatum {
  std::string label;        // descriptor form, e.g. "nu(1)^2"
  RVec beta_ad;             // ambient (coroot+central) coordinates, rational
  WeylElt z;                // finite part of nu_ad
  long long k = 1;
  IVec eta;                 // lattice coords, j(eta) = k * beta_ad
  TitsElt g_z;
  WeylElt z0;               // finite part of the table generator (cyclic case)
  long long power = -1;     // nu_ad = nu_{ad,0}^power; -1 in the D-even case
};

// A Frobenius action on the datum: a diagram automorphism sigma (node
// permutation, possibly permuting components) plus an optional inner twist.
class FrobeniusData {
public:
  // node_perm: image of each finite node; empty means identity.
  // inner_label: "trivial" or "nu(i)" or "nu(i)^j" (i 1-based, component 1).
  FrobeniusData(const RootDatum& rd, const TitsGroup& tg,
                std::vector<int> node_perm, const std::string& inner_label);

  const RootDatum& datum() const { return rd_; }
  const TitsGroup& tits() const { return tg_; }
  const std::vector<int>& node_perm() const { return node_perm_; }
  bool has_inner() const { return inner_.has_value(); }
  const InnerTwistDatum& inner() const { return *inner_; }
  long long omega_ad_coinvariants() const { return omega_ad_coinv_; }

  // pinned lifts adjusted so that the generator set is sigma-stable
  const TitsElt& lift(int delta_index) const { return lifts_[delta_index]; }

  // plain diagram action
  WeylElt sigma_weyl(const WeylElt& w) const;
  IVec sigma_lattice(const IVec& v) const;
  F2Vec sigma_f2(const F2Vec& e) const;
  IVec sigma_root(const IVec& b) const;
  ExtAffElt sigma_ext(const ExtAffElt& x) const;
  TitsElt sigma_tits(const TitsElt& x) const;  // coordinatewise

  // sigma* = Ad(nu_ad) o sigma
  ExtAffElt sigma_star(const ExtAffElt& x) const;
  TitsElt sigma_star(const TitsElt& x) const;
  AffineRoot sigma_star(const AffineRoot& a) const;
  int sigma_star_node(int delta_index) const;

private:
  void build_inner(const std::string& label);
  void make_lifts_sigma_stable();

  const RootDatum& rd_;
  const TitsGroup& tg_;
  std::vector<int> node_perm_;
  IMat sigma_lattice_mat_;
  std::optional<InnerTwistDatum> inner_;
  long long omega_ad_coinv_ = 0;
  std::vector<TitsElt> lifts_;
};

// One sigma*-orbit on the affine simple roots.
struct OrbitData {
  std::vector<int> nodes;   // Delta indices in cycle order, least first
  bool finite = false;      // W_X finite (Gram of gradients positive definite)
  ExtAffElt w_X;            // longest element of W_X (finite case)
  long long param = 0;      // l-breve(w_X), the Hecke parameter exponent
  Rat c_a;                  // <b,b> / sum <b,b'> over the orbit
  IVec rel_coroot;          // lattice coords of c_a * sum of gradient coroots
};

// W = (W tilde)^{sigma*} with its Coxeter structure via the Lusztig
// bijection: finite orbits <-> simple reflections w_X.
struct RelativeWeyl {
  std::vector<OrbitData> orbits;
  std::vector<int> simple_orbits;        // orbit ids with finite W_X
  std::vector<OmegaElt> omega_fixed;     // Omega^{sigma*} (finite Omega only)
  std::vector<F2Vec> s2_basis;           // basis of S_2 = (S_2 breve)^{sigma*}
  std::vector<F2Vec> s2_elements;        // all of S_2

  unsigned s2_dim() const { return static_cast<unsigned>(s2_basis.size()); }
};

RelativeWeyl relative_data(const FrobeniusData& fd);

// word over simple_orbits positions, then a length-zero part
struct RelDecomposition {
  std::vector<int> word;   // indices into rw.simple_orbits
  ExtAffElt tau;
};
RelDecomposition rel_descent_decompose(const RootDatum& rd,
                                       const RelativeWeyl& rw,
                                       const ExtAffElt& x);
long long rel_length(const RootDatum& rd, const RelativeWeyl& rw,
                     const ExtAffElt& x);
// order of w_X w_X' in the extended affine Weyl group; 0 = infinite
int rel_braid_order(const RootDatum& rd, const RelativeWeyl& rw, int i, int j,
                    int cap = 24);

// sigma*-stable cross-section data over Delta, S and Omega^{sigma*}
struct StableSection {
  std::vector<TitsElt> m_delta;                      // per Delta node
  std::vector<TitsElt> m_simple;                     // per finite orbit
  std::vector<std::pair<ExtAffElt, TitsElt>> m_tau;  // per Omega^{sigma*} elt
  FtgReport report;                                  // stability checks
  const TitsElt& m_of_tau(const ExtAffElt& t) const;
};
StableSection stable_cross_section(const FrobeniusData& fd,
                                   const RelativeWeyl& rw);

struct RelativeCheckOptions {
  int kernel_radius = 4;
  int additivity_samples = 200;
  unsigned long long seed = 0;
};

struct RelativeCheckReport {
  FtgReport lines;
  unsigned s2_dim = 0;
  unsigned rel_coroot_span_dim = 0;  // span of the b^vee(-1) inside S_2
  bool all_pass() const { return lines.all_pass(); }
};

// Verifies m(s)^2 = b^vee(-1) with the orbit constant c_a, the kernel of
// T^{sigma*} -> W on a word ball, and the equivalence of length-additivity
// in W and in W tilde on sampled pairs.
RelativeCheckReport relative_tits_check(const FrobeniusData& fd,
                                        const RelativeWeyl& rw,
                                        const StableSection& sec,
                                        const RelativeCheckOptions& opt = {});

}  // namespace iwahori
