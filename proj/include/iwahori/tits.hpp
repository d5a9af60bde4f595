#pragma once

#include <string>
#include <vector>

#include "iwahori/affine.hpp"
#include "iwahori/finite_tits.hpp"

namespace iwahori {

// Element lambda(pi) * t_eps * n_w of the Tits-group model of the extended
// affine Weyl group: lambda a cocharacter (lattice coordinates), eps in
// X/2X, w in W_0. The uniformizer is never materialized; lambda is formal.
struct TitsElt {
  IVec lambda;
  F2Vec eps;
  WeylElt w;

  friend bool operator==(const TitsElt& a, const TitsElt& b) {
    return a.lambda == b.lambda && a.eps == b.eps && a.w == b.w;
  }
  friend bool operator!=(const TitsElt& a, const TitsElt& b) {
    return !(a == b);
  }
  friend bool operator<(const TitsElt& a, const TitsElt& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.w < b.w;
  }
  std::string str() const;
};

TitsElt at_identity(const RootDatum& rd);
TitsElt at_mul(const RootDatum& rd, const TitsElt& x, const TitsElt& y);
TitsElt at_inv(const RootDatum& rd, const TitsElt& x);
TitsElt at_pow(const RootDatum& rd, const TitsElt& x, long long n);
TitsElt lift_cocharacter(const RootDatum& rd, const IVec& lambda);
TitsElt at_sign(const RootDatum& rd, const F2Vec& eps);
TitsElt at_weyl(const RootDatum& rd, const WeylElt& w);  // (0, 0, n_w)
// image in the extended affine Weyl group
ExtAffElt at_project(const RootDatum& rd, const TitsElt& x);

struct SesReport {
  long long words_checked = 0;
  long long null_words = 0;
  bool null_in_s2 = true;          // every null word lands in S_2
  unsigned s2_dim = 0;             // F_2-dimension of S_2 breve
  bool kernel_saturated = true;    // identity fiber realizes all of S_2
  bool fibers_ok = true;           // fiber sizes and coset structure
  long long fibers_checked = 0;
};

struct CoxeterReport {
  struct Pair {
    int i, j;
    int order;      // 0 means infinite: no relation, skipped
    bool pass;
    std::string lhs, rhs;
  };
  struct Square {
    int i;
    bool pass;
    std::string lhs, rhs;
  };
  std::vector<Pair> pairs;
  std::vector<Square> squares;
  bool all_pass() const {
    for (const auto& p : pairs)
      if (p.order != 0 && !p.pass) return false;
    for (const auto& s : squares)
      if (!s.pass) return false;
    return true;
  }
};

// The Tits group of the extended affine Weyl group, with the pinned lifts of
// the affine simple reflections. For each component's extra node the sign
// part of the lift is found by solving m(s)^2 = gradient-coroot(-1) over F_2
// and filtering by the braid relations; ties go to the lexicographically
// least solution. All passing candidates are kept for reporting.
class TitsGroup {
public:
  explicit TitsGroup(const RootDatum& rd);

  const RootDatum& datum() const { return rd_; }
  const std::vector<AffineRoot>& delta() const { return delta_; }
  int braid_order_affine(int i, int j) const;

  const TitsElt& lift_affine_simple(int index) const { return lifts_[index]; }
  // sign part chosen for the extra node of a component, plus all candidates
  // that pass the braid relations
  const F2Vec& extra_eps(int comp) const { return extra_eps_[comp]; }
  const std::vector<F2Vec>& extra_eps_candidates(int comp) const {
    return extra_candidates_[comp];
  }

  // reduced-word-independent cross-section m: W tilde -> Tits group
  TitsElt cross_section(const ExtAffElt& x) const;

  SesReport ses_check(int radius) const;
  CoxeterReport verify_coxeter() const;

private:
  const RootDatum& rd_;
  std::vector<AffineRoot> delta_;
  std::vector<TitsElt> lifts_;
  std::vector<F2Vec> extra_eps_;
  std::vector<std::vector<F2Vec>> extra_candidates_;
};

}  // namespace iwahori
