#pragma once

#include <string>
#include <vector>

#include "iwahori/root_datum.hpp"

namespace iwahori {

// Affine root (b, k): the affine function x |-> <b, x> + k on X_*(T) x R.
// Positive iff k > 0, or k = 0 and b > 0.
struct AffineRoot {
  IVec b;        // gradient, root coordinates
  long long k;   // affine part

  friend bool operator==(const AffineRoot& x, const AffineRoot& y) {
    return x.k == y.k && x.b == y.b;
  }
  friend bool operator!=(const AffineRoot& x, const AffineRoot& y) {
    return !(x == y);
  }
  std::string str() const;
};

// Element t_lambda * w of the extended affine Weyl group X_*(T) x| W_0.
struct ExtAffElt {
  IVec lambda;  // lattice coordinates
  WeylElt w;

  friend bool operator==(const ExtAffElt& x, const ExtAffElt& y) {
    return x.lambda == y.lambda && x.w == y.w;
  }
  friend bool operator!=(const ExtAffElt& x, const ExtAffElt& y) {
    return !(x == y);
  }
  friend bool operator<(const ExtAffElt& x, const ExtAffElt& y) {
    if (x.lambda != y.lambda) return x.lambda < y.lambda;
    return x.w < y.w;
  }
  std::string str() const;
};

ExtAffElt ea_identity(const RootDatum& rd);
ExtAffElt ea_translation(const RootDatum& rd, const IVec& lambda);
ExtAffElt ea_from_weyl(const RootDatum& rd, const WeylElt& w);
ExtAffElt ea_mul(const RootDatum& rd, const ExtAffElt& x, const ExtAffElt& y);
ExtAffElt ea_inv(const RootDatum& rd, const ExtAffElt& x);
ExtAffElt ea_pow(const RootDatum& rd, const ExtAffElt& x, long long n);

bool affine_positive(const RootDatum& rd, const AffineRoot& a);
// t_lambda w sends (b, k) to (w b, k - <w b, lambda>)
AffineRoot act_affine_root(const RootDatum& rd, const ExtAffElt& x,
                           const AffineRoot& a);

// The walls of the base (dominant) alcove: the simple roots at level 0
// followed by one (-theta_j, 1) per component. Index layout: finite node i
// at position i, the extra node of component c at position ss_rank + c.
std::vector<AffineRoot> affine_simple_roots(const RootDatum& rd);
// reflection through the wall of (b, k): t_{-k b^vee} s_b
ExtAffElt affine_reflection(const RootDatum& rd, const AffineRoot& a);
ExtAffElt affine_simple_reflection(const RootDatum& rd, int index);

// Alcove-walk length: number of affine hyperplanes separating the base
// alcove from its image (closed-formula route; the walk recomputes it).
long long ea_length(const RootDatum& rd, const ExtAffElt& x);

struct DescentDecomposition {
  std::vector<int> word;  // indices into affine_simple_roots
  ExtAffElt tau;          // length-zero part
};
// x = s_{i_1} ... s_{i_n} tau with n = length(x); the word is the one found
// by repeatedly taking the least left descent.
DescentDecomposition descent_decompose(const RootDatum& rd,
                                       const ExtAffElt& x);

// Length-zero element with its permutation of the affine simple roots.
struct OmegaElt {
  ExtAffElt x;
  std::vector<int> perm;  // image of each affine simple node
};
OmegaElt make_omega(const RootDatum& rd, const ExtAffElt& x);
const std::vector<int>& omega_conjugation(const RootDatum& rd,
                                          const OmegaElt& tau);

struct OmegaGroup {
  bool finite = true;
  long long order = 1;                 // only meaningful when finite
  std::vector<long long> torsion;     // invariant factors > 1
  int free_rank = 0;
  std::vector<OmegaElt> elements;     // enumerated when finite
  std::vector<OmegaElt> generators;   // torsion generators then free basis
};
// Omega = stabilizer of the base alcove, isomorphic to X_*(T)/Z Phi^vee.
OmegaGroup omega_group(const RootDatum& rd);

// nu_{ad,(i)} = t_{omega_i^vee} y_(i); requires omega_i^vee minuscule and in
// the lattice (e.g. adjoint data).
OmegaElt nu_ad(const RootDatum& rd, int i);

}  // namespace iwahori
