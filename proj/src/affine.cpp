#include "iwahori/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwahori {

std::string AffineRoot::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  s += ";" + std::to_string(k) + ")";
  return s;
}

std::string ExtAffElt::str() const {
  std::string s = "t[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + "]*" + w.str();
}

ExtAffElt ea_identity(const RootDatum& rd) {
  return ExtAffElt{IVec(rd.dim(), 0), rd.identity()};
}

ExtAffElt ea_translation(const RootDatum& rd, const IVec& lambda) {
  return ExtAffElt{lambda, rd.identity()};
}

ExtAffElt ea_from_weyl(const RootDatum& rd, const WeylElt& w) {
  return ExtAffElt{IVec(rd.dim(), 0), w};
}

ExtAffElt ea_mul(const RootDatum& rd, const ExtAffElt& x, const ExtAffElt& y) {
  return ExtAffElt{ivec_add(x.lambda, rd.act(x.w, y.lambda)),
                   rd.multiply(x.w, y.w)};
}

ExtAffElt ea_inv(const RootDatum& rd, const ExtAffElt& x) {
  WeylElt wi = rd.inverse(x.w);
  return ExtAffElt{ivec_neg(rd.act(wi, x.lambda)), wi};
}

ExtAffElt ea_pow(const RootDatum& rd, const ExtAffElt& x, long long n) {
  if (n < 0) return ea_pow(rd, ea_inv(rd, x), -n);
  ExtAffElt acc = ea_identity(rd);
  for (long long i = 0; i < n; ++i) acc = ea_mul(rd, acc, x);
  return acc;
}

bool affine_positive(const RootDatum& rd, const AffineRoot& a) {
  if (a.k != 0) return a.k > 0;
  return rd.root_is_positive(a.b);
}

AffineRoot act_affine_root(const RootDatum& rd, const ExtAffElt& x,
                           const AffineRoot& a) {
  IVec wb = rd.act_root(x.w, a.b);
  return AffineRoot{wb, a.k - rd.pair_root(wb, x.lambda)};
}

std::vector<AffineRoot> affine_simple_roots(const RootDatum& rd) {
  std::vector<AffineRoot> delta;
  for (int i = 0; i < rd.ss_rank(); ++i) {
    IVec b(rd.ss_rank(), 0);
    b[i] = 1;
    delta.push_back(AffineRoot{b, 0});
  }
  for (std::size_t c = 0; c < rd.components().size(); ++c)
    delta.push_back(AffineRoot{ivec_neg(rd.highest_root(c)), 1});
  return delta;
}

ExtAffElt affine_reflection(const RootDatum& rd, const AffineRoot& a) {
  IVec beta = rd.coroot_of(a.b);
  IVec lambda(rd.dim(), 0);
  for (int i = 0; i < rd.dim(); ++i) lambda[i] = -a.k * beta[i];
  return ExtAffElt{lambda, rd.reflection(a.b)};
}

ExtAffElt affine_simple_reflection(const RootDatum& rd, int index) {
  return affine_reflection(rd, affine_simple_roots(rd).at(index));
}

long long ea_length(const RootDatum& rd, const ExtAffElt& x) {
  long long len = 0;
  for (const auto& pr : rd.positive_roots()) {
    for (int sign = 0; sign < 2; ++sign) {
      IVec b = sign ? ivec_neg(pr.root) : pr.root;
      IVec wb = rd.act_root(x.w, b);
      long long p = rd.pair_root(wb, x.lambda);
      long long lo = sign;                              // k >= 1 for b < 0
      long long hi = p - 1 + (rd.root_is_positive(wb) ? 0 : 1);
      if (hi >= lo) len += hi - lo + 1;
    }
  }
  return len;
}

DescentDecomposition descent_decompose(const RootDatum& rd,
                                       const ExtAffElt& x) {
  std::vector<AffineRoot> delta = affine_simple_roots(rd);
  DescentDecomposition out;
  ExtAffElt cur = x;
  long long guard = ea_length(rd, x);
  for (;;) {
    // x^{-1}(b, k) = (w^{-1} b, k + <b, lambda>)
    WeylElt wi = rd.inverse(cur.w);
    int desc = -1;
    for (std::size_t i = 0; i < delta.size(); ++i) {
      AffineRoot img{rd.act_root(wi, delta[i].b),
                     delta[i].k + rd.pair_root(delta[i].b, cur.lambda)};
      if (!affine_positive(rd, img)) {
        desc = static_cast<int>(i);
        break;
      }
    }
    if (desc < 0) break;
    if (static_cast<long long>(out.word.size()) > guard)
      throw std::logic_error("descent_decompose: walk does not terminate");
    out.word.push_back(desc);
    cur = ea_mul(rd, affine_reflection(rd, delta[desc]), cur);
  }
  out.tau = cur;
  return out;
}

OmegaElt make_omega(const RootDatum& rd, const ExtAffElt& x) {
  if (ea_length(rd, x) != 0)
    throw std::invalid_argument("make_omega: element has positive length");
  std::vector<AffineRoot> delta = affine_simple_roots(rd);
  OmegaElt tau;
  tau.x = x;
  tau.perm.resize(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    AffineRoot img = act_affine_root(rd, x, delta[i]);
    auto it = std::find(delta.begin(), delta.end(), img);
    if (it == delta.end())
      throw std::logic_error(
          "make_omega: image of a simple affine root is not simple");
    tau.perm[i] = static_cast<int>(it - delta.begin());
  }
  return tau;
}

const std::vector<int>& omega_conjugation(const RootDatum& rd,
                                          const OmegaElt& tau) {
  (void)rd;
  return tau.perm;
}

OmegaGroup omega_group(const RootDatum& rd) {
  int d = rd.dim(), n = rd.ss_rank();
  IMat q(n, d);
  for (int i = 0; i < n; ++i) q.set_row(i, rd.simple_coroot(i));
  auto snf = smith_normal_form(q);
  // row lattice of q in coordinates y = x * V is spanned by diag entries
  IMat vinv;
  {
    RMat vq(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) vq(i, j) = Rat(snf.v(i, j));
    RMat inv = rmat_inverse(vq);
    vinv = IMat(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) vinv(i, j) = inv(i, j).to_int();
  }

  OmegaGroup og;
  og.free_rank = d - n;
  og.finite = og.free_rank == 0;
  std::vector<long long> diag(d, 0);
  for (int i = 0; i < n; ++i) diag[i] = snf.diag[i];

  auto class_rep = [&](const IVec& y) {
    // y in V-coordinates -> canonical lattice vector
    IVec yy = y;
    for (int i = 0; i < n; ++i) {
      long long m = diag[i];
      yy[i] = ((yy[i] % m) + m) % m;
    }
    return vec_mat(yy, vinv);
  };
  auto omega_of = [&](const IVec& lambda) {
    return make_omega(rd, descent_decompose(rd, ea_translation(rd, lambda)).tau);
  };

  for (int i = 0; i < n; ++i)
    if (snf.diag[i] > 1) og.torsion.push_back(snf.diag[i]);

  if (og.finite) {
    og.order = 1;
    for (int i = 0; i < n; ++i) og.order *= diag[i];
    // enumerate all classes
    IVec y(d, 0);
    std::vector<IVec> reps;
    for (long long idx = 0;; ++idx) {
      reps.push_back(class_rep(y));
      int p = 0;
      while (p < n && ++y[p] == diag[p]) y[p++] = 0;
      if (p == n) break;
    }
    for (const auto& r : reps) og.elements.push_back(omega_of(r));
  }
  for (int i = 0; i < n; ++i) {
    if (diag[i] <= 1) continue;
    IVec y(d, 0);
    y[i] = 1;
    og.generators.push_back(omega_of(class_rep(y)));
  }
  for (int j = n; j < d; ++j) {
    IVec y(d, 0);
    y[j] = 1;
    og.generators.push_back(omega_of(vec_mat(y, vinv)));
  }
  return og;
}

OmegaElt nu_ad(const RootDatum& rd, int i) {
  if (!rd.minuscule(i))
    throw std::invalid_argument("nu_ad: omega_i^vee is not minuscule");
  auto lam = rd.from_ambient(rd.fundamental_coweight(i));
  if (!lam)
    throw std::invalid_argument("nu_ad: omega_i^vee not in the lattice");
  return make_omega(rd, ExtAffElt{*lam, rd.y_paren(i)});
}

}  // namespace iwahori
