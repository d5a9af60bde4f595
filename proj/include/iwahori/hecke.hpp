#pragma once

#include <map>
#include <string>
#include <vector>

#include "iwahori/descent.hpp"

namespace iwahori {

// Integer polynomial in one variable q, ascending coefficients.
struct Poly {
  std::vector<long long> c;

  static Poly zero() { return Poly{}; }
  static Poly one() { return Poly{{1}}; }
  static Poly q_pow(long long k) {
    Poly p;
    p.c.assign(k + 1, 0);
    p.c[k] = 1;
    return p;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long long eval1() const {
    long long s = 0;
    for (auto x : c) s += x;
    return s;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  std::string str() const;
};

// Finite Z[q]-linear combination of basis elements T_w.
struct HeckeElt {
  std::map<ExtAffElt, Poly> terms;

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.terms == b.terms;
  }
};

// Iwahori-Hecke algebra of (W, S, parameters q^{l-breve(s)}). Two flavors:
// the split algebra over the whole extended affine Weyl group (all
// parameters q), and the relative algebra over W = (W tilde)^{sigma*} with
// parameters q^{l-breve(w_X)}.
class HeckeAlgebra {
public:
  explicit HeckeAlgebra(const RootDatum& rd);
  HeckeAlgebra(const RootDatum& rd, const RelativeWeyl& rw);

  const RootDatum& datum() const { return rd_; }
  bool relative() const { return rw_ != nullptr; }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  const ExtAffElt& simple(int s) const { return simple_[s]; }
  long long param(int s) const { return params_[s]; }
  // braid order of (simple(i), simple(j)); 0 = infinite
  int braid_order(int i, int j) const;

  long long length(const ExtAffElt& w) const;
  bool member(const ExtAffElt& w) const;

  HeckeElt one() const;
  HeckeElt basis(const ExtAffElt& w) const;
  HeckeElt add(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt scale(const Poly& p, const HeckeElt& a) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  // q = 1 specialization into Z[W]
  std::map<ExtAffElt, long long> specialize_q1(const HeckeElt& a) const;
  // independent group-algebra product (the q = 1 oracle)
  std::map<ExtAffElt, long long> group_mul(
      const std::map<ExtAffElt, long long>& a,
      const std::map<ExtAffElt, long long>& b) const;

private:
  std::optional<int> left_descent(const ExtAffElt& w) const;
  HeckeElt mul_basis(const ExtAffElt& x, const HeckeElt& h) const;

  const RootDatum& rd_;
  const RelativeWeyl* rw_ = nullptr;
  std::vector<ExtAffElt> simple_;
  std::vector<long long> params_;
};

// Structure constants of the Howe-Tits presentation, eq. (cs):
// c_{tau,tau'} = m(tau) m(tau') m(tau tau')^{-1} and
// c_{tau,s} = m(tau) m(s) m(tau)^{-1} m(tau s tau^{-1})^{-1}, both in S_2.
struct HoweTitsConstants {
  std::vector<ExtAffElt> taus;
  std::vector<ExtAffElt> simples;
  std::vector<std::vector<F2Vec>> c_tau_tau;   // [t1][t2]
  std::vector<std::vector<int>> tau_tau_prod;  // index of tau1 tau2
  std::vector<std::vector<F2Vec>> c_tau_s;     // [t][s]
  std::vector<std::vector<int>> tau_s_conj;    // index of tau s tau^{-1} in S
  bool all_in_kernel = true;                   // both constants land in S_2
};

// Split flavor: taus = Omega (finite), m = Tits cross-section.
HoweTitsConstants howe_tits_constants(const RootDatum& rd,
                                      const TitsGroup& tg);
// Relative flavor: taus = Omega^{sigma*}, m from the stable cross-section.
HoweTitsConstants howe_tits_constants(const FrobeniusData& fd,
                                      const RelativeWeyl& rw,
                                      const StableSection& sec);

// Emitted presentation of H_n: generator classes, A/B/C relation records
// with computed constants and symbolic q-powers. The cosets I_n g I_n are
// never materialized; the Iwahori generator class stays a placeholder.
struct PresentationSchema {
  int level = 0;
  bool relative = false;
  std::vector<long long> params;  // exponent of q per simple generator

  struct BraidRel { int s1, s2, order; };                 // A(i)
  struct QuadRel { long long exponent; int s; };          // A(ii)
  struct OmegaMul { int t1, t2, t12; F2Vec c; };          // B(i)
  struct OmegaConj { int t, s, s_conj; F2Vec c_ts, c_t_tinv; };  // B(ii)
  std::vector<BraidRel> braid;
  std::vector<QuadRel> quad;
  std::vector<OmegaMul> omega_mul;
  std::vector<OmegaConj> omega_conj;
  std::vector<std::string> symbolic;  // B(iii), C(i)-(iv) placeholder records
  HoweTitsConstants constants;
};

PresentationSchema emit_presentation(const RootDatum& rd, const TitsGroup& tg,
                                     int level);
PresentationSchema emit_presentation(const FrobeniusData& fd,
                                     const RelativeWeyl& rw,
                                     const StableSection& sec, int level);

// Multiply T_x * T_y using only the level-0 collapsed schema records;
// compared against HeckeAlgebra::mul by the acceptance suite.
HeckeElt schema_mul(const PresentationSchema& ps, const HeckeAlgebra& alg,
                    const ExtAffElt& x, const HeckeElt& y);

}  // namespace iwahori
