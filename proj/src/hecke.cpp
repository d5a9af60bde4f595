#include "iwahori/hecke.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace iwahori {

std::string Poly::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

HeckeAlgebra::HeckeAlgebra(const RootDatum& rd) : rd_(rd) {
  auto delta = affine_simple_roots(rd);
  for (const auto& a : delta) {
    simple_.push_back(affine_reflection(rd, a));
    params_.push_back(1);
  }
}

HeckeAlgebra::HeckeAlgebra(const RootDatum& rd, const RelativeWeyl& rw)
    : rd_(rd), rw_(&rw) {
  for (int oid : rw.simple_orbits) {
    simple_.push_back(rw.orbits[oid].w_X);
    params_.push_back(rw.orbits[oid].param);
  }
}

int HeckeAlgebra::braid_order(int i, int j) const {
  ExtAffElt p = ea_mul(rd_, simple_[i], simple_[j]);
  ExtAffElt acc = p;
  for (int k = 1; k <= 24; ++k) {
    if (acc == ea_identity(rd_)) return k;
    acc = ea_mul(rd_, acc, p);
  }
  return 0;
}

long long HeckeAlgebra::length(const ExtAffElt& w) const {
  if (!rw_) return ea_length(rd_, w);
  return rel_length(rd_, *rw_, w);
}

bool HeckeAlgebra::member(const ExtAffElt& w) const {
  return length(w) >= 0;
}

HeckeElt HeckeAlgebra::one() const {
  HeckeElt h;
  h.terms[ea_identity(rd_)] = Poly::one();
  return h;
}

HeckeElt HeckeAlgebra::basis(const ExtAffElt& w) const {
  if (!member(w))
    throw std::invalid_argument("hecke: element is not in the group");
  HeckeElt h;
  h.terms[w] = Poly::one();
  return h;
}

HeckeElt HeckeAlgebra::add(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r = a;
  for (const auto& [w, p] : b.terms) {
    auto it = r.terms.find(w);
    if (it == r.terms.end()) {
      r.terms[w] = p;
    } else {
      it->second = it->second + p;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::scale(const Poly& p, const HeckeElt& a) const {
  HeckeElt r;
  if (p.is_zero()) return r;
  for (const auto& [w, q] : a.terms) r.terms[w] = p * q;
  return r;
}

std::optional<int> HeckeAlgebra::left_descent(const ExtAffElt& w) const {
  long long len = ea_length(rd_, w);
  for (std::size_t s = 0; s < simple_.size(); ++s)
    if (ea_length(rd_, ea_mul(rd_, simple_[s], w)) < len)
      return static_cast<int>(s);
  return std::nullopt;
}

// T_x * h by recursion on a reduced expression of x
HeckeElt HeckeAlgebra::mul_basis(const ExtAffElt& x, const HeckeElt& h) const {
  auto s = left_descent(x);
  if (!s) {
    // length-zero part acts by translation of the basis
    HeckeElt r;
    for (const auto& [w, p] : h.terms) r.terms[ea_mul(rd_, x, w)] = p;
    return r;
  }
  ExtAffElt rest = ea_mul(rd_, simple_[*s], x);
  HeckeElt inner = mul_basis(rest, h);
  // now multiply by T_s on the left
  HeckeElt r;
  Poly qs = Poly::q_pow(params_[*s]);
  Poly qs1 = qs - Poly::one();
  for (const auto& [w, p] : inner.terms) {
    ExtAffElt sw = ea_mul(rd_, simple_[*s], w);
    if (ea_length(rd_, sw) > ea_length(rd_, w)) {
      auto& dst = r.terms[sw];
      dst = dst + p;
      if (dst.is_zero()) r.terms.erase(sw);
    } else {
      auto& d1 = r.terms[w];
      d1 = d1 + qs1 * p;
      if (d1.is_zero()) r.terms.erase(w);
      auto& d2 = r.terms[sw];
      d2 = d2 + qs * p;
      if (d2.is_zero()) r.terms.erase(sw);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  for (const auto& [x, p] : a.terms)
    if (!member(x))
      throw std::invalid_argument("hecke: operand from a different algebra");
  for (const auto& [y, p] : b.terms)
    if (!member(y))
      throw std::invalid_argument("hecke: operand from a different algebra");
  HeckeElt r;
  for (const auto& [x, p] : a.terms)
    r = add(r, scale(p, mul_basis(x, b)));
  return r;
}

std::map<ExtAffElt, long long> HeckeAlgebra::specialize_q1(
    const HeckeElt& a) const {
  std::map<ExtAffElt, long long> r;
  for (const auto& [w, p] : a.terms) {
    long long v = p.eval1();
    if (v != 0) r[w] = v;
  }
  return r;
}

std::map<ExtAffElt, long long> HeckeAlgebra::group_mul(
    const std::map<ExtAffElt, long long>& a,
    const std::map<ExtAffElt, long long>& b) const {
  std::map<ExtAffElt, long long> r;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      ExtAffElt xy = ea_mul(rd_, x, y);
      r[xy] += cx * cy;
      if (r[xy] == 0) r.erase(xy);
    }
  return r;
}

namespace {

struct SectionView {
  std::vector<ExtAffElt> taus;
  std::vector<TitsElt> m_tau;
  std::vector<ExtAffElt> simples;
  std::vector<TitsElt> m_s;
  std::vector<F2Vec> kernel;  // elements of S_2
};

HoweTitsConstants constants_from_view(const RootDatum& rd,
                                      const SectionView& v) {
  HoweTitsConstants hc;
  hc.taus = v.taus;
  hc.simples = v.simples;
  std::set<F2Vec> kernel(v.kernel.begin(), v.kernel.end());

  auto tau_index = [&](const ExtAffElt& x) {
    for (std::size_t i = 0; i < v.taus.size(); ++i)
      if (v.taus[i] == x) return static_cast<int>(i);
    throw std::logic_error("howe_tits_constants: product left the tau list");
  };
  auto in_kernel = [&](const TitsElt& t, F2Vec& out) {
    if (!ivec_is_zero(t.lambda) || !t.w.is_identity()) return false;
    out = t.eps;
    return kernel.count(t.eps) > 0;
  };

  std::size_t nt = v.taus.size(), ns = v.simples.size();
  hc.c_tau_tau.assign(nt, std::vector<F2Vec>(nt));
  hc.tau_tau_prod.assign(nt, std::vector<int>(nt, -1));
  hc.c_tau_s.assign(nt, std::vector<F2Vec>(ns));
  hc.tau_s_conj.assign(nt, std::vector<int>(ns, -1));

  for (std::size_t a = 0; a < nt; ++a)
    for (std::size_t b = 0; b < nt; ++b) {
      int ab = tau_index(ea_mul(rd, v.taus[a], v.taus[b]));
      hc.tau_tau_prod[a][b] = ab;
      TitsElt t = at_mul(rd, at_mul(rd, v.m_tau[a], v.m_tau[b]),
                         at_inv(rd, v.m_tau[ab]));
      F2Vec c;
      if (!in_kernel(t, c)) hc.all_in_kernel = false;
      hc.c_tau_tau[a][b] = c;
    }

  for (std::size_t a = 0; a < nt; ++a) {
    ExtAffElt tau_inv = ea_inv(rd, v.taus[a]);
    for (std::size_t s = 0; s < ns; ++s) {
      ExtAffElt conj =
          ea_mul(rd, ea_mul(rd, v.taus[a], v.simples[s]), tau_inv);
      int cidx = -1;
      for (std::size_t t = 0; t < ns; ++t)
        if (v.simples[t] == conj) cidx = static_cast<int>(t);
      if (cidx < 0)
        throw std::logic_error(
            "howe_tits_constants: tau s tau^{-1} is not a simple reflection");
      hc.tau_s_conj[a][s] = cidx;
      TitsElt t = at_mul(
          rd,
          at_mul(rd, at_mul(rd, v.m_tau[a], v.m_s[s]), at_inv(rd, v.m_tau[a])),
          at_inv(rd, v.m_s[cidx]));
      F2Vec c;
      if (!in_kernel(t, c)) hc.all_in_kernel = false;
      hc.c_tau_s[a][s] = c;
    }
  }
  return hc;
}

SectionView split_view(const RootDatum& rd, const TitsGroup& tg) {
  SectionView v;
  OmegaGroup og = omega_group(rd);
  if (!og.finite)
    throw std::invalid_argument(
        "howe_tits_constants: length-zero group must be finite");
  for (const auto& om : og.elements) {
    v.taus.push_back(om.x);
    v.m_tau.push_back(tg.cross_section(om.x));
  }
  auto delta = affine_simple_roots(rd);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    v.simples.push_back(affine_reflection(rd, delta[i]));
    v.m_s.push_back(tg.lift_affine_simple(static_cast<int>(i)));
  }
  v.kernel = rd.coroot_span_mod2().enumerate();
  return v;
}

SectionView relative_view(const FrobeniusData& fd, const RelativeWeyl& rw,
                          const StableSection& sec) {
  SectionView v;
  for (const auto& [tau, m] : sec.m_tau) {
    v.taus.push_back(tau);
    v.m_tau.push_back(m);
  }
  for (std::size_t t = 0; t < rw.simple_orbits.size(); ++t) {
    v.simples.push_back(rw.orbits[rw.simple_orbits[t]].w_X);
    v.m_s.push_back(sec.m_simple[t]);
  }
  v.kernel = rw.s2_elements;
  (void)fd;
  return v;
}

PresentationSchema schema_from(const RootDatum& rd, const HeckeAlgebra& alg,
                               const HoweTitsConstants& hc, int level,
                               bool relative) {
  PresentationSchema ps;
  ps.level = level;
  ps.relative = relative;
  ps.constants = hc;
  for (int s = 0; s < alg.num_simple(); ++s) ps.params.push_back(alg.param(s));

  for (int i = 0; i < alg.num_simple(); ++i)
    for (int j = i + 1; j < alg.num_simple(); ++j)
      ps.braid.push_back({i, j, alg.braid_order(i, j)});
  for (int s = 0; s < alg.num_simple(); ++s)
    ps.quad.push_back({alg.param(s), s});
  for (std::size_t a = 0; a < hc.taus.size(); ++a)
    for (std::size_t b = 0; b < hc.taus.size(); ++b)
      ps.omega_mul.push_back({static_cast<int>(a), static_cast<int>(b),
                              hc.tau_tau_prod[a][b], hc.c_tau_tau[a][b]});
  for (std::size_t a = 0; a < hc.taus.size(); ++a) {
    std::size_t ainv = a;
    const ExtAffElt inv = ea_inv(rd, hc.taus[a]);
    for (std::size_t b = 0; b < hc.taus.size(); ++b)
      if (hc.taus[b] == inv) ainv = b;
    for (std::size_t s = 0; s < hc.simples.size(); ++s)
      ps.omega_conj.push_back({static_cast<int>(a), static_cast<int>(s),
                               hc.tau_s_conj[a][s], hc.c_tau_s[a][s],
                               hc.c_tau_tau[a][ainv]});
  }

  ps.symbolic.push_back(
      "B(iii): 1_{I_n m(tau) I_n} * 1_{I_n g I_n} * 1_{I_n m(tau^{-1}) I_n} * "
      "1_{I_n c_{tau,tau^{-1}}^{-1} I_n} = 1_{I_n m(tau) g m(tau)^{-1} I_n} "
      "for g in I");
  ps.symbolic.push_back("C(i): 1_{I_n} is the identity");
  ps.symbolic.push_back(
      "C(ii): 1_{I_n g I_n} * 1_{I_n g' I_n} = 1_{I_n g g' I_n} for g, g' in "
      "I");
  ps.symbolic.push_back(
      "C(iii): 1_{I_n m(s) I_n} * 1_{I_n g I_n} = 1_{I_n m(s) g m(s)^{-1} "
      "I_n} * 1_{I_n m(s) I_n} for g in I with m(s) g m(s)^{-1} in I");
  ps.symbolic.push_back(
      "C(iv): for g in I with m(s) g m(s)^{-1} = g_1 m(s) g_2 (g_1, g_2 in I "
      "constrained only by this factorization), 1_{I_n m(s) I_n} * 1_{I_n g "
      "I_n} * 1_{I_n m(s) I_n} * 1_{I_n m(s)^2 I_n} = q^{l(s)} (1_{I_n g_1 "
      "I_n} * 1_{I_n m(s) I_n} * 1_{I_n g_2 I_n})");
  if (level >= 1)
    ps.symbolic.push_back(
        "A(ii) index set: #P_{s,n}/I_n = q^{l(s)} (symbolic; the filtration "
        "cosets are not materialized)");
  return ps;
}

}  // namespace

HoweTitsConstants howe_tits_constants(const RootDatum& rd,
                                      const TitsGroup& tg) {
  return constants_from_view(rd, split_view(rd, tg));
}

HoweTitsConstants howe_tits_constants(const FrobeniusData& fd,
                                      const RelativeWeyl& rw,
                                      const StableSection& sec) {
  return constants_from_view(fd.datum(), relative_view(fd, rw, sec));
}

PresentationSchema emit_presentation(const RootDatum& rd, const TitsGroup& tg,
                                     int level) {
  HeckeAlgebra alg(rd);
  return schema_from(rd, alg, howe_tits_constants(rd, tg), level, false);
}

PresentationSchema emit_presentation(const FrobeniusData& fd,
                                     const RelativeWeyl& rw,
                                     const StableSection& sec, int level) {
  HeckeAlgebra alg(fd.datum(), rw);
  return schema_from(fd.datum(), alg, howe_tits_constants(fd, rw, sec), level,
                     true);
}

HeckeElt schema_mul(const PresentationSchema& ps, const HeckeAlgebra& alg,
                    const ExtAffElt& x, const HeckeElt& y) {
  const RootDatum& rd = alg.datum();
  // decompose x into schema generators: simple factors then a tau
  ExtAffElt cur = x;
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (int s = 0; s < alg.num_simple(); ++s) {
      ExtAffElt sx = ea_mul(rd, alg.simple(s), cur);
      if (ea_length(rd, sx) < ea_length(rd, cur)) {
        word.push_back(s);
        cur = sx;
        moved = true;
        break;
      }
    }
  }
  // cur is the length-zero part: at level 0 the B-relations collapse to
  // T_tau T_w = T_{tau w} (the c-constants lie in I)
  HeckeElt acc;
  for (const auto& [w, p] : y.terms) acc.terms[ea_mul(rd, cur, w)] = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it;
    // coefficients are read off the schema's quadratic record for s
    long long expo = 0;
    for (const auto& qr : ps.quad)
      if (qr.s == s) expo = qr.exponent;
    Poly qs = Poly::q_pow(expo);
    Poly qs1 = qs - Poly::one();
    HeckeElt next;
    for (const auto& [w, p] : acc.terms) {
      ExtAffElt sw = ea_mul(rd, alg.simple(s), w);
      if (ea_length(rd, sw) > ea_length(rd, w)) {
        auto& dst = next.terms[sw];
        dst = dst + p;
      } else {
        auto& d1 = next.terms[w];
        d1 = d1 + qs1 * p;
        if (d1.is_zero()) next.terms.erase(w);
        auto& d2 = next.terms[sw];
        d2 = d2 + qs * p;
        if (d2.is_zero()) next.terms.erase(sw);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace iwahori
