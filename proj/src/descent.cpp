#include "iwahori/descent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "iwahori/sweep.hpp"

namespace iwahori {

namespace {

// node of the chosen generator of the cyclic length-zero group of the
// adjoint datum, 0-based (no cyclic generator in the D-even case)
std::optional<int> table_generator_node(TypeLabel t, int rank) {
  switch (t) {
    case TypeLabel::A: return 0;
    case TypeLabel::B: return 0;
    case TypeLabel::C: return rank - 1;
    case TypeLabel::D:
      if (rank % 2 == 1) return rank - 1;
      return std::nullopt;  // Klein group, no cyclic generator
    case TypeLabel::E:
      if (rank == 6) return 0;
      if (rank == 7) return 6;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

bool is_d_even(const Component& c) {
  return c.type == TypeLabel::D && c.rank % 2 == 0;
}

Rat rat_det(RMat m) {
  std::size_t n = m.rows();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace

FrobeniusData::FrobeniusData(const RootDatum& rd, const TitsGroup& tg,
                             std::vector<int> node_perm,
                             const std::string& inner_label)
    : rd_(rd), tg_(tg), node_perm_(std::move(node_perm)) {
  int n = rd.ss_rank();
  if (node_perm_.empty()) {
    node_perm_.resize(n);
    std::iota(node_perm_.begin(), node_perm_.end(), 0);
  }
  if (static_cast<int>(node_perm_.size()) != n)
    throw std::invalid_argument("frobenius: node permutation has wrong size");
  std::vector<bool> seen(n, false);
  for (int i : node_perm_) {
    if (i < 0 || i >= n || seen[i])
      throw std::invalid_argument("frobenius: not a permutation");
    seen[i] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rd.cartan()(node_perm_[i], node_perm_[j]) != rd.cartan()(i, j))
        throw std::invalid_argument(
            "frobenius: permutation is not a diagram automorphism");

  // sigma on lattice coordinates; rejects lattices not stable under sigma
  int d = rd.dim();
  sigma_lattice_mat_ = IMat(d, d);
  for (int j = 0; j < d; ++j) {
    IVec ej(d, 0);
    ej[j] = 1;
    RVec amb = rd.to_ambient(ej);
    RVec img(d, Rat(0));
    for (int i = 0; i < n; ++i) img[node_perm_[i]] = amb[i];
    for (int i = n; i < d; ++i) img[i] = amb[i];
    auto c = rd.from_ambient(img);
    if (!c)
      throw std::invalid_argument(
          "frobenius: lattice is not stable under the diagram automorphism");
    sigma_lattice_mat_.set_row(j, *c);
  }

  make_lifts_sigma_stable();
  if (inner_label != "trivial" && !inner_label.empty())
    build_inner(inner_label);
}

WeylElt FrobeniusData::sigma_weyl(const WeylElt& w) const {
  std::vector<int> word;
  word.reserve(w.word().size());
  for (int i : w.word()) word.push_back(node_perm_[i]);
  return rd_.normal_form(word);
}

IVec FrobeniusData::sigma_lattice(const IVec& v) const {
  return vec_mat(v, sigma_lattice_mat_);
}

F2Vec FrobeniusData::sigma_f2(const F2Vec& e) const {
  IVec v(rd_.dim(), 0);
  for (int i = 0; i < rd_.dim(); ++i) v[i] = e.get(i) ? 1 : 0;
  return F2Vec::from_ivec(sigma_lattice(v));
}

IVec FrobeniusData::sigma_root(const IVec& b) const {
  IVec out(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[node_perm_[i]] = b[i];
  return out;
}

ExtAffElt FrobeniusData::sigma_ext(const ExtAffElt& x) const {
  return ExtAffElt{sigma_lattice(x.lambda), sigma_weyl(x.w)};
}

TitsElt FrobeniusData::sigma_tits(const TitsElt& x) const {
  return TitsElt{sigma_lattice(x.lambda), sigma_f2(x.eps), sigma_weyl(x.w)};
}

void FrobeniusData::make_lifts_sigma_stable() {
  lifts_.clear();
  for (std::size_t i = 0; i < tg_.delta().size(); ++i)
    lifts_.push_back(tg_.lift_affine_simple(static_cast<int>(i)));

  // component permutation induced by sigma
  std::size_t ncomp = rd_.components().size();
  std::vector<int> comp_perm(ncomp);
  for (std::size_t c = 0; c < ncomp; ++c)
    comp_perm[c] =
        rd_.component_of_node(node_perm_[rd_.components()[c].node_offset]);

  std::vector<bool> done(ncomp, false);
  for (std::size_t c0 = 0; c0 < ncomp; ++c0) {
    if (done[c0]) continue;
    std::vector<int> cycle{static_cast<int>(c0)};
    done[c0] = true;
    for (int c = comp_perm[c0]; c != static_cast<int>(c0); c = comp_perm[c]) {
      cycle.push_back(c);
      done[c] = true;
    }
    int len = static_cast<int>(cycle.size());
    // choose a candidate for the representative component that returns to
    // itself under sigma^len
    const auto& cands = tg_.extra_eps_candidates(cycle[0]);
    std::optional<F2Vec> chosen;
    for (const F2Vec& e : cands) {
      F2Vec img = e;
      for (int t = 0; t < len; ++t) img = sigma_f2(img);
      if (img == e) {
        chosen = e;
        break;
      }
    }
    if (!chosen)
      throw std::domain_error(
          "frobenius: no sigma-stable sign system for the extra node of "
          "component " +
          std::to_string(cycle[0]) +
          " (the two-torsion model admits no sigma-compatible affine "
          "pinning here)");
    // push the choice around the component cycle
    F2Vec eps = *chosen;
    for (int t = 0; t < len; ++t) {
      int comp = cycle[static_cast<std::size_t>(t)];
      int idx = rd_.ss_rank() + comp;
      const auto& valid = tg_.extra_eps_candidates(comp);
      if (std::find(valid.begin(), valid.end(), eps) == valid.end())
        throw std::logic_error(
            "frobenius: pushed sign is not a braid-valid candidate");
      lifts_[idx] = TitsElt{lifts_[idx].lambda, eps, lifts_[idx].w};
      eps = sigma_f2(eps);
    }
  }
}

void FrobeniusData::build_inner(const std::string& label) {
  // parse nu(i) or nu(i)^j
  auto fail = [&]() {
    throw std::invalid_argument("frobenius: bad inner label '" + label + "'");
  };
  if (label.rfind("nu(", 0) != 0) fail();
  std::size_t close = label.find(')');
  if (close == std::string::npos) fail();
  int node_1b = 0;
  long long power = 1;
  try {
    node_1b = std::stoi(label.substr(3, close - 3));
    if (close + 1 < label.size()) {
      if (label[close + 1] != '^') fail();
      power = std::stoll(label.substr(close + 2));
    }
  } catch (const std::logic_error&) {
    fail();
  }

  const Component& comp1 = rd_.components()[0];
  if (node_1b < 1 || node_1b > comp1.rank)
    throw std::invalid_argument(
        "frobenius: inner label names a node outside component 1");
  int node = comp1.node_offset + node_1b - 1;

  // work in the adjoint datum of the same Cartan type
  std::vector<std::pair<TypeLabel, int>> comps;
  for (const auto& c : rd_.components()) comps.emplace_back(c.type, c.rank);
  RootDatum ad = RootDatum::adjoint(comps);
  if (!ad.minuscule(node))
    throw std::invalid_argument(
        "frobenius: inner label names a non-minuscule node");

  OmegaElt base = nu_ad(ad, node);
  ExtAffElt nu = ea_pow(ad, base.x, power);
  if (nu == ea_identity(ad)) return;  // trivial class, sigma* = sigma

  // order of the coinvariants (Omega_ad)_sigma
  OmegaGroup og = omega_group(ad);
  auto sigma_ad = [&](const ExtAffElt& x) {
    IVec lam(ad.dim(), 0);
    // adjoint lattice coords permute with the nodes
    for (int i = 0; i < ad.dim(); ++i) lam[node_perm_[i]] = x.lambda[i];
    std::vector<int> word;
    for (int i : x.w.word()) word.push_back(node_perm_[i]);
    return ExtAffElt{lam, ad.normal_form(word)};
  };
  std::set<ExtAffElt> sub{ea_identity(ad)};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& om : og.elements) {
      ExtAffElt gen = ea_mul(ad, sigma_ad(om.x), ea_inv(ad, om.x));
      for (const auto& s : std::set<ExtAffElt>(sub))
        if (sub.insert(ea_mul(ad, gen, s)).second) grew = true;
    }
  }
  omega_ad_coinv_ = og.order / static_cast<long long>(sub.size());

  InnerTwistDatum itd;
  itd.label = label;
  RVec beta_ss = ad.to_ambient(nu.lambda);
  itd.beta_ad.assign(rd_.dim(), Rat(0));
  for (int i = 0; i < rd_.ss_rank(); ++i) itd.beta_ad[i] = beta_ss[i];
  itd.z = rd_.normal_form(nu.w.word());

  if (is_d_even(comp1)) {
    itd.power = -1;
    itd.z0 = rd_.identity();
    itd.g_z = at_weyl(rd_, itd.z);
  } else {
    auto gen_node = table_generator_node(comp1.type, comp1.rank);
    if (!gen_node)
      throw std::invalid_argument(
          "frobenius: nontrivial inner twist needs a nontrivial length-zero "
          "group");
    OmegaElt nu0 = nu_ad(ad, comp1.node_offset + *gen_node);
    long long p = -1;
    ExtAffElt acc = ea_identity(ad);
    for (long long t = 0; t < og.order + 1; ++t) {
      if (acc == nu) {
        p = t;
        break;
      }
      acc = ea_mul(ad, acc, nu0.x);
    }
    if (p < 0)
      throw std::invalid_argument(
          "frobenius: inner element is not a power of the table generator");
    if (p >= omega_ad_coinv_)
      throw std::invalid_argument(
          "frobenius: inner label '" + label +
          "' is not in the image of (Omega_ad)_sigma; use a power below " +
          std::to_string(omega_ad_coinv_));
    itd.power = p;
    itd.z0 = rd_.normal_form(nu0.x.w.word());
    itd.g_z = at_pow(rd_, at_weyl(rd_, itd.z0), p);
  }

  // least k with k beta_ad in j(X_*(T)), and a canonical preimage eta
  {
    int d = rd_.dim(), nss = rd_.ss_rank();
    long long den = 1;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < nss; ++j)
        den = std::lcm(den, rd_.basis()(i, j).den());
    IMat ss(d, nss);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < nss; ++j)
        ss(i, j) = (rd_.basis()(i, j) * Rat(den)).to_int();
    RVec target(nss, Rat(0));
    for (int j = 0; j < nss; ++j) target[j] = itd.beta_ad[j] * Rat(den);
    itd.k = hnf_denominator(row_hnf(ss), target);
    if (itd.k <= 0)
      throw std::logic_error("frobenius: beta_ad not in the Q-span of j(X)");
    IVec b(nss, 0);
    for (int j = 0; j < nss; ++j)
      b[j] = (target[j] * Rat(itd.k)).to_int();
    auto eta = solve_integer_left(ss, b);
    if (!eta)
      throw std::logic_error("frobenius: no integral preimage of k beta_ad");
    itd.eta = *eta;
  }
  inner_ = std::move(itd);
}

ExtAffElt FrobeniusData::sigma_star(const ExtAffElt& x) const {
  if (!inner_) return sigma_ext(x);
  WeylElt sw = sigma_weyl(x.w);
  WeylElt wp = rd_.multiply(rd_.multiply(inner_->z, sw), rd_.inverse(inner_->z));
  RVec shift = inner_->beta_ad;
  RVec moved = rd_.act_ambient(wp, shift);
  for (int i = 0; i < rd_.dim(); ++i) shift[i] -= moved[i];
  auto delta = rd_.from_ambient(shift);
  if (!delta)
    throw std::logic_error(
        "sigma_star: beta_ad - w'(beta_ad) is not in the coroot lattice");
  IVec lam = rd_.act(inner_->z, sigma_lattice(x.lambda));
  return ExtAffElt{ivec_add(lam, *delta), wp};
}

TitsElt FrobeniusData::sigma_star(const TitsElt& x) const {
  if (!inner_) return sigma_tits(x);
  WeylElt sw = sigma_weyl(x.w);
  WeylElt wp = rd_.multiply(rd_.multiply(inner_->z, sw), rd_.inverse(inner_->z));
  RVec shift = inner_->beta_ad;
  RVec moved = rd_.act_ambient(wp, shift);
  for (int i = 0; i < rd_.dim(); ++i) shift[i] -= moved[i];
  auto delta = rd_.from_ambient(shift);
  if (!delta)
    throw std::logic_error(
        "sigma_star: beta_ad - w'(beta_ad) is not in the coroot lattice");

  TitsElt r = lift_cocharacter(rd_, rd_.act(inner_->z, sigma_lattice(x.lambda)));
  r = at_mul(rd_, r, at_sign(rd_, rd_.act_f2(inner_->z, sigma_f2(x.eps))));
  r = at_mul(rd_, r, lift_cocharacter(rd_, *delta));
  r = at_mul(rd_, r, inner_->g_z);
  r = at_mul(rd_, r, at_weyl(rd_, sw));
  r = at_mul(rd_, r, at_inv(rd_, inner_->g_z));
  return r;
}

AffineRoot FrobeniusData::sigma_star(const AffineRoot& a) const {
  AffineRoot out{sigma_root(a.b), a.k};
  if (!inner_) return out;
  IVec zb = rd_.act_root(inner_->z, out.b);
  Rat p(0);
  for (int i = 0; i < rd_.ss_rank(); ++i) {
    if (zb[i] == 0) continue;
    for (int j = 0; j < rd_.ss_rank(); ++j)
      p += Rat(zb[i]) * Rat(rd_.cartan()(j, i)) * inner_->beta_ad[j];
  }
  return AffineRoot{zb, out.k - p.to_int()};
}

int FrobeniusData::sigma_star_node(int delta_index) const {
  const auto& delta = tg_.delta();
  AffineRoot img = sigma_star(delta[delta_index]);
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i] == img) return static_cast<int>(i);
  throw std::logic_error("sigma_star_node: image is not a simple affine root");
}

RelativeWeyl relative_data(const FrobeniusData& fd) {
  const RootDatum& rd = fd.datum();
  const auto& delta = fd.tits().delta();
  RelativeWeyl rw;

  std::vector<bool> seen(delta.size(), false);
  for (std::size_t start = 0; start < delta.size(); ++start) {
    if (seen[start]) continue;
    OrbitData od;
    int cur = static_cast<int>(start);
    do {
      od.nodes.push_back(cur);
      seen[cur] = true;
      cur = fd.sigma_star_node(cur);
    } while (cur != static_cast<int>(start));

    // finiteness: Gram matrix of the gradients positive definite
    std::size_t m = od.nodes.size();
    RMat gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        gram(i, j) = rd.inner_root(delta[od.nodes[i]].b, delta[od.nodes[j]].b);
    od.finite = true;
    for (std::size_t t = 1; t <= m; ++t) {
      RMat lead(t, t);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) lead(i, j) = gram(i, j);
      if (!(rat_det(lead) > Rat(0))) {
        od.finite = false;
        break;
      }
    }

    if (od.finite) {
      // longest element of the finite parabolic generated by the orbit
      std::set<ExtAffElt> group{ea_identity(rd)};
      std::vector<ExtAffElt> frontier{ea_identity(rd)};
      std::vector<ExtAffElt> gens;
      for (int nidx : od.nodes)
        gens.push_back(affine_reflection(rd, delta[nidx]));
      while (!frontier.empty()) {
        std::vector<ExtAffElt> next;
        for (const auto& g : frontier)
          for (const auto& s : gens) {
            ExtAffElt h = ea_mul(rd, s, g);
            if (group.insert(h).second) next.push_back(h);
            if (group.size() > 100000)
              throw std::logic_error("relative_data: parabolic too large");
          }
        frontier = std::move(next);
      }
      long long best = -1;
      for (const auto& g : group) {
        long long len = ea_length(rd, g);
        if (len > best) {
          best = len;
          od.w_X = g;
        }
      }
      od.param = best;
      // c_a and the relative coroot
      const IVec& b = delta[od.nodes[0]].b;
      Rat num = rd.inner_root(b, b);
      Rat den(0);
      for (int nidx : od.nodes) den += rd.inner_root(b, delta[nidx].b);
      od.c_a = num / den;
      RVec sum(rd.dim(), Rat(0));
      for (int nidx : od.nodes) {
        RVec amb = rd.to_ambient(rd.coroot_of(delta[nidx].b));
        for (int i = 0; i < rd.dim(); ++i) sum[i] += amb[i];
      }
      for (int i = 0; i < rd.dim(); ++i) sum[i] *= od.c_a;
      auto rc = rd.from_ambient(sum);
      if (!rc)
        throw std::logic_error(
            "relative_data: relative coroot is not in the lattice");
      od.rel_coroot = *rc;
    }
    rw.orbits.push_back(std::move(od));
  }
  for (std::size_t i = 0; i < rw.orbits.size(); ++i)
    if (rw.orbits[i].finite) rw.simple_orbits.push_back(static_cast<int>(i));

  OmegaGroup og = omega_group(rd);
  if (!og.finite)
    throw std::invalid_argument(
        "relative_data: length-zero group must be finite (semisimple datum)");
  for (const auto& om : og.elements)
    if (fd.sigma_star(om.x) == om.x) rw.omega_fixed.push_back(om);

  F2Span span;
  for (const F2Vec& e : rd.coroot_span_mod2().enumerate()) {
    F2Vec img = fd.sigma_f2(e);
    if (fd.has_inner()) img = rd.act_f2(fd.inner().z, img);
    if (img == e) {
      rw.s2_elements.push_back(e);
      if (span.add(e)) rw.s2_basis.push_back(e);
    }
  }
  return rw;
}

RelDecomposition rel_descent_decompose(const RootDatum& rd,
                                       const RelativeWeyl& rw,
                                       const ExtAffElt& x) {
  RelDecomposition out;
  ExtAffElt cur = x;
  long long len = ea_length(rd, cur);
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t t = 0; t < rw.simple_orbits.size(); ++t) {
      const ExtAffElt& s = rw.orbits[rw.simple_orbits[t]].w_X;
      ExtAffElt sx = ea_mul(rd, s, cur);
      long long slen = ea_length(rd, sx);
      if (slen < len) {
        out.word.push_back(static_cast<int>(t));
        cur = sx;
        len = slen;
        moved = true;
        break;
      }
    }
  }
  out.tau = cur;
  return out;
}

long long rel_length(const RootDatum& rd, const RelativeWeyl& rw,
                     const ExtAffElt& x) {
  RelDecomposition dec = rel_descent_decompose(rd, rw, x);
  for (const auto& om : rw.omega_fixed)
    if (om.x == dec.tau) return static_cast<long long>(dec.word.size());
  return -1;  // not an element of the relative group
}

int rel_braid_order(const RootDatum& rd, const RelativeWeyl& rw, int i, int j,
                    int cap) {
  ExtAffElt p = ea_mul(rd, rw.orbits[rw.simple_orbits[i]].w_X,
                       rw.orbits[rw.simple_orbits[j]].w_X);
  ExtAffElt acc = p;
  for (int k = 1; k <= cap; ++k) {
    if (acc == ea_identity(rd)) return k;
    acc = ea_mul(rd, acc, p);
  }
  return 0;
}

const TitsElt& StableSection::m_of_tau(const ExtAffElt& t) const {
  for (const auto& [x, m] : m_tau)
    if (x == t) return m;
  throw std::invalid_argument("m_of_tau: not a fixed length-zero element");
}

StableSection stable_cross_section(const FrobeniusData& fd,
                                   const RelativeWeyl& rw) {
  const RootDatum& rd = fd.datum();
  const auto& delta = fd.tits().delta();
  StableSection sec;
  sec.m_delta.resize(delta.size());

  auto add = [&](const std::string& name, const TitsElt& lhs,
                 const TitsElt& rhs) {
    CheckLine l;
    l.name = name;
    l.pass = lhs == rhs;
    l.lhs = lhs.str();
    l.rhs = rhs.str();
    sec.report.lines.push_back(std::move(l));
  };

  if (!fd.has_inner()) {
    for (std::size_t i = 0; i < delta.size(); ++i)
      sec.m_delta[i] = fd.lift(static_cast<int>(i));
  } else {
    for (const auto& orbit : rw.orbits) {
      // representative in Delta_0 with least node index
      int rep = -1;
      for (int nidx : orbit.nodes)
        if (nidx < rd.ss_rank() && (rep < 0 || nidx < rep)) rep = nidx;
      if (rep < 0)
        throw std::logic_error(
            "stable_cross_section: orbit misses the finite nodes");
      // walk the cycle from the representative
      TitsElt m = fd.lift(rep);
      int node = rep;
      for (std::size_t t = 0; t < orbit.nodes.size(); ++t) {
        sec.m_delta[node] = m;
        node = fd.sigma_star_node(node);
        m = fd.sigma_star(m);
      }
    }
  }

  // orbit-power identity for the finite-node pinned lifts
  for (int i = 0; i < rd.ss_rank(); ++i) {
    std::size_t orbit_size = 0;
    for (const auto& orbit : rw.orbits)
      if (std::find(orbit.nodes.begin(), orbit.nodes.end(), i) !=
          orbit.nodes.end())
        orbit_size = orbit.nodes.size();
    TitsElt img = fd.lift(i);
    for (std::size_t t = 0; t < orbit_size; ++t) img = fd.sigma_star(img);
    add("orbit power: (sigma*)^" + std::to_string(orbit_size) + " fixes n_{s" +
            std::to_string(i + 1) + "}",
        img, fd.lift(i));
  }
  // sigma*-stability of the whole section over Delta
  for (std::size_t i = 0; i < delta.size(); ++i)
    add("section: sigma*(m(node " + std::to_string(i) + ")) = m(sigma* node)",
        fd.sigma_star(sec.m_delta[i]),
        sec.m_delta[fd.sigma_star_node(static_cast<int>(i))]);

  // m(s) for s in the relative simple set, via reduced expressions of w_X
  for (int oid : rw.simple_orbits) {
    const OrbitData& orbit = rw.orbits[oid];
    DescentDecomposition dec = descent_decompose(rd, orbit.w_X);
    if (!(dec.tau == ea_identity(rd)))
      throw std::logic_error("stable_cross_section: w_X not in W_af");
    TitsElt m = at_identity(rd);
    for (int i : dec.word) m = at_mul(rd, m, sec.m_delta[i]);
    sec.m_simple.push_back(m);
    add("m(s) sigma*-fixed (orbit at node " +
            std::to_string(orbit.nodes[0]) + ")",
        fd.sigma_star(m), m);
  }

  // m(tau) = n_lambda m(y) per the descent construction
  const Component& comp1 = rd.components()[0];
  std::size_t ncomp = rd.components().size();
  std::optional<WeylElt> z0;
  long long omega1_order = 1;
  if (auto node = table_generator_node(comp1.type, comp1.rank)) {
    z0 = rd.y_paren(comp1.node_offset + *node);
    std::vector<std::pair<TypeLabel, int>> c1{{comp1.type, comp1.rank}};
    omega1_order = omega_group(RootDatum::adjoint(c1)).order;
  }
  for (const auto& om : rw.omega_fixed) {
    const ExtAffElt& tau = om.x;
    // component-1 factor of the finite part
    std::vector<int> word1;
    for (int i : tau.w.word())
      if (rd.component_of_node(i) == 0) word1.push_back(i);
    WeylElt y1 = rd.normal_form(word1);
    TitsElt my1;
    if (is_d_even(comp1)) {
      my1 = at_weyl(rd, y1);
    } else if (y1.is_identity()) {
      my1 = at_identity(rd);
    } else {
      if (!z0)
        throw std::logic_error(
            "stable_cross_section: nontrivial finite part without a cyclic "
            "generator");
      long long j = -1;
      WeylElt acc = rd.identity();
      for (long long t = 0; t < omega1_order; ++t) {
        if (acc == y1) {
          j = t;
          break;
        }
        acc = rd.multiply(acc, *z0);
      }
      if (j < 0)
        throw std::logic_error(
            "stable_cross_section: finite part is not a generator power");
      my1 = at_pow(rd, at_weyl(rd, *z0), j);
    }
    TitsElt my = my1;
    TitsElt img = my1;
    WeylElt ycheck = y1;
    for (std::size_t t = 1; t < ncomp; ++t) {
      img = fd.sigma_tits(img);
      my = at_mul(rd, my, img);
      ycheck = rd.multiply(ycheck, img.w);
    }
    if (ncomp > 1 && ycheck != tau.w)
      throw std::logic_error(
          "stable_cross_section: finite part is not a sigma-cycle product");
    TitsElt m = at_mul(rd, lift_cocharacter(rd, tau.lambda), my);
    sec.m_tau.emplace_back(tau, m);
    add("fixed lift: sigma*(m(tau)) = m(tau), tau = " + tau.str(),
        fd.sigma_star(m), m);
  }
  return sec;
}

RelativeCheckReport relative_tits_check(const FrobeniusData& fd,
                                        const RelativeWeyl& rw,
                                        const StableSection& sec,
                                        const RelativeCheckOptions& opt) {
  const RootDatum& rd = fd.datum();
  RelativeCheckReport rep;
  rep.s2_dim = rw.s2_dim();

  auto add = [&](const std::string& name, bool pass, const std::string& lhs,
                 const std::string& rhs) {
    CheckLine l;
    l.name = name;
    l.pass = pass;
    l.lhs = lhs;
    l.rhs = rhs;
    rep.lines.lines.push_back(std::move(l));
  };

  // m(s)^2 = b^vee(-1) with the orbit constant c_a
  F2Span rel_span;
  for (std::size_t t = 0; t < rw.simple_orbits.size(); ++t) {
    const OrbitData& orbit = rw.orbits[rw.simple_orbits[t]];
    bool ca_ok = orbit.c_a == Rat(1) || orbit.c_a == Rat(2);
    add("orbit constant: c_a in {1,2} (orbit at node " +
            std::to_string(orbit.nodes[0]) + ")",
        ca_ok, orbit.c_a.str(), "1 or 2");
    TitsElt sq = at_mul(rd, sec.m_simple[t], sec.m_simple[t]);
    TitsElt expect = at_sign(rd, F2Vec::from_ivec(orbit.rel_coroot));
    add("descent square: m(s)^2 = b^vee(-1) (orbit at node " +
            std::to_string(orbit.nodes[0]) + ", c_a = " + orbit.c_a.str() +
            ")",
        sq == expect, sq.str(), expect.str());
    rel_span.add(F2Vec::from_ivec(orbit.rel_coroot));
  }
  rep.rel_coroot_span_dim = rel_span.rank();

  // kernel of T^{sigma*} -> W on a word ball over the m(s)
  {
    std::set<F2Vec> s2set(rw.s2_elements.begin(), rw.s2_elements.end());
    bool ok = true;
    long long nulls = 0;
    std::function<void(const TitsElt&, const ExtAffElt&, int)> rec =
        [&](const TitsElt& m, const ExtAffElt& x, int depth) {
          if (x == ea_identity(rd) && depth > 0) {
            ++nulls;
            if (!(ivec_is_zero(m.lambda) && m.w.is_identity() &&
                  s2set.count(m.eps)))
              ok = false;
          }
          if (depth == opt.kernel_radius) return;
          for (std::size_t t = 0; t < rw.simple_orbits.size(); ++t)
            rec(at_mul(rd, m, sec.m_simple[t]),
                ea_mul(rd, x, rw.orbits[rw.simple_orbits[t]].w_X), depth + 1);
        };
    rec(at_identity(rd), ea_identity(rd), 0);
    add("ses: null words over {m(s)} land in S_2 (radius " +
            std::to_string(opt.kernel_radius) + ")",
        ok, std::to_string(nulls) + " null words", "all in S_2");
  }

  // Lusztig-bijection consistency: words over S with the same group product
  // and additive l-breve give the same cross-section product
  {
    std::map<ExtAffElt, std::set<TitsElt>> by_product;
    std::function<void(const TitsElt&, const ExtAffElt&, long long, int)> rec =
        [&](const TitsElt& m, const ExtAffElt& x, long long lsum, int depth) {
          if (ea_length(rd, x) == lsum) by_product[x].insert(m);
          if (depth == 4) return;
          for (std::size_t t = 0; t < rw.simple_orbits.size(); ++t) {
            const OrbitData& o = rw.orbits[rw.simple_orbits[t]];
            rec(at_mul(rd, m, sec.m_simple[t]), ea_mul(rd, x, o.w_X),
                lsum + o.param, depth + 1);
          }
        };
    rec(at_identity(rd), ea_identity(rd), 0, 0);
    bool ok = true;
    for (const auto& [x, set] : by_product)
      if (set.size() > 1) ok = false;
    add("lusztig: additive S-words with equal products have equal sections",
        ok, std::to_string(by_product.size()) + " products", "unique m each");
  }

  // additivity equivalence between l and l-breve on sampled pairs
  {
    std::mt19937_64 rng(opt.seed);
    auto random_rel = [&]() {
      ExtAffElt x = ea_identity(rd);
      int steps = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < steps; ++t) {
        if (!rw.simple_orbits.empty() && rng() % 3 != 0) {
          x = ea_mul(rd, x,
                     rw.orbits[rw.simple_orbits[rng() % rw.simple_orbits.size()]]
                         .w_X);
        } else {
          x = ea_mul(rd, x, rw.omega_fixed[rng() % rw.omega_fixed.size()].x);
        }
      }
      return x;
    };
    bool ok = true;
    for (int t = 0; t < opt.additivity_samples; ++t) {
      ExtAffElt x = random_rel(), y = random_rel();
      long long lx = rel_length(rd, rw, x), ly = rel_length(rd, rw, y);
      long long lxy = rel_length(rd, rw, ea_mul(rd, x, y));
      if (lx < 0 || ly < 0 || lxy < 0) {
        ok = false;
        break;
      }
      bool add_rel = lxy == lx + ly;
      bool add_breve = ea_length(rd, ea_mul(rd, x, y)) ==
                       ea_length(rd, x) + ea_length(rd, y);
      if (add_rel != add_breve) {
        ok = false;
        break;
      }
    }
    add("length additivity: l adds iff l-breve adds (" +
            std::to_string(opt.additivity_samples) + " samples)",
        ok, "", "");
  }
  return rep;
}

}  // namespace iwahori
