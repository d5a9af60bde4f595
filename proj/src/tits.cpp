#include "iwahori/tits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "iwahori/sweep.hpp"

namespace iwahori {

std::string TitsElt::str() const {
  std::string s = "pi[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + "]*t[" + eps.str() + "]*" + w.str();
}

TitsElt at_identity(const RootDatum& rd) {
  return TitsElt{IVec(rd.dim(), 0), F2Vec(rd.dim()), rd.identity()};
}

TitsElt at_mul(const RootDatum& rd, const TitsElt& x, const TitsElt& y) {
  WeylElt w = rd.multiply(x.w, y.w);
  return TitsElt{
      ivec_add(x.lambda, rd.act(x.w, y.lambda)),
      x.eps + rd.act_f2(x.w, y.eps) +
          rd.act_f2(w, rostami_correction(rd, x.w, y.w)),
      w};
}

TitsElt at_inv(const RootDatum& rd, const TitsElt& x) {
  WeylElt wi = rd.inverse(x.w);
  return TitsElt{ivec_neg(rd.act(wi, x.lambda)),
                 rd.act_f2(wi, x.eps) + rostami_correction(rd, wi, x.w), wi};
}

TitsElt at_pow(const RootDatum& rd, const TitsElt& x, long long n) {
  if (n < 0) return at_pow(rd, at_inv(rd, x), -n);
  TitsElt acc = at_identity(rd);
  for (long long i = 0; i < n; ++i) acc = at_mul(rd, acc, x);
  return acc;
}

TitsElt lift_cocharacter(const RootDatum& rd, const IVec& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rd.dim()))
    throw std::invalid_argument("lift_cocharacter: wrong dimension");
  return TitsElt{lambda, F2Vec(rd.dim()), rd.identity()};
}

TitsElt at_sign(const RootDatum& rd, const F2Vec& eps) {
  return TitsElt{IVec(rd.dim(), 0), eps, rd.identity()};
}

TitsElt at_weyl(const RootDatum& rd, const WeylElt& w) {
  return TitsElt{IVec(rd.dim(), 0), F2Vec(rd.dim()), w};
}

ExtAffElt at_project(const RootDatum& rd, const TitsElt& x) {
  (void)rd;
  return ExtAffElt{x.lambda, x.w};
}

namespace {

// F_2 solve: (1 + s_theta) eps = rhs; returns all solutions.
std::vector<F2Vec> solve_extra_eps(const RootDatum& rd, const WeylElt& stheta,
                                   const F2Vec& rhs) {
  int d = rd.dim();
  // columns of the map eps -> eps + s_theta(eps)
  std::vector<std::uint64_t> col(d);
  for (int j = 0; j < d; ++j) {
    F2Vec ej(d);
    ej.set(j, true);
    col[j] = (ej + rd.act_f2(stheta, ej)).bits();
  }
  // Gaussian elimination on the augmented system
  std::vector<std::uint64_t> rows;  // each row: [coeff bits | rhs bit << d]
  for (int r = 0; r < d; ++r) {
    std::uint64_t row = 0;
    for (int j = 0; j < d; ++j)
      if ((col[j] >> r) & 1) row |= (std::uint64_t{1} << j);
    if (rhs.get(r)) row |= (std::uint64_t{1} << d);
    rows.push_back(row);
  }
  std::vector<int> pivot_of_row;
  std::size_t rr = 0;
  for (int c = 0; c < d && rr < rows.size(); ++c) {
    std::size_t p = rr;
    while (p < rows.size() && !((rows[p] >> c) & 1)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rr]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rr && ((rows[i] >> c) & 1)) rows[i] ^= rows[rr];
    pivot_of_row.push_back(c);
    ++rr;
  }
  for (std::size_t i = rr; i < rows.size(); ++i)
    if ((rows[i] >> d) & 1) return {};  // inconsistent
  F2Vec part(d);
  for (std::size_t i = 0; i < rr; ++i)
    if ((rows[i] >> d) & 1) part.set(pivot_of_row[i], true);
  // kernel basis: free columns
  std::vector<F2Vec> sols{part};
  for (int c = 0; c < d; ++c) {
    if (std::find(pivot_of_row.begin(), pivot_of_row.end(), c) !=
        pivot_of_row.end())
      continue;
    F2Vec k(d);
    k.set(c, true);
    for (std::size_t i = 0; i < rr; ++i)
      if ((rows[i] >> c) & 1) k.set(pivot_of_row[i], true);
    std::size_t sz = sols.size();
    for (std::size_t t = 0; t < sz; ++t) sols.push_back(sols[t] + k);
  }
  std::sort(sols.begin(), sols.end(),
            [](const F2Vec& a, const F2Vec& b) { return a.str() < b.str(); });
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  return sols;
}

bool braid_pair_holds(const RootDatum& rd, const TitsElt& a, const TitsElt& b,
                      int k, TitsElt* lhs_out = nullptr,
                      TitsElt* rhs_out = nullptr) {
  TitsElt lhs = at_identity(rd), rhs = at_identity(rd);
  for (int t = 0; t < k; ++t) {
    lhs = at_mul(rd, lhs, t % 2 ? b : a);
    rhs = at_mul(rd, rhs, t % 2 ? a : b);
  }
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return lhs == rhs;
}

}  // namespace

TitsGroup::TitsGroup(const RootDatum& rd) : rd_(rd) {
  delta_ = affine_simple_roots(rd);
  lifts_.resize(delta_.size());
  for (int i = 0; i < rd.ss_rank(); ++i)
    lifts_[i] = at_weyl(rd, rd.simple_reflection(i));

  std::size_t ncomp = rd.components().size();
  extra_eps_.resize(ncomp);
  extra_candidates_.resize(ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) {
    int idx = rd.ss_rank() + static_cast<int>(c);
    const IVec& theta = rd.highest_root(c);
    IVec theta_v = rd.coroot_of(theta);
    WeylElt stheta = rd.reflection(theta);
    // m(s)^2 = (0, eps + s_theta eps + c(s_theta, s_theta), e) must equal
    // gradient-coroot(-1) = theta^vee(-1)
    F2Vec rhs = F2Vec::from_ivec(theta_v) +
                rostami_correction(rd_, stheta, stheta);
    std::vector<F2Vec> sols = solve_extra_eps(rd, stheta, rhs);
    if (sols.empty())
      throw std::logic_error("TitsGroup: no sign solves the square condition");
    // filter by the braid relations against the finite-node lifts
    std::vector<F2Vec> pass;
    for (const F2Vec& eps : sols) {
      TitsElt cand{theta_v, eps, stheta};
      bool ok = true;
      for (int j = 0; j < rd.ss_rank() && ok; ++j) {
        int k = braid_order_affine(idx, j);
        if (k == 0) continue;
        ok = braid_pair_holds(rd, cand, lifts_[j], k);
      }
      if (ok) pass.push_back(eps);
    }
    if (pass.empty())
      throw std::logic_error(
          "TitsGroup: no sign candidate satisfies the braid relations");
    extra_candidates_[c] = pass;
    extra_eps_[c] = pass.front();
    lifts_[idx] = TitsElt{theta_v, pass.front(), stheta};
  }
}

int TitsGroup::braid_order_affine(int i, int j) const {
  if (i == j) return 1;
  const IVec& bi = delta_[i].b;
  const IVec& bj = delta_[j].b;
  long long n = rd_.pair_root(bi, rd_.coroot_of(bj)) *
                rd_.pair_root(bj, rd_.coroot_of(bi));
  switch (n) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // parallel walls: infinite order
  }
}

TitsElt TitsGroup::cross_section(const ExtAffElt& x) const {
  DescentDecomposition dec = descent_decompose(rd_, x);
  TitsElt m = at_identity(rd_);
  for (int i : dec.word) m = at_mul(rd_, m, lifts_[i]);
  // m(tau) = n_lambda * n_y for tau = t_lambda y
  m = at_mul(rd_, m, lift_cocharacter(rd_, dec.tau.lambda));
  return at_mul(rd_, m, at_weyl(rd_, dec.tau.w));
}

namespace {

struct SesPartial {
  std::map<ExtAffElt, std::set<TitsElt>> fibers;
  long long words = 0;
  long long nulls = 0;
  bool null_ok = true;
  std::vector<F2Vec> kernel_eps;
};

}  // namespace

SesReport TitsGroup::ses_check(int radius) const {
  SesReport rep;
  rep.s2_dim = rd_.coroot_span_mod2().rank();
  const F2Span& span = rd_.coroot_span_mod2();
  const ExtAffElt id = ea_identity(rd_);
  std::vector<ExtAffElt> refl;
  for (const auto& a : delta_) refl.push_back(affine_reflection(rd_, a));

  std::function<void(SesPartial&, const TitsElt&, const ExtAffElt&, int)> rec =
      [&](SesPartial& p, const TitsElt& t, const ExtAffElt& x, int depth) {
        ++p.words;
        p.fibers[x].insert(t);
        if (depth > 0 && x == id) {
          ++p.nulls;
          if (!(ivec_is_zero(t.lambda) && t.w.is_identity() &&
                span.contains(t.eps)))
            p.null_ok = false;
          p.kernel_eps.push_back(t.eps);
        }
        if (depth == radius) return;
        for (std::size_t i = 0; i < delta_.size(); ++i)
          rec(p, at_mul(rd_, t, lifts_[i]), ea_mul(rd_, x, refl[i]),
              depth + 1);
      };

  // parallel over the first letter; the empty word handled separately
  std::vector<SesPartial> parts =
      sweep_map<SesPartial>(delta_.size(), [&](std::size_t i) {
        SesPartial p;
        if (radius > 0) rec(p, lifts_[i], refl[i], 1);
        return p;
      });

  std::map<ExtAffElt, std::set<TitsElt>> fibers;
  fibers[id].insert(at_identity(rd_));
  rep.words_checked = 1;
  F2Span kernel_seen;
  for (auto& p : parts) {
    rep.words_checked += p.words;
    rep.null_words += p.nulls;
    if (!p.null_ok) rep.null_in_s2 = false;
    for (const auto& e : p.kernel_eps) kernel_seen.add(e);
    for (auto& [x, set] : p.fibers)
      fibers[x].insert(set.begin(), set.end());
  }

  if (2 * static_cast<int>(rep.s2_dim) <= radius &&
      kernel_seen.rank() != rep.s2_dim)
    rep.kernel_saturated = false;

  long long full = 1;
  for (unsigned i = 0; i < rep.s2_dim; ++i) full *= 2;
  for (const auto& [x, set] : fibers) {
    ++rep.fibers_checked;
    // every fiber sits in one coset of (0, S_2, e)
    const TitsElt& base = *set.begin();
    TitsElt base_inv = at_inv(rd_, base);
    for (const TitsElt& t : set) {
      TitsElt q = at_mul(rd_, base_inv, t);
      if (!(ivec_is_zero(q.lambda) && q.w.is_identity() &&
            span.contains(q.eps))) {
        rep.fibers_ok = false;
        break;
      }
    }
    long long len = ea_length(rd_, x);
    if (len + 2 * static_cast<long long>(rep.s2_dim) <= radius &&
        static_cast<long long>(set.size()) != full)
      rep.fibers_ok = false;
    if (static_cast<long long>(set.size()) > full) rep.fibers_ok = false;
  }
  return rep;
}

CoxeterReport TitsGroup::verify_coxeter() const {
  CoxeterReport rep;
  int n = static_cast<int>(delta_.size());
  for (int i = 0; i < n; ++i) {
    CoxeterReport::Square sq;
    sq.i = i;
    TitsElt s2 = at_mul(rd_, lifts_[i], lifts_[i]);
    TitsElt expect = at_sign(rd_, F2Vec::from_ivec(rd_.coroot_of(delta_[i].b)));
    sq.pass = s2 == expect;
    sq.lhs = s2.str();
    sq.rhs = expect.str();
    rep.squares.push_back(std::move(sq));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<CoxeterReport::Pair> lines =
      sweep_map<CoxeterReport::Pair>(pairs.size(), [&](std::size_t t) {
        auto [i, j] = pairs[t];
        CoxeterReport::Pair p;
        p.i = i;
        p.j = j;
        p.order = braid_order_affine(i, j);
        if (p.order == 0) {
          p.pass = true;
          p.lhs = p.rhs = "no relation (infinite order)";
          return p;
        }
        TitsElt lhs, rhs;
        p.pass = braid_pair_holds(rd_, lifts_[i], lifts_[j], p.order, &lhs, &rhs);
        p.lhs = lhs.str();
        p.rhs = rhs.str();
        return p;
      });
  rep.pairs = std::move(lines);
  return rep;
}

}  // namespace iwahori
