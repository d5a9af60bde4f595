#include "doctest.h"

#include <random>
#include <set>

#include "iwahori/descent.hpp"

using namespace iwahori;

namespace {
RootDatum sc(TypeLabel t, int r) { return RootDatum::simply_connected({{t, r}}); }
RootDatum ad(TypeLabel t, int r) { return RootDatum::adjoint({{t, r}}); }

RootDatum so5() {
  // type D5 with lattice Z^5 (between sc and ad)
  int n = 5;
  RMat b(n, n);
  std::vector<RVec> rows(n, RVec(n, Rat(0)));
  rows[n - 1][n - 1] = Rat(1, 2); rows[n - 1][n - 2] = Rat(-1, 2);
  rows[n - 2][n - 1] = Rat(1, 2); rows[n - 2][n - 2] = Rat(1, 2);
  for (int i = n - 3; i >= 0; --i) {
    rows[i] = rows[i + 1];
    rows[i][i] += Rat(1);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = rows[i][j];
  return RootDatum({{TypeLabel::D, n}}, b, 0);
}

TitsElt random_tits(const RootDatum& rd, const TitsGroup& tg,
                    std::mt19937_64& rng, int steps = 4) {
  TitsElt t = at_identity(rd);
  for (int k = 0; k < steps; ++k)
    t = at_mul(rd, t, tg.lift_affine_simple(rng() % tg.delta().size()));
  IVec lam(rd.dim(), 0);
  for (auto& c : lam) c = static_cast<long long>(rng() % 3) - 1;
  return at_mul(rd, t, lift_cocharacter(rd, lam));
}
}  // namespace

TEST_CASE("trivial frobenius") {
  auto rd = sc(TypeLabel::A, 2);
  TitsGroup tg(rd);
  FrobeniusData fd(rd, tg, {}, "trivial");
  CHECK_FALSE(fd.has_inner());
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    TitsElt x = random_tits(rd, tg, rng);
    CHECK(fd.sigma_star(x) == x);
  }
  auto rw = relative_data(fd);
  CHECK(rw.orbits.size() == tg.delta().size());
  CHECK(rw.simple_orbits.size() == tg.delta().size());
  for (const auto& o : rw.orbits) {
    CHECK(o.param == 1);
    CHECK(o.c_a == Rat(1));
  }
  CHECK(rw.s2_dim() == 2);
}

TEST_CASE("diagram flip on A3 sc") {
  auto rd = sc(TypeLabel::A, 3);
  TitsGroup tg(rd);
  FrobeniusData fd(rd, tg, {2, 1, 0}, "trivial");
  auto rw = relative_data(fd);
  // orbits: {s1,s3} (param 2), {s2} (param 1), {extra} (param 1)
  REQUIRE(rw.orbits.size() == 3);
  std::multiset<long long> params;
  for (int oid : rw.simple_orbits) params.insert(rw.orbits[oid].param);
  CHECK(params == std::multiset<long long>{1, 1, 2});
  for (const auto& o : rw.orbits) {
    CHECK(o.finite);
    CHECK(o.c_a == Rat(1));  // all orbits here are products of A1's
    // w_X is a sigma*-fixed involution
    CHECK(ea_mul(rd, o.w_X, o.w_X) == ea_identity(rd));
    CHECK(fd.sigma_star(o.w_X) == o.w_X);
  }
  auto sec = stable_cross_section(fd, rw);
  for (const auto& l : sec.report.lines) {
    INFO(l.name);
    CHECK(l.pass);
  }
  auto chk = relative_tits_check(fd, rw, sec);
  for (const auto& l : chk.lines.lines) {
    INFO(l.name);
    CHECK(l.pass);
  }
}

TEST_CASE("sigma* is multiplicative and compatible with projection") {
  std::mt19937_64 rng(37);
  struct Cfg { RootDatum rd; std::vector<int> perm; std::string inner; };
  std::vector<Cfg> cfgs;
  cfgs.push_back({ad(TypeLabel::A, 3), {}, "nu(1)"});
  cfgs.push_back({ad(TypeLabel::A, 3), {}, "nu(1)^2"});
  cfgs.push_back({sc(TypeLabel::A, 3), {2, 1, 0}, "nu(1)"});
  cfgs.push_back({sc(TypeLabel::D, 4), {}, "nu(1)"});
  cfgs.push_back({sc(TypeLabel::D, 5), {}, "nu(5)"});
  cfgs.push_back({sc(TypeLabel::A, 1), {}, "nu(1)"});
  for (auto& cfg : cfgs) {
    TitsGroup tg(cfg.rd);
    FrobeniusData fd(cfg.rd, tg, cfg.perm, cfg.inner);
    for (int t = 0; t < 25; ++t) {
      TitsElt x = random_tits(cfg.rd, tg, rng);
      TitsElt y = random_tits(cfg.rd, tg, rng);
      CHECK(fd.sigma_star(at_mul(cfg.rd, x, y)) ==
            at_mul(cfg.rd, fd.sigma_star(x), fd.sigma_star(y)));
      CHECK(at_project(cfg.rd, fd.sigma_star(x)) ==
            fd.sigma_star(at_project(cfg.rd, x)));
    }
  }
}

TEST_CASE("inner twist datum on A1: beta, k, eta") {
  // k is the least integer with k beta_ad in j(X_*(T)), so it depends on
  // the isogeny: 1 for the adjoint lattice, 2 for the simply connected one.
  {
    auto rd = ad(TypeLabel::A, 1);
    TitsGroup tg(rd);
    FrobeniusData fd(rd, tg, {}, "nu(1)");
    REQUIRE(fd.has_inner());
    const auto& itd = fd.inner();
    CHECK(itd.beta_ad == RVec{Rat(1, 2)});
    CHECK(itd.k == 1);
    CHECK(rd.to_ambient(itd.eta) == RVec{Rat(1, 2)});
    CHECK(itd.z == rd.simple_reflection(0));
    CHECK(itd.power == 1);
  }
  {
    auto rd = sc(TypeLabel::A, 1);
    TitsGroup tg(rd);
    FrobeniusData fd(rd, tg, {}, "nu(1)");
    REQUIRE(fd.has_inner());
    const auto& itd = fd.inner();
    CHECK(itd.beta_ad == RVec{Rat(1, 2)});
    CHECK(itd.k == 2);  // smallest k with k omega^vee in Z alpha^vee
    CHECK(itd.eta == IVec{1});  // eta = alpha^vee
    CHECK(itd.z == rd.simple_reflection(0));
  }
}

TEST_CASE("A1 sc anisotropic twist") {
  auto rd = sc(TypeLabel::A, 1);
  TitsGroup tg(rd);
  FrobeniusData fd(rd, tg, {}, "nu(1)");
  REQUIRE(fd.has_inner());
  CHECK(fd.inner().k == 2);
  // sigma* swaps the two affine nodes
  CHECK(fd.sigma_star_node(0) == 1);
  CHECK(fd.sigma_star_node(1) == 0);
  auto rw = relative_data(fd);
  REQUIRE(rw.orbits.size() == 1);
  CHECK_FALSE(rw.orbits[0].finite);
  CHECK(rw.simple_orbits.empty());  // S is empty: anisotropic form
  // S_2 strictly contains the span of relative coroots (dim 1 > 0)
  CHECK(rw.s2_dim() == 1);
  auto sec = stable_cross_section(fd, rw);
  for (const auto& l : sec.report.lines) {
    INFO(l.name);
    CHECK(l.pass);
  }
  auto chk = relative_tits_check(fd, rw, sec);
  CHECK(chk.all_pass());
  CHECK(chk.rel_coroot_span_dim == 0);
  CHECK(chk.s2_dim == 1);
}

TEST_CASE("lemma: sigma*(tau) = sigma(tau) on Omega") {
  auto rd = ad(TypeLabel::A, 3);
  TitsGroup tg(rd);
  for (const char* label : {"nu(1)", "nu(1)^2", "nu(1)^3"}) {
    FrobeniusData fd(rd, tg, {}, label);
    for (const auto& om : omega_group(rd).elements)
      CHECK(fd.sigma_star(om.x) == fd.sigma_ext(om.x));
  }
}

TEST_CASE("A3 ad with each nu power: descent battery") {
  auto rd = ad(TypeLabel::A, 3);
  TitsGroup tg(rd);
  for (const char* label : {"trivial", "nu(1)", "nu(1)^2", "nu(1)^3"}) {
    FrobeniusData fd(rd, tg, {}, label);
    auto rw = relative_data(fd);
    auto sec = stable_cross_section(fd, rw);
    for (const auto& l : sec.report.lines) {
      INFO(label, " / ", l.name);
      CHECK(l.pass);
    }
    auto chk = relative_tits_check(fd, rw, sec);
    for (const auto& l : chk.lines.lines) {
      INFO(label, " / ", l.name);
      CHECK(l.pass);
    }
  }
}

TEST_CASE("D4 sc with the three nu's; D5 sc with nu0 powers") {
  {
    auto rd = sc(TypeLabel::D, 4);
    TitsGroup tg(rd);
    for (const char* label : {"nu(1)", "nu(3)", "nu(4)"}) {
      FrobeniusData fd(rd, tg, {}, label);
      REQUIRE(fd.has_inner());
      CHECK(fd.inner().power == -1);  // D-even: g_z = n_z directly
      auto rw = relative_data(fd);
      auto sec = stable_cross_section(fd, rw);
      for (const auto& l : sec.report.lines) {
        INFO(label, " / ", l.name);
        CHECK(l.pass);
      }
      auto chk = relative_tits_check(fd, rw, sec);
      for (const auto& l : chk.lines.lines) {
        INFO(label, " / ", l.name);
        CHECK(l.pass);
      }
    }
  }
  {
    auto rd = sc(TypeLabel::D, 5);
    TitsGroup tg(rd);
    for (const char* label : {"nu(5)", "nu(5)^2", "nu(5)^3"}) {
      FrobeniusData fd(rd, tg, {}, label);
      auto rw = relative_data(fd);
      auto sec = stable_cross_section(fd, rw);
      for (const auto& l : sec.report.lines) {
        INFO(label, " / ", l.name);
        CHECK(l.pass);
      }
      auto chk = relative_tits_check(fd, rw, sec);
      CHECK(chk.all_pass());
    }
  }
}

TEST_CASE("D4 sc triality") {
  auto rd = sc(TypeLabel::D, 4);
  TitsGroup tg(rd);
  FrobeniusData fd(rd, tg, {2, 1, 3, 0}, "trivial");
  auto rw = relative_data(fd);
  std::multiset<long long> params;
  for (int oid : rw.simple_orbits) params.insert(rw.orbits[oid].param);
  // orbits {1,3,4} (A1^3), {2}, {extra}
  CHECK(params == std::multiset<long long>{1, 1, 3});
  auto sec = stable_cross_section(fd, rw);
  for (const auto& l : sec.report.lines) CHECK(l.pass);
  auto chk = relative_tits_check(fd, rw, sec);
  CHECK(chk.all_pass());
}

TEST_CASE("D5 intermediate lattice: the t = 1 mechanism for m(tau)") {
  auto rd = so5();
  TitsGroup tg(rd);
  // Omega(X = Z^5) = Z/2; tau has finite part y = z0^2
  auto og = omega_group(rd);
  CHECK(og.finite);
  CHECK(og.order == 2);
  FrobeniusData fd(rd, tg, {}, "trivial");
  auto rw = relative_data(fd);
  CHECK(rw.omega_fixed.size() == 2);
  auto sec = stable_cross_section(fd, rw);
  for (const auto& l : sec.report.lines) {
    INFO(l.name);
    CHECK(l.pass);
  }
  // the nontrivial tau's finite part really is z0^2
  bool found = false;
  auto z0 = rd.y_paren(4);
  for (const auto& om : rw.omega_fixed)
    if (!(om.x == ea_identity(rd))) {
      CHECK(om.x.w == rd.multiply(z0, z0));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("invalid inner labels") {
  auto rd = sc(TypeLabel::A, 3);
  TitsGroup tg(rd);
  // with the flip, only powers below |(Omega_ad)_sigma| = 2 name classes
  CHECK_THROWS_AS(FrobeniusData(rd, tg, {2, 1, 0}, "nu(1)^2"),
                  std::invalid_argument);
  CHECK_NOTHROW(FrobeniusData(rd, tg, {2, 1, 0}, "nu(1)"));
  // non-minuscule node
  auto rdc = sc(TypeLabel::C, 3);
  TitsGroup tgc(rdc);
  CHECK_THROWS_AS(FrobeniusData(rdc, tgc, {}, "nu(1)"), std::invalid_argument);
  // malformed labels
  CHECK_THROWS_AS(FrobeniusData(rd, tg, {}, "nu[1]"), std::invalid_argument);
  CHECK_THROWS_AS(FrobeniusData(rd, tg, {}, "nu(9)"), std::invalid_argument);
  // bad permutations
  CHECK_THROWS_AS(FrobeniusData(rd, tg, {0, 0, 1}, "trivial"),
                  std::invalid_argument);
  CHECK_THROWS_AS(FrobeniusData(rd, tg, {1, 0, 2}, "trivial"),
                  std::invalid_argument);  // not a diagram automorphism
}

TEST_CASE("A2 flip: no sigma-stable sign system in the 2-torsion model") {
  auto rd = sc(TypeLabel::A, 2);
  TitsGroup tg(rd);
  CHECK_THROWS_AS(FrobeniusData(rd, tg, {1, 0}, "trivial"), std::domain_error);
}

TEST_CASE("res product: two A2 components with cyclic sigma") {
  RootDatum rd = RootDatum::simply_connected(
      {{TypeLabel::A, 2}, {TypeLabel::A, 2}});
  TitsGroup tg(rd);
  // sigma swaps the components: nodes (0,1) <-> (2,3)
  FrobeniusData fd(rd, tg, {2, 3, 0, 1}, "trivial");
  auto rw = relative_data(fd);
  // orbits pair up the two components: {s1,s1'}, {s2,s2'}, {extra,extra'}
  CHECK(rw.simple_orbits.size() == 3);
  for (int oid : rw.simple_orbits) {
    CHECK(rw.orbits[oid].nodes.size() == 2);
    CHECK(rw.orbits[oid].param == 2);
  }
  auto sec = stable_cross_section(fd, rw);
  for (const auto& l : sec.report.lines) {
    INFO(l.name);
    CHECK(l.pass);
  }
  auto chk = relative_tits_check(fd, rw, sec);
  CHECK(chk.all_pass());
}

TEST_CASE("relative lengths and braid orders on the A3 flip") {
  auto rd = sc(TypeLabel::A, 3);
  TitsGroup tg(rd);
  FrobeniusData fd(rd, tg, {2, 1, 0}, "trivial");
  auto rw = relative_data(fd);
  REQUIRE(rw.simple_orbits.size() == 3);
  // relative lengths: each w_X has relative length 1
  for (int oid : rw.simple_orbits)
    CHECK(rel_length(rd, rw, rw.orbits[oid].w_X) == 1);
  CHECK(rel_length(rd, rw, ea_identity(rd)) == 0);
  // a non-fixed element is rejected
  CHECK(rel_length(rd, rw, ea_from_weyl(rd, rd.simple_reflection(0))) == -1);
  // the relative diagram is an affine C2: orders {4,4,2} in some labeling
  std::multiset<int> orders;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      orders.insert(rel_braid_order(rd, rw, static_cast<int>(i),
                                    static_cast<int>(j)));
  CHECK(orders == std::multiset<int>{2, 4, 4});
}
