#include "doctest.h"

#include <random>
#include <set>

#include "iwahori/affine.hpp"

using namespace iwahori;

namespace {
RootDatum sc(TypeLabel t, int r) { return RootDatum::simply_connected({{t, r}}); }
RootDatum ad(TypeLabel t, int r) { return RootDatum::adjoint({{t, r}}); }

ExtAffElt random_ea(const RootDatum& rd, std::mt19937_64& rng, int steps) {
  auto delta = affine_simple_roots(rd);
  ExtAffElt x = ea_identity(rd);
  std::uniform_int_distribution<std::size_t> pick(0, delta.size() - 1);
  for (int i = 0; i < steps; ++i)
    x = ea_mul(rd, x, affine_reflection(rd, delta[pick(rng)]));
  return x;
}
}  // namespace

TEST_CASE("affine root action") {
  auto rd = sc(TypeLabel::A, 1);
  auto delta = affine_simple_roots(rd);
  REQUIRE(delta.size() == 2);
  CHECK(delta[0] == AffineRoot{IVec{1}, 0});
  CHECK(delta[1] == AffineRoot{IVec{-1}, 1});
  // identity
  CHECK(act_affine_root(rd, ea_identity(rd), delta[1]) == delta[1]);
  // t_lambda on (b,k) -> (b, k - <b,lambda>)
  ExtAffElt t = ea_translation(rd, IVec{1});  // t_{alpha^vee}
  CHECK(act_affine_root(rd, t, AffineRoot{IVec{-1}, 1}) ==
        AffineRoot{IVec{-1}, 3});
  CHECK(act_affine_root(rd, t, AffineRoot{IVec{1}, 0}) ==
        AffineRoot{IVec{1}, -2});
}

TEST_CASE("affine action is a group action") {
  std::mt19937_64 rng(5);
  for (auto rd : {sc(TypeLabel::A, 2), sc(TypeLabel::C, 2), ad(TypeLabel::A, 3)}) {
    auto delta = affine_simple_roots(rd);
    for (int t = 0; t < 40; ++t) {
      auto x = random_ea(rd, rng, 4);
      auto y = random_ea(rd, rng, 4);
      for (const auto& a : delta)
        CHECK(act_affine_root(rd, ea_mul(rd, x, y), a) ==
              act_affine_root(rd, x, act_affine_root(rd, y, a)));
    }
  }
}

TEST_CASE("descent decomposition, A1 sc translation") {
  auto rd = sc(TypeLabel::A, 1);
  auto dec = descent_decompose(rd, ea_translation(rd, IVec{1}));
  // t_{alpha^vee} = s0 * s1, length 2 (closed formula: <2 rho, alpha^vee> = 2)
  CHECK(dec.word == std::vector<int>{1, 0});
  CHECK(dec.tau == ea_identity(rd));
  CHECK(ea_length(rd, ea_translation(rd, IVec{1})) == 2);
}

TEST_CASE("descent decomposition basics") {
  auto rd = sc(TypeLabel::A, 2);
  auto dec = descent_decompose(rd, ea_identity(rd));
  CHECK(dec.word.empty());
  CHECK(dec.tau == ea_identity(rd));
}

TEST_CASE("A1 ad has the length-zero element t_{omega} s1") {
  auto rd = ad(TypeLabel::A, 1);
  ExtAffElt nu{IVec{1}, rd.simple_reflection(0)};  // omega^vee has coords (1)
  CHECK(ea_length(rd, nu) == 0);
  auto dec = descent_decompose(rd, nu);
  CHECK(dec.word.empty());
  CHECK(dec.tau == nu);
  auto om = make_omega(rd, nu);
  CHECK(om.perm == std::vector<int>{1, 0});  // swaps s0 <-> s1
}

TEST_CASE("both length routes agree on the full l <= 10 balls") {
  for (auto rd : {sc(TypeLabel::A, 1), sc(TypeLabel::A, 2), sc(TypeLabel::C, 2),
                  sc(TypeLabel::G, 2)}) {
    std::vector<ExtAffElt> refl;
    for (const auto& a : affine_simple_roots(rd))
      refl.push_back(affine_reflection(rd, a));
    std::set<ExtAffElt> ball{ea_identity(rd)};
    std::vector<ExtAffElt> frontier{ea_identity(rd)};
    for (int step = 0; step < 10; ++step) {
      std::vector<ExtAffElt> next;
      for (const auto& x : frontier)
        for (const auto& s : refl) {
          auto y = ea_mul(rd, x, s);
          if (ball.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    std::size_t checked = 0;
    for (const auto& x : ball) {
      auto dec = descent_decompose(rd, x);
      CHECK(static_cast<long long>(dec.word.size()) == ea_length(rd, x));
      ++checked;
    }
    CHECK(checked == ball.size());
    CHECK(checked >= 21);  // affine A1: exactly 2*10 + 1 elements
  }
}

TEST_CASE("walk length agrees with closed formula and reduces correctly") {
  std::mt19937_64 rng(7);
  for (auto rd : {sc(TypeLabel::A, 1), sc(TypeLabel::A, 2), sc(TypeLabel::C, 2),
                  sc(TypeLabel::G, 2), ad(TypeLabel::A, 2), ad(TypeLabel::C, 2)}) {
    auto delta = affine_simple_roots(rd);
    for (int t = 0; t < 60; ++t) {
      auto x = random_ea(rd, rng, 1 + static_cast<int>(rng() % 10));
      auto dec = descent_decompose(rd, x);
      long long len = ea_length(rd, x);
      CHECK(static_cast<long long>(dec.word.size()) == len);
      CHECK(ea_length(rd, dec.tau) == 0);
      // re-multiplication reproduces x
      ExtAffElt prod = ea_identity(rd);
      for (int i : dec.word)
        prod = ea_mul(rd, prod, affine_reflection(rd, delta[i]));
      prod = ea_mul(rd, prod, dec.tau);
      CHECK(prod == x);
      // subadditivity
      auto y = random_ea(rd, rng, 1 + static_cast<int>(rng() % 6));
      CHECK(ea_length(rd, ea_mul(rd, x, y)) <= len + ea_length(rd, y));
      CHECK(ea_length(rd, ea_inv(rd, x)) == len);
    }
  }
}

TEST_CASE("omega group: sc trivial") {
  for (auto rd : {sc(TypeLabel::A, 2), sc(TypeLabel::D, 4), sc(TypeLabel::G, 2)}) {
    auto og = omega_group(rd);
    CHECK(og.finite);
    CHECK(og.order == 1);
    CHECK(og.generators.empty());
  }
}

TEST_CASE("omega group: A_n ad cyclic of order n+1") {
  for (int n : {1, 2, 3, 4, 5}) {
    auto rd = ad(TypeLabel::A, n);
    auto og = omega_group(rd);
    CHECK(og.finite);
    CHECK(og.order == n + 1);
    // elements pairwise distinct, all length zero, and the set equals
    // {1, nu_(1), ..., nu_(n)}
    std::set<ExtAffElt> elems;
    for (const auto& om : og.elements) elems.insert(om.x);
    CHECK(elems.size() == static_cast<std::size_t>(n + 1));
    std::set<ExtAffElt> expected{ea_identity(rd)};
    for (int i = 0; i < n; ++i) expected.insert(nu_ad(rd, i).x);
    CHECK(elems == expected);
    // nu_(1) generates
    auto nu1 = nu_ad(rd, 0).x;
    std::set<ExtAffElt> gen;
    ExtAffElt p = ea_identity(rd);
    for (int i = 0; i <= n; ++i) {
      gen.insert(p);
      p = ea_mul(rd, p, nu1);
    }
    CHECK(p == ea_identity(rd));
    CHECK(gen == expected);
  }
}

TEST_CASE("omega group: GL2-style lattice is infinite cyclic") {
  RMat b(2, 2);
  b(0, 0) = Rat(1, 2); b(0, 1) = Rat(1, 2);
  b(1, 0) = Rat(-1, 2); b(1, 1) = Rat(1, 2);
  RootDatum rd({{TypeLabel::A, 1}}, b, 1);
  auto og = omega_group(rd);
  CHECK_FALSE(og.finite);
  CHECK(og.free_rank == 1);
  CHECK(og.torsion.empty());
  REQUIRE(og.generators.size() == 1);
  CHECK(ea_length(rd, og.generators[0].x) == 0);
  // powers stay length zero (Omega is a subgroup)
  auto g = og.generators[0].x;
  ExtAffElt p = g;
  for (int i = 0; i < 4; ++i) {
    CHECK(ea_length(rd, p) == 0);
    p = ea_mul(rd, p, g);
  }
}

TEST_CASE("omega conjugation permutes the affine diagram") {
  auto rd = ad(TypeLabel::A, 2);
  auto nu1 = nu_ad(rd, 0);
  // 3-cycle: extra node -> s1 -> s2 -> extra node
  CHECK(nu1.perm == std::vector<int>{1, 2, 0});
  // conjugation identity: tau s_a tau^{-1} = s_{tau(a)}
  auto delta = affine_simple_roots(rd);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    auto lhs = ea_mul(rd, ea_mul(rd, nu1.x, affine_reflection(rd, delta[i])),
                      ea_inv(rd, nu1.x));
    CHECK(lhs == affine_reflection(rd, delta[nu1.perm[i]]));
  }
  // trivial tau
  auto id = make_omega(rd, ea_identity(rd));
  CHECK(id.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("omega elements are exactly the descent-free elements") {
  std::mt19937_64 rng(11);
  for (auto rd : {ad(TypeLabel::A, 3), ad(TypeLabel::C, 2)}) {
    auto og = omega_group(rd);
    for (const auto& om : og.elements) {
      auto dec = descent_decompose(rd, om.x);
      CHECK(dec.word.empty());
    }
    // random sampling: any element is word * tau with tau in the group
    std::set<ExtAffElt> omset;
    for (const auto& om : og.elements) omset.insert(om.x);
    for (int t = 0; t < 30; ++t) {
      auto x = random_ea(rd, rng, 5);
      // multiply by a random omega element
      auto it = omset.begin();
      std::advance(it, rng() % omset.size());
      x = ea_mul(rd, x, *it);
      CHECK(omset.count(descent_decompose(rd, x).tau) == 1);
    }
  }
}

TEST_CASE("length-zero group orders on ad data") {
  struct Row { TypeLabel t; int r; long long order; };
  for (auto row : {Row{TypeLabel::A, 1, 2}, Row{TypeLabel::A, 5, 6},
                   Row{TypeLabel::B, 3, 2}, Row{TypeLabel::C, 3, 2},
                   Row{TypeLabel::D, 4, 4}, Row{TypeLabel::D, 5, 4},
                   Row{TypeLabel::E, 6, 3}}) {
    auto og = omega_group(ad(row.t, row.r));
    CHECK(og.finite);
    CHECK(og.order == row.order);
  }
  // D4: Klein four group; D5: cyclic of order 4
  CHECK(omega_group(ad(TypeLabel::D, 4)).torsion == std::vector<long long>{2, 2});
  CHECK(omega_group(ad(TypeLabel::D, 5)).torsion == std::vector<long long>{4});
}

TEST_CASE("nu_ad elements match the table generators") {
  // C3: Omega = Z/2 generated by nu_(3)
  auto rd = ad(TypeLabel::C, 3);
  auto nu = nu_ad(rd, 2);
  CHECK(ea_length(rd, nu.x) == 0);
  CHECK(ea_mul(rd, nu.x, nu.x) == ea_identity(rd));
  // B3: generated by nu_(1)
  auto rdb = ad(TypeLabel::B, 3);
  auto nub = nu_ad(rdb, 0);
  CHECK(ea_mul(rdb, nub.x, nub.x) == ea_identity(rdb));
  // D5: nu_(5) has order 4
  auto rdd = ad(TypeLabel::D, 5);
  auto nud = nu_ad(rdd, 4);
  CHECK(ea_pow(rdd, nud.x, 2) != ea_identity(rdd));
  CHECK(ea_pow(rdd, nud.x, 4) == ea_identity(rdd));
  // E6: nu_(1) has order 3
  auto rde = ad(TypeLabel::E, 6);
  auto nue = nu_ad(rde, 0);
  CHECK(ea_pow(rde, nue.x, 3) == ea_identity(rde));
  CHECK(ea_pow(rde, nue.x, 1) != ea_identity(rde));
  // non-minuscule node rejected
  CHECK_THROWS(nu_ad(rd, 0));  // C3 node 1 is not minuscule
}
