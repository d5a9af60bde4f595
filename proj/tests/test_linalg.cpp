#include "doctest.h"

#include "iwahori/f2.hpp"
#include "iwahori/linalg.hpp"
#include "iwahori/rational.hpp"

using namespace iwahori;

TEST_CASE("rational arithmetic") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(1, -2) < Rat(0));
  CHECK(Rat(7, 1).to_int() == 7);
  CHECK_THROWS(Rat(1, 2).to_int());
  CHECK((Rat(3, 4) * Rat(4, 3)).to_int() == 1);
}

TEST_CASE("rmat inverse") {
  RMat m(2, 2);
  m(0, 0) = Rat(2); m(0, 1) = Rat(-1);
  m(1, 0) = Rat(-1); m(1, 1) = Rat(2);
  RMat inv = rmat_inverse(m);
  CHECK(m * inv == RMat::identity(2));
  CHECK(inv(0, 0) == Rat(2, 3));
}

TEST_CASE("solve_left") {
  RMat a(2, 3);
  a(0, 0) = Rat(1); a(0, 1) = Rat(0); a(0, 2) = Rat(2);
  a(1, 0) = Rat(0); a(1, 1) = Rat(1); a(1, 2) = Rat(1);
  RVec b{Rat(3), Rat(4), Rat(10)};
  RVec x;
  CHECK(solve_left(a, b, x));
  CHECK(x[0] == Rat(3));
  CHECK(x[1] == Rat(4));
  RVec bad{Rat(1), Rat(0), Rat(0)};
  CHECK_FALSE(solve_left(a, bad, x));
}

TEST_CASE("smith normal form") {
  IMat a(2, 2);
  a(0, 0) = 2; a(0, 1) = 4;
  a(1, 0) = 6; a(1, 1) = 8;
  auto s = smith_normal_form(a);
  CHECK(s.diag == std::vector<long long>{2, 4});
  CHECK(s.u * a * s.v == s.d);

  // A3 Cartan: quotient P/Q has order 4
  IMat c(3, 3);
  long long cart[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = cart[i][j];
  auto s2 = smith_normal_form(c);
  long long prod = 1;
  for (auto d : s2.diag) prod *= d;
  CHECK(prod == 4);
}

TEST_CASE("hnf membership and denominators") {
  IMat a(2, 2);
  a(0, 0) = 1; a(0, 1) = -1;
  a(1, 0) = 1; a(1, 1) = 1;
  IMat h = row_hnf(a);
  CHECK(hnf_contains(h, IVec{2, 0}));
  CHECK_FALSE(hnf_contains(h, IVec{1, 0}));
  CHECK(hnf_denominator(h, RVec{Rat(1), Rat(0)}) == 2);
  CHECK(hnf_denominator(h, RVec{Rat(1), Rat(1)}) == 1);
}

TEST_CASE("f2 span") {
  F2Span sp;
  CHECK(sp.add(F2Vec::from_ivec(IVec{1, 0, 1})));
  CHECK(sp.add(F2Vec::from_ivec(IVec{0, 1, 0})));
  CHECK_FALSE(sp.add(F2Vec::from_ivec(IVec{1, 1, 1})));
  CHECK(sp.rank() == 2);
  CHECK(sp.contains(F2Vec::from_ivec(IVec{1, 1, 1})));
  CHECK_FALSE(sp.contains(F2Vec::from_ivec(IVec{0, 0, 1})));
  CHECK(sp.enumerate().size() == 4);
}
