#include "doctest.h"

#include <set>

#include "iwahori/descent.hpp"
#include "iwahori/sweep.hpp"

using namespace iwahori;

// The OpenMP kernels and the serial reference must produce identical
// results on the real verification workloads.

namespace {
struct ModeGuard {
  SweepMode saved;
  ModeGuard() : saved(sweep_mode()) {}
  ~ModeGuard() { sweep_mode() = saved; }
};
}  // namespace

TEST_CASE("kernel primitives agree between serial and parallel") {
  auto pred = [](std::size_t i) { return i % 7 == 3; };
  CHECK(sweep_count_serial(10000, pred) == sweep_count_parallel(10000, pred));
  auto ok = [](std::size_t i) { return i % 113 != 0; };
  CHECK(sweep_failures_serial(5000, ok) == sweep_failures_parallel(5000, ok));
  auto fn = [](std::size_t i) { return static_cast<long long>(i * i % 97); };
  CHECK(sweep_map_serial<long long>(3000, fn) ==
        sweep_map_parallel<long long>(3000, fn));
  CHECK(sweep_count_serial(0, pred) == sweep_count_parallel(0, pred));
}

TEST_CASE("oracle sweep agrees across modes") {
  ModeGuard guard;
  auto rd = RootDatum::simply_connected({{TypeLabel::A, 2}});
  sweep_mode() = SweepMode::Serial;
  auto serial = check_matrix_oracle(rd);
  sweep_mode() = SweepMode::Parallel;
  auto parallel = check_matrix_oracle(rd);
  CHECK(serial.pairs_checked == parallel.pairs_checked);
  CHECK(serial.mismatches == parallel.mismatches);
  CHECK(serial.injective == parallel.injective);
}

TEST_CASE("coxeter battery agrees across modes") {
  ModeGuard guard;
  auto rd = RootDatum::simply_connected({{TypeLabel::C, 3}});
  TitsGroup tg(rd);
  sweep_mode() = SweepMode::Serial;
  auto serial = tg.verify_coxeter();
  sweep_mode() = SweepMode::Parallel;
  auto parallel = tg.verify_coxeter();
  REQUIRE(serial.pairs.size() == parallel.pairs.size());
  for (std::size_t i = 0; i < serial.pairs.size(); ++i) {
    CHECK(serial.pairs[i].order == parallel.pairs[i].order);
    CHECK(serial.pairs[i].pass == parallel.pairs[i].pass);
    CHECK(serial.pairs[i].lhs == parallel.pairs[i].lhs);
  }
}

TEST_CASE("ses sweep agrees across modes") {
  ModeGuard guard;
  auto rd = RootDatum::adjoint({{TypeLabel::A, 2}});
  TitsGroup tg(rd);
  sweep_mode() = SweepMode::Serial;
  auto serial = tg.ses_check(4);
  sweep_mode() = SweepMode::Parallel;
  auto parallel = tg.ses_check(4);
  CHECK(serial.words_checked == parallel.words_checked);
  CHECK(serial.null_words == parallel.null_words);
  CHECK(serial.null_in_s2 == parallel.null_in_s2);
  CHECK(serial.kernel_saturated == parallel.kernel_saturated);
  CHECK(serial.fibers_ok == parallel.fibers_ok);
}
