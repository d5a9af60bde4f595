// Benchmark: the OpenMP sweep kernels against the serial reference on the
// three heaviest verification workloads.

#include <chrono>
#include <cstdio>

#include "iwahori/descent.hpp"
#include "iwahori/hecke.hpp"
#include "iwahori/sweep.hpp"

using namespace iwahori;

namespace {

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void run(const char* name, void (*work)()) {
  sweep_mode() = SweepMode::Serial;
  double serial = time_ms(work);
  sweep_mode() = SweepMode::Parallel;
  double parallel = time_ms(work);
  std::printf("%-40s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n",
              name, serial, parallel, serial / parallel);
}

void oracle_sweep() {
  auto rd = RootDatum::simply_connected({{TypeLabel::A, 3}});
  auto res = check_matrix_oracle(rd);
  if (res.mismatches != 0) std::printf("unexpected mismatch!\n");
}

void oracle_sampled() {
  auto rd = RootDatum::simply_connected({{TypeLabel::C, 3}});
  auto res = check_matrix_oracle(rd, 40000, 0);
  if (res.mismatches != 0) std::printf("unexpected mismatch!\n");
}

void ses_sweep() {
  auto rd = RootDatum::simply_connected({{TypeLabel::A, 3}});
  TitsGroup tg(rd);
  auto rep = tg.ses_check(6);
  if (!rep.null_in_s2) std::printf("unexpected failure!\n");
}

void coxeter_sweep() {
  auto rd = RootDatum::simply_connected({{TypeLabel::F, 4}});
  TitsGroup tg(rd);
  auto rep = tg.verify_coxeter();
  if (!rep.all_pass()) std::printf("unexpected failure!\n");
}

}  // namespace

int main() {
  std::printf("sweep kernels: serial reference vs OpenMP\n\n");
  run("oracle pair sweep (A3, exhaustive)", oracle_sweep);
  run("oracle pair sweep (C3, 40k sampled)", oracle_sampled);
  run("ses word sweep (A3, radius 6)", ses_sweep);
  run("coxeter pair battery (F4 affine)", coxeter_sweep);
  return 0;
}
