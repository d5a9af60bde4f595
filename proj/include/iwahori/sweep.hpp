#pragma once

#include <cstddef>
#include <vector>

#ifdef IWAHORI_HAVE_OPENMP
#include <omp.h>
#endif

namespace iwahori {

// Execution mode for the verification sweeps. The parallel kernels and the
// serial reference produce identical results (results are merged in index
// order); the test suite checks this on real workloads and tools/bench_sweeps
// compares their throughput.
enum class SweepMode { Serial, Parallel };

SweepMode& sweep_mode();

// Count indices in [0, n) satisfying pred.
template <class Pred>
std::size_t sweep_count_serial(std::size_t n, Pred&& pred) {
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) ++cnt;
  return cnt;
}

template <class Pred>
std::size_t sweep_count_parallel(std::size_t n, Pred&& pred) {
#ifdef IWAHORI_HAVE_OPENMP
  long long cnt = 0;
#pragma omp parallel for schedule(static) reduction(+ : cnt)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    if (pred(static_cast<std::size_t>(i))) ++cnt;
  return static_cast<std::size_t>(cnt);
#else
  return sweep_count_serial(n, pred);
#endif
}

template <class Pred>
std::size_t sweep_count(std::size_t n, Pred&& pred) {
  return sweep_mode() == SweepMode::Parallel
             ? sweep_count_parallel(n, pred)
             : sweep_count_serial(n, pred);
}

// Collect indices in [0, n) failing a check, in increasing order.
template <class Pred>
std::vector<std::size_t> sweep_failures_serial(std::size_t n, Pred&& ok) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < n; ++i)
    if (!ok(i)) bad.push_back(i);
  return bad;
}

template <class Pred>
std::vector<std::size_t> sweep_failures_parallel(std::size_t n, Pred&& ok) {
#ifdef IWAHORI_HAVE_OPENMP
  int nt = omp_get_max_threads();
  std::vector<std::vector<std::size_t>> per(nt);
#pragma omp parallel
  {
    int t = omp_get_thread_num();
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      if (!ok(static_cast<std::size_t>(i)))
        per[t].push_back(static_cast<std::size_t>(i));
  }
  std::vector<std::size_t> bad;
  for (auto& v : per) bad.insert(bad.end(), v.begin(), v.end());
  std::sort(bad.begin(), bad.end());
  return bad;
#else
  return sweep_failures_serial(n, ok);
#endif
}

template <class Pred>
std::vector<std::size_t> sweep_failures(std::size_t n, Pred&& ok) {
  return sweep_mode() == SweepMode::Parallel
             ? sweep_failures_parallel(n, ok)
             : sweep_failures_serial(n, ok);
}

// Per-index results, deterministic order.
template <class T, class Fn>
std::vector<T> sweep_map_serial(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

template <class T, class Fn>
std::vector<T> sweep_map_parallel(std::size_t n, Fn&& fn) {
#ifdef IWAHORI_HAVE_OPENMP
  std::vector<T> out(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    out[i] = fn(static_cast<std::size_t>(i));
  return out;
#else
  return sweep_map_serial<T>(n, fn);
#endif
}

template <class T, class Fn>
std::vector<T> sweep_map(std::size_t n, Fn&& fn) {
  return sweep_mode() == SweepMode::Parallel ? sweep_map_parallel<T>(n, fn)
                                             : sweep_map_serial<T>(n, fn);
}

}  // namespace iwahori
