// Benchmark of the OpenMP kernels against their serial reference
// implementations. Exact arithmetic means both variants must produce
// identical matrices; this harness checks that on every case while timing.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "soclelab/matrix.hpp"

namespace {

using namespace soclelab;
using Clock = std::chrono::steady_clock;

Mat random_mat(FieldCtx f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (f.is_rationals()) {
        m.at(r, c) = Scalar::of(f, static_cast<long long>(rng() % 19) - 9,
                                1 + static_cast<long long>(rng() % 4));
      } else {
        m.at(r, c) = Scalar::of_residue(f, rng() % f.characteristic());
      }
    }
  }
  return m;
}

template <typename Fn>
double time_ms(std::size_t reps, Fn&& fn) {
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < reps; ++i) fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / static_cast<double>(reps);
}

void bench_mul(FieldCtx f, std::size_t n, std::size_t reps, std::mt19937_64& rng) {
  Mat a = random_mat(f, n, n, rng);
  Mat b = random_mat(f, n, n, rng);
  Mat serial = kernels::mul_serial(a, b);
  Mat parallel = kernels::mul(a, b, kernels::Exec::Parallel);
  const bool same = (serial == parallel);
  double ts = time_ms(reps, [&] { (void)kernels::mul_serial(a, b); });
  double tp = time_ms(reps, [&] { (void)kernels::mul(a, b, kernels::Exec::Parallel); });
  std::cout << "mul   " << f.to_string() << "  " << n << "x" << n << "   serial " << ts
            << " ms   parallel " << tp << " ms   speedup " << (tp > 0 ? ts / tp : 0)
            << "   identical " << (same ? "yes" : "NO") << "\n";
  if (!same) std::exit(1);
}

void bench_rref(FieldCtx f, std::size_t rows, std::size_t cols, std::size_t reps,
                std::mt19937_64& rng) {
  Mat a = random_mat(f, rows, cols, rng);
  RrefResult serial = kernels::rref_serial(a);
  RrefResult parallel = kernels::rref(a, kernels::Exec::Parallel);
  const bool same = (serial.mat == parallel.mat) && (serial.pivots == parallel.pivots);
  double ts = time_ms(reps, [&] { (void)kernels::rref_serial(a); });
  double tp = time_ms(reps, [&] { (void)kernels::rref(a, kernels::Exec::Parallel); });
  std::cout << "rref  " << f.to_string() << "  " << rows << "x" << cols << " serial " << ts
            << " ms   parallel " << tp << " ms   speedup " << (tp > 0 ? ts / tp : 0)
            << "   identical " << (same ? "yes" : "NO") << "\n";
  if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t reps = 5;
  if (argc > 1) reps = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
  if (reps == 0) reps = 1;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << ", reps per case: " << reps << "\n";
#else
  std::cout << "built without OpenMP; parallel variant degrades to serial\n";
#endif

  std::mt19937_64 rng(0x62656e6368ull);
  FieldCtx gf = FieldCtx::gf(17);
  FieldCtx qq = FieldCtx::rationals();

  bench_mul(gf, 64, reps, rng);
  bench_mul(gf, 128, reps, rng);
  bench_mul(gf, 192, reps, rng);
  bench_mul(qq, 48, reps, rng);

  bench_rref(gf, 96, 144, reps, rng);
  bench_rref(gf, 192, 256, reps, rng);
  bench_rref(qq, 40, 60, reps, rng);

  std::cout << "all parallel results identical to the serial reference\n";
  return 0;
}
