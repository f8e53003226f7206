/*
 * Copyright 2026 The frobkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Compares the serial and OpenMP row-reduction kernels on random square
// matrices and verifies they agree while timing them.

#include <chrono>
#include <cstdio>
#include <random>

#include "frobkit/fpmatrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace frobkit;

static FpMatrix random_matrix(std::uint32_t p, int n, std::mt19937& rng) {
  FpMatrix m(p, n, n);
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = d(rng);
  return m;
}

template <typename Fn>
static double time_ms(Fn&& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled at build time\n");
#endif
  std::printf("%8s %8s %12s %12s %8s\n", "p", "n", "serial(ms)", "omp(ms)",
              "speedup");
  std::mt19937 rng(12345);
  for (std::uint32_t p : {2u, 3u, 32003u}) {
    for (int n : {64, 128, 256, 512}) {
      FpMatrix m = random_matrix(p, n, rng);
      int reps = n <= 128 ? 20 : 5;
      RrefResult rs, rp;
      double ts = time_ms([&] { rs = rref_serial(m); }, reps);
      double tp = time_ms([&] { rp = rref_parallel(m); }, reps);
      if (!(rs.m == rp.m) || rs.rank != rp.rank) {
        std::printf("MISMATCH at p=%u n=%d\n", p, n);
        return 1;
      }
      std::printf("%8u %8d %12.3f %12.3f %7.2fx\n", p, n, ts, tp, ts / tp);
    }
  }
  return 0;
}
