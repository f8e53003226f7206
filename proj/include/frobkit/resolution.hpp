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

#ifndef FROBKIT_RESOLUTION_HPP
#define FROBKIT_RESOLUTION_HPP

#include "frobkit/complex.hpp"
#include "frobkit/ringmap.hpp"

namespace frobkit {

/// Betti table beta_{n,d} up to the homological cutoff; internal
/// degrees are exact rationals (the (1/p^e)-lattice).
struct BettiTable {
  int cutoff = 0;
  std::map<int, std::map<Rational, std::int64_t>> entries;
  std::vector<std::int64_t> totals;  // size cutoff + 1

  std::int64_t total(int n) const {
    return (n >= 0 && n < int(totals.size())) ? totals[size_t(n)] : 0;
  }
};

struct PoincareTruncation {
  std::vector<std::int64_t> coeff;  // beta_0 .. beta_N
  int cutoff() const { return int(coeff.size()) - 1; }
  /// Coefficientwise partial order.
  friend bool dominates(const PoincareTruncation& a,
                        const PoincareTruncation& b) {
    for (size_t i = 0; i < b.coeff.size() && i < a.coeff.size(); ++i)
      if (a.coeff[i] < b.coeff[i]) return false;
    return true;
  }
};

/// Minimal free resolution of M to homological degree N.  Kernel steps
/// pick minimal generating sets, so the complex is minimal by
/// construction; results are cached on the module and extended on
/// demand.  The returned complex ends early when the resolution
/// terminates (later ranks are zero).
FreeComplex minimal_free_resolution(const FiniteModule& M, int N);

/// True when the cached resolution is known to terminate at length <=
/// N (the module has finite projective dimension <= N).
bool resolution_terminated(const FiniteModule& M, int N);

/// Gaussian cancellation of unit entries; homotopy-equivalent complex
/// with all differential entries in the irrelevant ideal.  Sweeps
/// levels in ascending order, pivots by (internal degree, row, col).
FreeComplex minimalize(const FreeComplex& C);

/// Minimal semifree resolvent of a complex of presented modules,
/// correct in homological degrees <= N: resolve the terms, lift the
/// differentials through iterated mapping cones, then minimalize.
FreeComplex resolve_complex(const ModuleComplex& C, int N);

BettiTable betti_of_complex(const FreeComplex& minimal, int N);
PoincareTruncation poincare_of(const BettiTable& t);

struct BettiPoincare {
  BettiTable betti;
  PoincareTruncation poincare;
};
BettiPoincare betti_and_poincare(const FiniteModule& M, int N);
BettiPoincare betti_and_poincare(const ModuleComplex& C, int N);

/// Flat-dimension window for a ring map: dimensions of
/// Tor_i^R(S, k_R) for i <= N computed from the base-changed minimal
/// resolution of k over R.  dim = -1 encodes an infinite-dimensional
/// graded module (positive Krull dimension).
struct TorWindow {
  enum class Verdict { FLAT, FINITE_FD, WINDOW_INCONCLUSIVE };
  Verdict verdict = Verdict::WINDOW_INCONCLUSIVE;
  int fd = -1;  // meaningful for FINITE_FD
  std::vector<std::int64_t> dims;  // index 0..N
  int cutoff = 0;
};
TorWindow tor_of_map(const RingMap& phi, int N);

/// Ext^i_A(M, A) for 0 <= i <= N, as presented modules (homology of the
/// transposed-differential complex).
std::vector<FiniteModule> ext_against_ring(const FiniteModule& M, int N);
/// Cheaper zero test for a single Ext index.
bool ext_is_zero(const FiniteModule& M, int i);

/// Graded dimension series.  Artinian modules report the exact finite
/// dimension vector; otherwise the numerator of the rational form over
/// prod (1 - t^{w_i}) computed from a finite resolution over the
/// ambient polynomial ring.
struct HilbertSeries {
  bool artinian = false;
  std::map<Rational, std::int64_t> dims;       // artinian case
  std::map<Rational, std::int64_t> numerator;  // rational form
  std::vector<Rational> denom_weights;
};
HilbertSeries hilbert_series(const FiniteModule& M);
/// Power-series coefficients of the rational form up to `bound`.
std::map<Rational, std::int64_t> hilbert_expand(const HilbertSeries& h,
                                                const Rational& bound);

}  // namespace frobkit

#endif
