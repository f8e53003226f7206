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

#ifndef FROBKIT_COMPLEX_HPP
#define FROBKIT_COMPLEX_HPP

#include "frobkit/fmodule.hpp"

namespace frobkit {

/// Bounded complex of graded free modules.  Level i of the vector is
/// homological degree lo + i; d[i] maps level i to level i-1 (d[0] is
/// empty).  Differentials are stored as columns over the lower level.
struct FreeComplex {
  QRingPtr ring;
  int lo = 0;
  std::vector<FreeBasis> levels;
  std::vector<std::vector<ModElem>> d;

  int length() const { return int(levels.size()); }
  int hi() const { return lo + length() - 1; }
  bool in_range(int n) const { return n >= lo && n <= hi(); }
  const FreeBasis& level(int n) const { return levels[size_t(n - lo)]; }
  const std::vector<ModElem>& diff(int n) const { return d[size_t(n - lo)]; }
  std::int64_t rank(int n) const {
    return in_range(n) ? levels[size_t(n - lo)].rank() : 0;
  }
};

/// Complex of finitely presented modules; the generalization needed for
/// Koszul complexes on presented modules and pushed-forward complexes.
struct ModuleComplex {
  QRingPtr ring;
  int lo = 0;
  std::vector<FiniteModule> terms;
  std::vector<std::vector<ModElem>> d;  // columns over the lower term's gens

  int length() const { return int(terms.size()); }
  int hi() const { return lo + length() - 1; }
  const FiniteModule& term(int n) const { return terms[size_t(n - lo)]; }
};

ModuleComplex as_module_complex(const FreeComplex& C);

/// d o d = 0 (exactly for free complexes; modulo presentations for
/// module complexes).  Used as an assertion in tests and constructors.
bool complex_squares_to_zero(const FreeComplex& C);
bool complex_squares_to_zero(const ModuleComplex& C);

/// Koszul complex K[A; f_1..f_k] on ring elements in the irrelevant
/// ideal.  Throws std::invalid_argument when an element has a constant
/// term.  K[A; 0] is legal (zero differential).
FreeComplex koszul_complex(const QRingPtr& A, const std::vector<Poly>& elems);

/// K[M; f] = M tensor K[A; f]: terms are direct sums of shifted copies
/// of M, differentials are the Koszul matrices acting on M-blocks.
ModuleComplex koszul_on_module(const FiniteModule& M,
                               const std::vector<Poly>& elems);

/// A minimal homogeneous generating set of the irrelevant ideal
/// (variables, minus the ones that fall into m^2 + I).
std::vector<Poly> minimal_irrelevant_generators(const QRingPtr& A);

/// Homology H_i as a presented module (kernel mod image + relations).
FiniteModule homology_module(const ModuleComplex& C, int i);
bool homology_is_zero(const ModuleComplex& C, int i);
std::vector<FiniteModule> complex_homology(const ModuleComplex& C);

/// F^e_* of a module complex over its own ring: terms become digit
/// pushforwards, differentials push through functorially.
ModuleComplex frobenius_pushforward_complex(const ModuleComplex& C, int e);

}  // namespace frobkit

#endif
