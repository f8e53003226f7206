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

#ifndef FROBKIT_PUSHFORWARD_HPP
#define FROBKIT_PUSHFORWARD_HPP

#include "frobkit/ringmap.hpp"

namespace frobkit {

struct NotModuleFinite : std::runtime_error {
  explicit NotModuleFinite(const std::string& witness_)
      : std::runtime_error("NOT_MODULE_FINITE: witness " + witness_),
        witness(witness_) {}
  std::string witness;
};

/// Presentation of the target of a module-finite map as a module over
/// the source, with the given monomials as module generators.  Checks
/// module-finiteness (target artinian modulo the images) and that the
/// generators actually generate; throws NotModuleFinite with a witness
/// monomial otherwise.  Computed through the graph ideal and module
/// elimination.
FiniteModule pushforward_module(const RingMap& psi,
                                const std::vector<Monomial>& gens);

/// Same machinery for an arbitrary finite module over the target:
/// generators u_a * g_j, a over `ring_gens`, j over M's generators.
/// Generator (a, j) sits at index j * ring_gens.size() + a.
FiniteModule pushforward_finite_module(const RingMap& psi,
                                       const std::vector<Monomial>& ring_gens,
                                       const FiniteModule& M);

/// Writes homogeneous target elements as source-coefficient
/// combinations of the ring generators: t = sum psi(lambda_a) * u_a.
/// Built once per (psi, gens); expression queries are batched.
class SubringExpressor {
 public:
  SubringExpressor(RingMap psi, std::vector<Monomial> gens);
  /// One coordinate vector (over the source ring) per target, nullopt
  /// when a target is not reachable.
  std::vector<std::optional<std::vector<Poly>>> express(
      const std::vector<Poly>& targets) const;

 private:
  RingMap psi_;
  std::vector<Monomial> gens_;
};

/// The relative Frobenius construction: A = S tensor_R F^e_* R as a
/// graded quotient ring, the map F_rel : A -> S (x -> x^{p^e},
/// y' -> phi(y)), and F^e_* S presented as an A-module via F_rel.
struct RelativeFrobenius {
  QRingPtr A;
  RingMap F_rel;
  FiniteModule M;
  int e = 1;
};

RelativeFrobenius relative_frobenius(const RingMap& phi, int e);

/// All exponent vectors in [0, q)^nvars, the generator order used by
/// every pushforward presentation.
std::vector<Monomial> frobenius_generator_exponents(const PolyRing& R, int q);

}  // namespace frobkit

#endif
