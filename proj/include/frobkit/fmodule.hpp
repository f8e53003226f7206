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

#ifndef FROBKIT_FMODULE_HPP
#define FROBKIT_FMODULE_HPP

#include <memory>
#include <mutex>

#include "frobkit/ring.hpp"

namespace frobkit {

struct ModuleCache;  // holds lazily built presentation GB and resolution

/// Finitely presented graded module: cokernel of a homogeneous matrix
/// over a GradedQuotientRing.  Relations are columns.
struct FiniteModule {
  QRingPtr ring;
  FreeBasis gens;
  std::vector<ModElem> rels;
  std::shared_ptr<ModuleCache> cache;

  int rank() const { return gens.rank(); }
};

struct ModuleCache {
  std::mutex mu;
  std::shared_ptr<const GroebnerBasis> rel_gb;
  std::shared_ptr<void> resolution;  // owned by resolution.cpp
};

FiniteModule make_module(QRingPtr ring, std::vector<Rational> gen_degs,
                         std::vector<ModElem> rels);
FiniteModule free_module(QRingPtr ring, std::vector<Rational> gen_degs);
FiniteModule ring_as_module(QRingPtr ring);
/// k = R/m, presented by one generator killed by every variable.
FiniteModule residue_field_module(QRingPtr ring);
FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b);
FiniteModule shift_degrees(const FiniteModule& m, const Rational& by);

/// Reduced GB of span(rels + I*e_j); the membership/NF workhorse.
const GroebnerBasis& module_rel_gb(const FiniteModule& m);

bool module_is_zero(const FiniteModule& m);
/// Graded dimensions dim_k M_d for scaled degrees <= bound (scale:
/// m.gens.lcd).  Exact in every reported degree.
std::map<std::int64_t, std::int64_t> module_dims(const FiniteModule& m,
                                                 std::int64_t sdeg_bound);
bool module_is_artinian(const FiniteModule& m);
std::int64_t module_total_dim(const FiniteModule& m);
/// Scaled-degree bound past which an artinian module vanishes; nullopt
/// when the module is not artinian.
std::optional<std::int64_t> module_sdeg_bound(const FiniteModule& m);
/// Explicit k-basis of an artinian module: standard pairs (pos, mono).
std::vector<std::pair<int, Monomial>> module_std_basis(const FiniteModule& m);

/// Frobenius pushforward F^e_* M as a module over the same ring, with
/// generators F(x^a g_j), 0 <= a_i < p^e, and the (1/p^e)-scaled
/// grading.  Purely combinatorial (base-q digit splitting).
FiniteModule frobenius_pushforward(const FiniteModule& m, int e);
FiniteModule frobenius_pushforward_ring(const QRingPtr& ring, int e);

/// Index of generator F(x^a g_j) inside the pushforward presentation.
int pushforward_gen_index(const PolyRing& R, int q, const Monomial& a, int j);

/// F^e_* of a module map given by columns (entries over the common
/// ring): returns the columns of the pushed map between the pushforward
/// presentations.
std::vector<ModElem> frobenius_push_map(const QRingPtr& ring,
                                        const FreeBasis& src_gens,
                                        const FreeBasis& tgt_gens,
                                        const std::vector<ModElem>& cols,
                                        int e);

}  // namespace frobkit

#endif
