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

#ifndef FROBKIT_GROEBNER_HPP
#define FROBKIT_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "frobkit/modelem.hpp"

namespace frobkit {

/// Reduced Groebner basis of a graded submodule of a free module
/// (ideals are the rank-1 case).  Generators are monic, tail-reduced,
/// and canonically sorted, so equal submodules presented in the same
/// ambient have bit-identical bases.
struct GroebnerBasis {
  RingPtr ring;
  FreeBasis basis;
  OrderSpec order;
  std::vector<ModElem> gens;
  bool reduced = true;
  /// True when a degree bound cut the computation; the basis is then
  /// only guaranteed exact strictly below the bound.
  bool truncated = false;
  std::int64_t deg_bound = -1;  // scaled by basis.lcd, -1 = none

  int size() const { return int(gens.size()); }
};

struct GBOptions {
  /// Degree bound in units of 1/basis.lcd; S-pairs strictly above it
  /// are dropped.  -1 disables truncation.
  std::int64_t deg_bound = -1;
};

/// Buchberger with normal (lowest degree first) pair selection.  Input
/// generators must be homogeneous.  Throws std::invalid_argument on
/// inhomogeneous input.
GroebnerBasis buchberger(const RingPtr& ring, const FreeBasis& basis,
                         const OrderSpec& order,
                         const std::vector<ModElem>& gens,
                         const GBOptions& opt = {});

/// Full normal form (lead and tails) against G.
ModElem normal_form(const GroebnerBasis& G, const ModElem& v);

/// Convenience: normal form of a polynomial against a rank-1 basis.
Poly normal_form_poly(const GroebnerBasis& G, const Poly& f);

/// Checks that every S-pair of G reduces to zero.
bool buchberger_criterion_holds(const GroebnerBasis& G);

/// Schreyer generators for the syzygies of G's generators; G must be
/// reduced.  Output lives in a free module with one position per
/// generator, basis degrees = generator degrees.
std::vector<ModElem> syzygy_basis(const GroebnerBasis& G);

/// Syzygies of an arbitrary homogeneous generator list (not necessarily
/// a Groebner basis): Schreyer syzygies of the reduced basis transported
/// back through the change-of-basis matrices.
struct SyzygyResult {
  GroebnerBasis gb;                   // reduced GB of the span
  std::vector<ModElem> syzygies;      // of the *input* generators
  FreeBasis syz_basis;                // degrees of the syzygy ambient
};
SyzygyResult syzygies_of(const RingPtr& ring, const FreeBasis& basis,
                         const OrderSpec& order,
                         const std::vector<ModElem>& inputs,
                         const GBOptions& opt = {});

/// Generators of { v in free_src : sum v_i * cols_i lies in
/// span(tgt_relations) + ideal * free_tgt }, i.e. the kernel over the
/// quotient ring of the map into the presented target.  `ideal` may be
/// empty (polynomial ring).  Entries of the result are normal forms
/// modulo `ideal`.
/// When `reduce_entries` is false the generators are returned as raw
/// polynomial vectors (the full preimage submodule upstairs, including
/// ideal multiples); elimination-based constructions need that form.
std::vector<ModElem> kernel_mod_submodule(
    const RingPtr& ring, const FreeBasis& tgt, const FreeBasis& src,
    const std::vector<ModElem>& cols, const std::vector<ModElem>& tgt_relations,
    const GroebnerBasis* ideal, const GBOptions& opt = {},
    bool reduce_entries = true);

/// Kernel of a map between free modules over the quotient ring.
std::vector<ModElem> kernel_of_module_map(const RingPtr& ring,
                                          const FreeBasis& tgt,
                                          const FreeBasis& src,
                                          const std::vector<ModElem>& cols,
                                          const GroebnerBasis* ideal,
                                          const GBOptions& opt = {});

/// Elimination ideal: basis of span(G) intersected with the subring on
/// `keep` (G must be an ideal basis).  Recomputes G under a block order.
GroebnerBasis eliminate(const GroebnerBasis& G, const std::vector<int>& keep);

/// Module elimination: generators of span(gens) intersected with the
/// free module over the subring avoiding the masked variables.
std::vector<ModElem> module_eliminate(const RingPtr& ring,
                                      const FreeBasis& basis,
                                      const std::vector<ModElem>& gens,
                                      std::uint32_t elim_mask);

/// Writes `target` as a combination of `cols` modulo span(tgt_relations)
/// + ideal.  Returns coordinates (one polynomial per column) or nullopt
/// when target is not in the span.
std::optional<std::vector<Poly>> lift_through(
    const RingPtr& ring, const FreeBasis& tgt,
    const std::vector<ModElem>& cols, const std::vector<ModElem>& tgt_relations,
    const GroebnerBasis* ideal, const ModElem& target);

/// Batched version: lifts every target, reusing one basis computation.
std::vector<std::optional<std::vector<Poly>>> lift_through_batch(
    const RingPtr& ring, const FreeBasis& tgt,
    const std::vector<ModElem>& cols, const std::vector<ModElem>& tgt_relations,
    const GroebnerBasis* ideal, const std::vector<ModElem>& targets);

/// Minimal homogeneous generating subset of a generator list over the
/// quotient ring (graded Nakayama: scan by ascending degree, keep what
/// is not in the span of what came before).  Returns indices into
/// `gens` in the deterministic acceptance order.
std::vector<int> prune_to_minimal_generators(const RingPtr& ring,
                                             const FreeBasis& basis,
                                             const std::vector<ModElem>& gens,
                                             const GroebnerBasis* ideal);

/// Incremental span membership over a quotient ring; used by the
/// pruning pass and by mutual-inclusion checks.
class SpanBuilder {
 public:
  SpanBuilder(RingPtr ring, FreeBasis basis, OrderSpec order,
              const GroebnerBasis* ideal);
  /// Returns false when elem was already in the span (nothing added).
  bool add(const ModElem& elem);
  bool contains(const ModElem& elem) const;
  const std::vector<ModElem>& current_basis() const { return gens_; }

 private:
  void complete();
  RingPtr ring_;
  FreeBasis basis_;
  OrderSpec order_;
  std::vector<ModElem> gens_;
  std::vector<char> is_known_gb_;
  std::vector<std::vector<int>> bucket_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace frobkit

#endif
