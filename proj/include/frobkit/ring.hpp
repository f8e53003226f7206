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

#ifndef FROBKIT_RING_HPP
#define FROBKIT_RING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frobkit/groebner.hpp"

namespace frobkit {

class GradedQuotientRing;
using QRingPtr = std::shared_ptr<const GradedQuotientRing>;

/// Positively graded quotient F_p[x_1..x_n]/I with a cached reduced
/// Groebner basis.  The irrelevant ideal (x_1..x_n) plays the role of
/// the maximal ideal; the residue field is F_p.
class GradedQuotientRing {
 public:
  /// Throws std::invalid_argument on inhomogeneous generators or an
  /// ideal containing a unit.
  static QRingPtr make(std::uint32_t p,
                       const std::vector<std::pair<std::string, Rational>>& vars,
                       const std::vector<std::string>& ideal_gens);
  static QRingPtr make(RingPtr poly, std::vector<Poly> ideal_gens);

  const RingPtr& poly() const { return poly_; }
  const PolyRing& P() const { return *poly_; }
  const GroebnerBasis& ideal() const { return ideal_; }
  std::uint32_t p() const { return poly_->p(); }
  int nvars() const { return poly_->nvars(); }

  bool is_polynomial_ring() const { return ideal_.gens.empty(); }
  Poly nf(const Poly& f) const;
  Poly parse(const std::string& text) const { return nf(poly_parse(P(), text)); }

  /// Every variable nilpotent modulo the lead ideal <=> finite k-dimension.
  bool is_artinian() const;
  /// Total k-dimension; only valid when artinian.
  std::int64_t total_dim() const;
  /// Standard monomials of each scaled weighted degree up to the bound
  /// (inclusive); exact in every listed degree.
  std::map<std::int64_t, std::vector<Monomial>> standard_monomials(
      std::int64_t sdeg_bound) const;
  /// Combinatorial Krull dimension from the lead ideal.
  int krull_dim() const;
  /// Largest scaled degree with a nonzero graded piece (artinian only).
  std::int64_t top_sdeg() const;

 private:
  GradedQuotientRing() = default;
  RingPtr poly_;
  GroebnerBasis ideal_;
};

/// Enumerates exponent vectors over `R`'s variables with scaled degree
/// exactly `sdeg` (no standardness filtering).
std::vector<Monomial> monomials_of_sdeg(const PolyRing& R, std::int64_t sdeg);

}  // namespace frobkit

#endif
