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

#ifndef FROBKIT_POLYNOMIAL_HPP
#define FROBKIT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobkit/polyring.hpp"

namespace frobkit {

/// Sparse polynomial in canonical form: terms strictly descending in the
/// ring's monomial order, no zero coefficients.  The ambient ring is
/// passed contextually; the user-facing wrappers carry a RingPtr and
/// check ambient compatibility at the API boundary.
struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
  int nterms() const { return int(t.size()); }

  bool operator==(const Poly& o) const {
    if (t.size() != o.t.size()) return false;
    for (size_t i = 0; i < t.size(); ++i)
      if (t[i].c != o.t[i].c || t[i].m != o.t[i].m) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly poly_zero();
Poly poly_const(const PolyRing& R, std::int64_t c);
Poly poly_var(const PolyRing& R, int i, int exp = 1);
Poly poly_mono(const PolyRing& R, const Monomial& m, std::int64_t c);

/// Normalizes an arbitrary term soup into canonical form (sorts,
/// combines, drops zeros, fills in cached degrees).
Poly poly_make(const PolyRing& R, std::vector<Term> terms);

Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_sub(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_neg(const PolyRing& R, const Poly& a);
Poly poly_scale(const PolyRing& R, const Poly& a, std::uint32_t c);
/// a * (c * m), fused because reduction loops live on it.
Poly poly_mul_term(const PolyRing& R, const Poly& a, const Monomial& m,
                   std::uint32_t c);
Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_pow(const PolyRing& R, const Poly& a, std::uint64_t e);

/// Weighted degree of a homogeneous polynomial.  Returns nullopt when f
/// is inhomogeneous; zero has degree BOTTOM, reported as nullopt with
/// `zero_is_bottom` left for the caller (is_homogeneous(0) == true).
bool poly_is_homogeneous(const Poly& f);
std::optional<Rational> poly_degree(const PolyRing& R, const Poly& f);

/// Substitutes images[i] for variable i; images live in ring S.
Poly poly_substitute(const PolyRing& R, const Poly& f, const PolyRing& S,
                     const std::vector<Poly>& images);

/// Maps a polynomial verbatim into a ring with the same leading
/// variable block (used when extending a ring by extra variables).
Poly poly_transport(const PolyRing& from, const Poly& f, const PolyRing& to,
                    int var_offset = 0);

std::string poly_str(const PolyRing& R, const Poly& f);

/// Parses the ASCII syntax used by session files: terms joined by +/-,
/// each term an optional integer coefficient and '*'-separated powers
/// `v^k`.  Throws std::invalid_argument with a column hint on bad input.
Poly poly_parse(const PolyRing& R, const std::string& text);

}  // namespace frobkit

#endif
