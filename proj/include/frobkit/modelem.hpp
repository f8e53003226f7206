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

#ifndef FROBKIT_MODELEM_HPP
#define FROBKIT_MODELEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobkit/polynomial.hpp"

namespace frobkit {

/// Graded free-module basis.  Degrees are rationals; `lcd` is a common
/// denominator for them and the ring weights, so the total degree of a
/// module term is exact int64 arithmetic:
///   total_sdeg = term.sdeg * mono_scale + sdeg[pos]   (units of 1/lcd).
struct FreeBasis {
  std::vector<Rational> deg;
  std::int64_t lcd = 1;
  std::int64_t mono_scale = 1;
  std::vector<std::int64_t> sdeg;

  static FreeBasis make(const PolyRing& R, std::vector<Rational> degs) {
    FreeBasis b;
    b.deg = std::move(degs);
    b.lcd = R.wden();
    for (const auto& d : b.deg) b.lcd = lcm64(b.lcd, d.den);
    b.mono_scale = b.lcd / R.wden();
    b.sdeg.reserve(b.deg.size());
    for (const auto& d : b.deg) b.sdeg.push_back(d.num * (b.lcd / d.den));
    return b;
  }
  static FreeBasis trivial(const PolyRing& R, int rank) {
    return make(R, std::vector<Rational>(rank, Rational(0)));
  }
  int rank() const { return int(deg.size()); }
};

struct MTerm {
  std::int32_t pos = 0;
  Term t;
};

/// Element of a graded free module: terms sorted strictly descending in
/// the module order, no zeros.
struct ModElem {
  std::vector<MTerm> t;
  bool is_zero() const { return t.empty(); }
  const MTerm& lead() const { return t.front(); }
};

/// Module monomial order: optional elimination block compared first
/// (total degree in masked variables), then position-over-term with
/// positions ranked by `pos_rank` when given (smaller rank wins) or by
/// (basis degree, index) ascending otherwise, then the ring's weighted
/// degrevlex on monomials.
struct OrderSpec {
  std::uint32_t elim_mask = 0;
  std::vector<std::int32_t> pos_rank;
};

inline int elim_blockdeg(std::uint32_t mask, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < kMaxVars && mask; ++i, mask >>= 1)
    if (mask & 1) d += m.e[i];
  return d;
}

inline int cmp_mterm(const PolyRing& R, const FreeBasis& B,
                     const OrderSpec& spec, const MTerm& a, const MTerm& b) {
  if (spec.elim_mask) {
    int da = elim_blockdeg(spec.elim_mask, a.t.m);
    int db = elim_blockdeg(spec.elim_mask, b.t.m);
    if (da != db) return da < db ? -1 : 1;
  }
  if (a.pos != b.pos) {
    if (!spec.pos_rank.empty()) {
      std::int32_t ra = spec.pos_rank[a.pos], rb = spec.pos_rank[b.pos];
      if (ra != rb) return ra < rb ? 1 : -1;
    } else {
      std::int64_t da = B.sdeg[a.pos], db = B.sdeg[b.pos];
      if (da != db) return da < db ? 1 : -1;
    }
    return a.pos < b.pos ? 1 : -1;
  }
  return cmp_mono(R, a.t, b.t);
}

inline std::int64_t mod_sdeg(const FreeBasis& B, const MTerm& mt) {
  return mt.t.sdeg * B.mono_scale + B.sdeg[mt.pos];
}

ModElem melem_make(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                   std::vector<MTerm> terms);
ModElem melem_from_columns(const PolyRing& R, const FreeBasis& B,
                           const OrderSpec& s, const std::vector<Poly>& comps);
ModElem melem_unit(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                   int pos);
/// pos-component e_pos * f.
ModElem melem_inject(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                     int pos, const Poly& f);
ModElem melem_add(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                  const ModElem& a, const ModElem& b);
ModElem melem_neg(const PolyRing& R, const ModElem& a);
ModElem melem_scale(const PolyRing& R, const ModElem& a, std::uint32_t c);
ModElem melem_mul_term(const PolyRing& R, const ModElem& a, const Monomial& m,
                       std::uint32_t c);
/// Component in position `pos` as a polynomial.
Poly melem_component(const PolyRing& R, const ModElem& a, int pos);
std::vector<Poly> melem_to_columns(const PolyRing& R, const ModElem& a,
                                   int rank);

/// Homogeneity: all terms share one total degree.  Returns that degree,
/// nullopt for inhomogeneous; zero is homogeneous of every degree.
bool melem_is_homogeneous(const FreeBasis& B, const ModElem& a);
std::optional<Rational> melem_degree(const FreeBasis& B, const ModElem& a);

std::string melem_str(const PolyRing& R, const ModElem& a);

}  // namespace frobkit

#endif
