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

#ifndef FROBKIT_POLYRING_HPP
#define FROBKIT_POLYRING_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "frobkit/fp.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

/// Hard cap on ambient variables.  Elimination rings (graph of a map)
/// concatenate two variable blocks, so this must hold source + target.
constexpr int kMaxVars = 14;

/// Exponent vector, fixed-width and zero-padded past nvars so that
/// equality is a flat memcmp.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial mul(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::uint16_t(e[i] + m.e[i]);
    return r;
  }
  /// Exact quotient; caller guarantees divisibility.
  Monomial div(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::uint16_t(e[i] - m.e[i]);
    return r;
  }
  Monomial lcm(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(e[i], m.e[i]);
    return r;
  }
  bool coprime(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && m.e[i]) return false;
    return true;
  }
  int total_degree(int nvars) const {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += e[i];
    return d;
  }
};

/// One term of a polynomial: coefficient in F_p, monomial, and the
/// scaled weighted degree (weights times the ring's weight lcm), cached
/// because the monomial order compares it constantly.
struct Term {
  std::int64_t sdeg = 0;
  Monomial m;
  std::uint32_t c = 0;
};

/// Ambient polynomial ring F_p[x_1..x_n] with positive rational weights.
/// Weights are also stored as integers scaled by `wden` (the common
/// denominator), so weighted degrees are exact int64 arithmetic.
class PolyRing {
 public:
  PolyRing(PrimeField fp, std::vector<std::string> names,
           std::vector<Rational> weights)
      : fp_(fp), names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
      throw std::invalid_argument("PolyRing: names/weights size mismatch");
    if (int(names_.size()) > kMaxVars)
      throw std::invalid_argument("PolyRing: too many variables (max " +
                                  std::to_string(kMaxVars) + ")");
    wden_ = 1;
    for (const auto& w : weights_) {
      if (w.num <= 0)
        throw std::invalid_argument("PolyRing: weights must be positive");
      wden_ = lcm64(wden_, w.den);
    }
    wscaled_.resize(weights_.size());
    for (size_t i = 0; i < weights_.size(); ++i)
      wscaled_[i] = weights_[i].num * (wden_ / weights_[i].den);
  }

  const PrimeField& field() const { return fp_; }
  std::uint32_t p() const { return fp_.p(); }
  int nvars() const { return int(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Rational>& weights() const { return weights_; }
  std::int64_t wden() const { return wden_; }
  std::int64_t wscaled(int i) const { return wscaled_[i]; }

  std::int64_t sdeg(const Monomial& m) const {
    std::int64_t d = 0;
    for (int i = 0; i < nvars(); ++i) d += std::int64_t(m.e[i]) * wscaled_[i];
    return d;
  }
  Rational degree(const Monomial& m) const { return Rational(sdeg(m), wden_); }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

 private:
  PrimeField fp_;
  std::vector<std::string> names_;
  std::vector<Rational> weights_;
  std::int64_t wden_;
  std::vector<std::int64_t> wscaled_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Weighted degree-reverse-lexicographic comparison: higher weighted
/// degree wins; on ties the last variable where the exponents differ
/// decides, with the *smaller* exponent there winning.  Returns
/// negative/zero/positive like memcmp (positive: a > b).
inline int cmp_mono(const PolyRing& R, const Term& a, const Term& b) {
  if (a.sdeg != b.sdeg) return a.sdeg < b.sdeg ? -1 : 1;
  for (int i = R.nvars() - 1; i >= 0; --i) {
    if (a.m.e[i] != b.m.e[i]) return a.m.e[i] > b.m.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace frobkit

#endif
