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

#ifndef FROBKIT_FP_HPP
#define FROBKIT_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace frobkit {

/// The prime field F_p.  Element representatives live in [0, p); all
/// arithmetic is exact 64-bit modular arithmetic (p <= 2^31 - 1, so
/// products never overflow).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(p))
      throw std::invalid_argument("PrimeField: " + std::to_string(p) +
                                  " is not prime");
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % std::int64_t(p_);
    if (r < 0) r += p_;
    return std::uint32_t(r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1, base = a % p_;
    while (e) {
      if (e & 1) r = (r * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return std::uint32_t(r);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

}  // namespace frobkit

#endif
