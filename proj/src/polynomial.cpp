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

#include "frobkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace frobkit {

Poly poly_zero() { return Poly{}; }

Poly poly_const(const PolyRing& R, std::int64_t c) {
  std::uint32_t cc = R.field().reduce(c);
  if (cc == 0) return Poly{};
  Term t;
  t.c = cc;
  return Poly{{t}};
}

Poly poly_var(const PolyRing& R, int i, int exp) {
  if (i < 0 || i >= R.nvars())
    throw std::invalid_argument("poly_var: index out of range");
  if (exp == 0) return poly_const(R, 1);
  Term t;
  t.m.e[i] = std::uint16_t(exp);
  t.sdeg = R.sdeg(t.m);
  t.c = 1;
  return Poly{{t}};
}

Poly poly_mono(const PolyRing& R, const Monomial& m, std::int64_t c) {
  std::uint32_t cc = R.field().reduce(c);
  if (cc == 0) return Poly{};
  Term t;
  t.m = m;
  t.sdeg = R.sdeg(m);
  t.c = cc;
  return Poly{{t}};
}

Poly poly_make(const PolyRing& R, std::vector<Term> terms) {
  for (auto& t : terms) t.sdeg = R.sdeg(t.m);
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return cmp_mono(R, a, b) > 0;
  });
  Poly out;
  out.t.reserve(terms.size());
  const auto& F = R.field();
  for (const auto& t : terms) {
    std::uint32_t c = F.reduce(std::int64_t(t.c));
    if (!out.t.empty() && out.t.back().m == t.m) {
      out.t.back().c = F.add(out.t.back().c, c);
      if (out.t.back().c == 0) out.t.pop_back();
    } else if (c != 0) {
      Term u = t;
      u.c = c;
      out.t.push_back(u);
    }
  }
  return out;
}

// Merge two canonically sorted term lists; the workhorse of every
// reduction step.
static Poly merge_terms(const PolyRing& R, const std::vector<Term>& a,
                        const std::vector<Term>& b) {
  Poly out;
  out.t.reserve(a.size() + b.size());
  const auto& F = R.field();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = cmp_mono(R, a[i], b[j]);
    if (c > 0) {
      out.t.push_back(a[i++]);
    } else if (c < 0) {
      out.t.push_back(b[j++]);
    } else {
      std::uint32_t s = F.add(a[i].c, b[j].c);
      if (s) {
        Term t = a[i];
        t.c = s;
        out.t.push_back(t);
      }
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.t.push_back(a[i++]);
  while (j < b.size()) out.t.push_back(b[j++]);
  return out;
}

Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b) {
  return merge_terms(R, a.t, b.t);
}

Poly poly_neg(const PolyRing& R, const Poly& a) {
  Poly out = a;
  for (auto& t : out.t) t.c = R.field().neg(t.c);
  return out;
}

Poly poly_sub(const PolyRing& R, const Poly& a, const Poly& b) {
  return poly_add(R, a, poly_neg(R, b));
}

Poly poly_scale(const PolyRing& R, const Poly& a, std::uint32_t c) {
  c = R.field().reduce(c);
  if (c == 0) return Poly{};
  if (c == 1) return a;
  Poly out = a;
  for (auto& t : out.t) t.c = R.field().mul(t.c, c);
  return out;
}

Poly poly_mul_term(const PolyRing& R, const Poly& a, const Monomial& m,
                   std::uint32_t c) {
  c = R.field().reduce(c);
  if (c == 0 || a.is_zero()) return Poly{};
  Poly out;
  out.t.reserve(a.t.size());
  std::int64_t ds = R.sdeg(m);
  for (const auto& t : a.t) {
    Term u;
    u.m = t.m.mul(m);
    u.sdeg = t.sdeg + ds;
    u.c = R.field().mul(t.c, c);
    out.t.push_back(u);
  }
  return out;
}

Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b) {
  Poly acc;
  const Poly& big = a.t.size() >= b.t.size() ? a : b;
  const Poly& small = a.t.size() >= b.t.size() ? b : a;
  for (const auto& t : small.t)
    acc = poly_add(R, acc, poly_mul_term(R, big, t.m, t.c));
  return acc;
}

Poly poly_pow(const PolyRing& R, const Poly& a, std::uint64_t e) {
  Poly r = poly_const(R, 1);
  Poly base = a;
  while (e) {
    if (e & 1) r = poly_mul(R, r, base);
    e >>= 1;
    if (e) base = poly_mul(R, base, base);
  }
  return r;
}

bool poly_is_homogeneous(const Poly& f) {
  for (const auto& t : f.t)
    if (t.sdeg != f.t.front().sdeg) return false;
  return true;
}

std::optional<Rational> poly_degree(const PolyRing& R, const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  if (!poly_is_homogeneous(f)) return std::nullopt;
  return Rational(f.t.front().sdeg, R.wden());
}

Poly poly_substitute(const PolyRing& R, const Poly& f, const PolyRing& S,
                     const std::vector<Poly>& images) {
  if (int(images.size()) != R.nvars())
    throw std::invalid_argument("poly_substitute: wrong image count");
  Poly acc;
  for (const auto& t : f.t) {
    Poly term = poly_const(S, std::int64_t(t.c));
    for (int i = 0; i < R.nvars(); ++i)
      if (t.m.e[i]) term = poly_mul(S, term, poly_pow(S, images[i], t.m.e[i]));
    acc = poly_add(S, acc, term);
  }
  return acc;
}

Poly poly_transport(const PolyRing& from, const Poly& f, const PolyRing& to,
                    int var_offset) {
  std::vector<Term> ts;
  ts.reserve(f.t.size());
  for (const auto& t : f.t) {
    Term u;
    u.c = t.c;
    for (int i = 0; i < from.nvars(); ++i) u.m.e[i + var_offset] = t.m.e[i];
    ts.push_back(u);
  }
  return poly_make(to, std::move(ts));
}

std::string poly_str(const PolyRing& R, const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.t) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (t.c != 1 || t.m.is_one()) {
      os << t.c;
      printed = true;
    }
    for (int i = 0; i < R.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (printed) os << "*";
      os << R.names()[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      printed = true;
    }
  }
  return os.str();
}

Poly poly_parse(const PolyRing& R, const std::string& text) {
  size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("polynomial: " + msg + " at column " +
                                std::to_string(i + 1));
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  std::vector<Term> terms;
  skip_ws();
  if (i == text.size()) fail("empty polynomial");
  bool negate = false;
  // leading sign
  if (text[i] == '+' || text[i] == '-') {
    negate = text[i] == '-';
    ++i;
  }
  while (true) {
    skip_ws();
    std::int64_t coef = 1;
    bool saw_any = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      coef = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        coef = coef * 10 + (text[i] - '0');
        if (coef > (1LL << 40)) fail("coefficient too large");
        ++i;
      }
      saw_any = true;
    }
    Monomial m;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i >= text.size() || !(std::isalpha((unsigned char)text[i]) || text[i] == '_'))
        break;
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum((unsigned char)text[i]) || text[i] == '_' ||
              text[i] == '\''))
        ++i;
      std::string name = text.substr(start, i - start);
      int vi = R.var_index(name);
      if (vi < 0) fail("unknown variable '" + name + "'");
      int exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          fail("expected exponent");
        exp = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
          exp = exp * 10 + (text[i] - '0');
          if (exp > 1 << 14) fail("exponent too large");
          ++i;
        }
      }
      m.e[vi] = std::uint16_t(m.e[vi] + exp);
      saw_any = true;
    }
    if (!saw_any) fail("expected term");
    Term t;
    t.m = m;
    t.c = R.field().reduce(negate ? -coef : coef);
    terms.push_back(t);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == '+') {
      negate = false;
      ++i;
    } else if (text[i] == '-') {
      negate = true;
      ++i;
    } else {
      fail(std::string("unexpected character '") + text[i] + "'");
    }
  }
  return poly_make(R, std::move(terms));
}

}  // namespace frobkit
