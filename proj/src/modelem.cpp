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

#include "frobkit/modelem.hpp"

#include <algorithm>
#include <sstream>

namespace frobkit {

ModElem melem_make(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                   std::vector<MTerm> terms) {
  for (auto& mt : terms) mt.t.sdeg = R.sdeg(mt.t.m);
  std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
    return cmp_mterm(R, B, s, a, b) > 0;
  });
  ModElem out;
  out.t.reserve(terms.size());
  const auto& F = R.field();
  for (const auto& mt : terms) {
    std::uint32_t c = F.reduce(std::int64_t(mt.t.c));
    if (!out.t.empty() && out.t.back().pos == mt.pos &&
        out.t.back().t.m == mt.t.m) {
      out.t.back().t.c = F.add(out.t.back().t.c, c);
      if (out.t.back().t.c == 0) out.t.pop_back();
    } else if (c != 0) {
      MTerm u = mt;
      u.t.c = c;
      out.t.push_back(u);
    }
  }
  return out;
}

ModElem melem_from_columns(const PolyRing& R, const FreeBasis& B,
                           const OrderSpec& s,
                           const std::vector<Poly>& comps) {
  std::vector<MTerm> ts;
  for (int pos = 0; pos < int(comps.size()); ++pos)
    for (const auto& t : comps[pos].t) ts.push_back(MTerm{pos, t});
  return melem_make(R, B, s, std::move(ts));
}

ModElem melem_unit(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                   int pos) {
  MTerm mt;
  mt.pos = pos;
  mt.t.c = 1;
  return melem_make(R, B, s, {mt});
}

ModElem melem_inject(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                     int pos, const Poly& f) {
  std::vector<MTerm> ts;
  ts.reserve(f.t.size());
  for (const auto& t : f.t) ts.push_back(MTerm{pos, t});
  return melem_make(R, B, s, std::move(ts));
}

ModElem melem_add(const PolyRing& R, const FreeBasis& B, const OrderSpec& s,
                  const ModElem& a, const ModElem& b) {
  ModElem out;
  out.t.reserve(a.t.size() + b.t.size());
  const auto& F = R.field();
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = cmp_mterm(R, B, s, a.t[i], b.t[j]);
    if (c > 0) {
      out.t.push_back(a.t[i++]);
    } else if (c < 0) {
      out.t.push_back(b.t[j++]);
    } else {
      std::uint32_t cc = F.add(a.t[i].t.c, b.t[j].t.c);
      if (cc) {
        MTerm mt = a.t[i];
        mt.t.c = cc;
        out.t.push_back(mt);
      }
      ++i;
      ++j;
    }
  }
  while (i < a.t.size()) out.t.push_back(a.t[i++]);
  while (j < b.t.size()) out.t.push_back(b.t[j++]);
  return out;
}

ModElem melem_neg(const PolyRing& R, const ModElem& a) {
  ModElem out = a;
  for (auto& mt : out.t) mt.t.c = R.field().neg(mt.t.c);
  return out;
}

ModElem melem_scale(const PolyRing& R, const ModElem& a, std::uint32_t c) {
  c = R.field().reduce(c);
  if (c == 0) return ModElem{};
  if (c == 1) return a;
  ModElem out = a;
  for (auto& mt : out.t) mt.t.c = R.field().mul(mt.t.c, c);
  return out;
}

ModElem melem_mul_term(const PolyRing& R, const ModElem& a, const Monomial& m,
                       std::uint32_t c) {
  c = R.field().reduce(c);
  if (c == 0) return ModElem{};
  ModElem out;
  out.t.reserve(a.t.size());
  std::int64_t ds = R.sdeg(m);
  for (const auto& mt : a.t) {
    MTerm u;
    u.pos = mt.pos;
    u.t.m = mt.t.m.mul(m);
    u.t.sdeg = mt.t.sdeg + ds;
    u.t.c = R.field().mul(mt.t.c, c);
    out.t.push_back(u);
  }
  return out;
}

Poly melem_component(const PolyRing& R, const ModElem& a, int pos) {
  std::vector<Term> ts;
  for (const auto& mt : a.t)
    if (mt.pos == pos) ts.push_back(mt.t);
  return poly_make(R, std::move(ts));
}

std::vector<Poly> melem_to_columns(const PolyRing& R, const ModElem& a,
                                   int rank) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& mt : a.t) comps[mt.pos].push_back(mt.t);
  std::vector<Poly> out(rank);
  for (int i = 0; i < rank; ++i) out[i] = poly_make(R, std::move(comps[i]));
  return out;
}

bool melem_is_homogeneous(const FreeBasis& B, const ModElem& a) {
  if (a.is_zero()) return true;
  std::int64_t d = mod_sdeg(B, a.t.front());
  for (const auto& mt : a.t)
    if (mod_sdeg(B, mt) != d) return false;
  return true;
}

std::optional<Rational> melem_degree(const FreeBasis& B, const ModElem& a) {
  if (a.is_zero() || !melem_is_homogeneous(B, a)) return std::nullopt;
  return Rational(mod_sdeg(B, a.t.front()), B.lcd);
}

std::string melem_str(const PolyRing& R, const ModElem& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& mt : a.t) {
    if (!first) os << " + ";
    first = false;
    os << mt.t.c;
    for (int i = 0; i < R.nvars(); ++i) {
      if (!mt.t.m.e[i]) continue;
      os << "*" << R.names()[i];
      if (mt.t.m.e[i] > 1) os << "^" << mt.t.m.e[i];
    }
    os << "*e" << mt.pos;
  }
  return os.str();
}

}  // namespace frobkit
