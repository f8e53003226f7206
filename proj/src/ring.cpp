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

#include "frobkit/ring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace frobkit {

QRingPtr GradedQuotientRing::make(
    std::uint32_t p,
    const std::vector<std::pair<std::string, Rational>>& vars,
    const std::vector<std::string>& ideal_gens) {
  std::vector<std::string> names;
  std::vector<Rational> weights;
  for (const auto& [n, w] : vars) {
    names.push_back(n);
    weights.push_back(w);
  }
  RingPtr P = std::make_shared<PolyRing>(PrimeField(p), names, weights);
  std::vector<Poly> gens;
  for (const auto& s : ideal_gens) gens.push_back(poly_parse(*P, s));
  return make(P, std::move(gens));
}

QRingPtr GradedQuotientRing::make(RingPtr poly, std::vector<Poly> ideal_gens) {
  auto ring = std::shared_ptr<GradedQuotientRing>(new GradedQuotientRing());
  ring->poly_ = poly;
  FreeBasis B = FreeBasis::trivial(*poly, 1);
  std::vector<ModElem> gens;
  for (const auto& f : ideal_gens) {
    if (f.is_zero()) continue;
    if (!poly_is_homogeneous(f))
      throw std::invalid_argument("quotient ring: inhomogeneous ideal generator " +
                                  poly_str(*poly, f));
    gens.push_back(melem_inject(*poly, B, OrderSpec{}, 0, f));
  }
  ring->ideal_ = buchberger(poly, B, OrderSpec{}, gens);
  for (const auto& g : ring->ideal_.gens)
    if (g.lead().t.sdeg == 0)
      throw std::invalid_argument("quotient ring: ideal contains a unit");
  return ring;
}

Poly GradedQuotientRing::nf(const Poly& f) const {
  if (ideal_.gens.empty()) return f;
  return normal_form_poly(ideal_, f);
}

bool GradedQuotientRing::is_artinian() const {
  const int n = nvars();
  for (int v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& g : ideal_.gens) {
      const Monomial& m = g.lead().t.m;
      bool pure = m.e[v] > 0;
      for (int w = 0; w < n && pure; ++w)
        if (w != v && m.e[w]) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_sdeg(const PolyRing& R, std::int64_t sdeg) {
  std::vector<Monomial> out;
  Monomial cur;
  // recurse over variables, last variable absorbs the remainder
  std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t rem) {
    if (v == R.nvars()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    std::int64_t w = R.wscaled(v);
    for (std::int64_t e = 0; e * w <= rem; ++e) {
      cur.e[v] = std::uint16_t(e);
      rec(v + 1, rem - e * w);
    }
    cur.e[v] = 0;
  };
  rec(0, sdeg);
  return out;
}

std::map<std::int64_t, std::vector<Monomial>>
GradedQuotientRing::standard_monomials(std::int64_t sdeg_bound) const {
  std::map<std::int64_t, std::vector<Monomial>> out;
  std::vector<Monomial> leads;
  for (const auto& g : ideal_.gens) leads.push_back(g.lead().t.m);
  Monomial cur;
  const PolyRing& R = *poly_;
  std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t used) {
    if (v == R.nvars()) {
      out[used].push_back(cur);
      return;
    }
    std::int64_t w = R.wscaled(v);
    for (std::int64_t e = 0; used + e * w <= sdeg_bound; ++e) {
      cur.e[v] = std::uint16_t(e);
      bool divisible = false;
      for (const auto& l : leads)
        if (l.divides(cur)) {  // prune: all extensions stay divisible
          divisible = true;
          break;
        }
      if (divisible) break;  // larger e stays divisible only for this var?
      rec(v + 1, used + e * w);
    }
    cur.e[v] = 0;
  };
  rec(0, 0);
  return out;
}

std::int64_t GradedQuotientRing::total_dim() const {
  if (!is_artinian())
    throw std::logic_error("total_dim: ring is not artinian");
  // bound: sum over variables of (nilpotency order - 1) * weight
  std::int64_t bound = 0;
  for (int v = 0; v < nvars(); ++v) {
    std::int64_t best = 0;
    for (const auto& g : ideal_.gens) {
      const Monomial& m = g.lead().t.m;
      bool pure = m.e[v] > 0;
      for (int w = 0; w < nvars() && pure; ++w)
        if (w != v && m.e[w]) pure = false;
      if (pure && (best == 0 || m.e[v] < best)) best = m.e[v];
    }
    bound += (best - 1) * poly_->wscaled(v);
  }
  auto sm = standard_monomials(bound);
  std::int64_t total = 0;
  for (const auto& [d, v] : sm) total += std::int64_t(v.size());
  return total;
}

std::int64_t GradedQuotientRing::top_sdeg() const {
  std::int64_t bound = 0;
  for (int v = 0; v < nvars(); ++v) {
    std::int64_t best = 0;
    for (const auto& g : ideal_.gens) {
      const Monomial& m = g.lead().t.m;
      bool pure = m.e[v] > 0;
      for (int w = 0; w < nvars() && pure; ++w)
        if (w != v && m.e[w]) pure = false;
      if (pure && (best == 0 || m.e[v] < best)) best = m.e[v];
    }
    if (best == 0) throw std::logic_error("top_sdeg: not artinian");
    bound += (best - 1) * poly_->wscaled(v);
  }
  auto sm = standard_monomials(bound);
  std::int64_t top = 0;
  for (const auto& [d, v] : sm)
    if (!v.empty() && d > top) top = d;
  return top;
}

int GradedQuotientRing::krull_dim() const {
  const int n = nvars();
  std::vector<Monomial> leads;
  for (const auto& g : ideal_.gens) leads.push_back(g.lead().t.m);
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    // does any lead monomial live entirely on `sub`?
    bool independent = true;
    for (const auto& l : leads) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (l.e[v] && !(sub & (1u << v))) {
          inside = false;
          break;
        }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(sub));
  }
  return best;
}

}  // namespace frobkit
