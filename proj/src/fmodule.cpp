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

#include "frobkit/fmodule.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace frobkit {

FiniteModule make_module(QRingPtr ring, std::vector<Rational> gen_degs,
                         std::vector<ModElem> rels) {
  FiniteModule m;
  m.ring = std::move(ring);
  m.gens = FreeBasis::make(m.ring->P(), std::move(gen_degs));
  OrderSpec spec;
  for (auto& r : rels) {
    r = melem_make(m.ring->P(), m.gens, spec, r.t);
    if (!melem_is_homogeneous(m.gens, r))
      throw std::invalid_argument("make_module: inhomogeneous relation");
  }
  // canonical: NF entries mod the ring ideal, drop zero columns
  std::vector<ModElem> clean;
  for (auto& r : rels) {
    if (!m.ring->is_polynomial_ring()) {
      auto cols = melem_to_columns(m.ring->P(), r, m.gens.rank());
      for (auto& f : cols) f = m.ring->nf(f);
      r = melem_from_columns(m.ring->P(), m.gens, spec, cols);
    }
    if (!r.is_zero()) clean.push_back(std::move(r));
  }
  m.rels = std::move(clean);
  m.cache = std::make_shared<ModuleCache>();
  return m;
}

FiniteModule free_module(QRingPtr ring, std::vector<Rational> gen_degs) {
  return make_module(std::move(ring), std::move(gen_degs), {});
}

FiniteModule ring_as_module(QRingPtr ring) {
  return free_module(std::move(ring), {Rational(0)});
}

FiniteModule residue_field_module(QRingPtr ring) {
  const PolyRing& P = ring->P();
  FreeBasis B = FreeBasis::trivial(P, 1);
  std::vector<ModElem> rels;
  for (int v = 0; v < P.nvars(); ++v)
    rels.push_back(melem_inject(P, B, OrderSpec{}, 0, poly_var(P, v)));
  return make_module(std::move(ring), {Rational(0)}, std::move(rels));
}

FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b) {
  if (a.ring != b.ring)
    throw std::invalid_argument("direct_sum: modules over different rings");
  std::vector<Rational> degs = a.gens.deg;
  degs.insert(degs.end(), b.gens.deg.begin(), b.gens.deg.end());
  FreeBasis B = FreeBasis::make(a.ring->P(), degs);
  OrderSpec spec;
  std::vector<ModElem> rels;
  for (const auto& r : a.rels) rels.push_back(r);
  int off = a.rank();
  for (const auto& r : b.rels) {
    std::vector<MTerm> ts = r.t;
    for (auto& mt : ts) mt.pos += off;
    rels.push_back(melem_make(a.ring->P(), B, spec, std::move(ts)));
  }
  return make_module(a.ring, std::move(degs), std::move(rels));
}

FiniteModule shift_degrees(const FiniteModule& m, const Rational& by) {
  std::vector<Rational> degs;
  for (const auto& d : m.gens.deg) degs.push_back(d + by);
  return make_module(m.ring, std::move(degs), m.rels);
}

const GroebnerBasis& module_rel_gb(const FiniteModule& m) {
  auto& cache = *m.cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  if (!cache.rel_gb) {
    std::vector<ModElem> gens = m.rels;
    OrderSpec spec;
    for (int pos = 0; pos < m.rank(); ++pos)
      for (const auto& h : m.ring->ideal().gens)
        gens.push_back(melem_inject(m.ring->P(), m.gens, spec, pos,
                                    melem_component(m.ring->P(), h, 0)));
    cache.rel_gb = std::make_shared<const GroebnerBasis>(
        buchberger(m.ring->poly(), m.gens, spec, gens));
  }
  return *cache.rel_gb;
}

bool module_is_zero(const FiniteModule& m) {
  const GroebnerBasis& G = module_rel_gb(m);
  for (int pos = 0; pos < m.rank(); ++pos) {
    ModElem e = melem_unit(m.ring->P(), m.gens, OrderSpec{}, pos);
    if (!normal_form(G, e).is_zero()) return false;
  }
  return true;
}

std::map<std::int64_t, std::int64_t> module_dims(const FiniteModule& m,
                                                 std::int64_t sdeg_bound) {
  // standard module monomials: pairs (pos, mono) not divisible by any
  // lead of the relation GB at that position
  const GroebnerBasis& G = module_rel_gb(m);
  std::map<std::int64_t, std::int64_t> out;
  const PolyRing& R = m.ring->P();
  for (int pos = 0; pos < m.rank(); ++pos) {
    std::vector<Monomial> leads;
    for (const auto& g : G.gens)
      if (g.lead().pos == pos) leads.push_back(g.lead().t.m);
    // enumerate monomials with total scaled degree <= bound
    std::int64_t base = m.gens.sdeg[size_t(pos)];
    if (base > sdeg_bound) continue;
    std::int64_t mono_budget = (sdeg_bound - base) / m.gens.mono_scale;
    Monomial cur;
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t used) {
      if (v == R.nvars()) {
        out[base + used * m.gens.mono_scale] += 1;
        return;
      }
      std::int64_t w = R.wscaled(v);
      for (std::int64_t e = 0; used + e * w <= mono_budget; ++e) {
        cur.e[v] = std::uint16_t(e);
        bool divisible = false;
        for (const auto& l : leads)
          if (l.divides(cur)) {
            divisible = true;
            break;
          }
        if (divisible) break;
        rec(v + 1, used + e * w);
      }
      cur.e[v] = 0;
    };
    rec(0, 0);
  }
  return out;
}

// Smallest pure-power lead exponents per variable at `pos`; a constant
// lead makes the position dead (all zeros); nullopt when some variable
// never appears as a pure power (non-artinian direction).
static std::optional<std::vector<int>> position_nilpotency(
    const GroebnerBasis& G, int pos, int nvars) {
  for (const auto& g : G.gens)
    if (g.lead().pos == pos && g.lead().t.m.is_one())
      return std::vector<int>(size_t(nvars), 0);
  std::vector<int> out(size_t(nvars), -1);
  for (int v = 0; v < nvars; ++v) {
    for (const auto& g : G.gens) {
      if (g.lead().pos != pos) continue;
      const Monomial& mm = g.lead().t.m;
      bool pure = mm.e[size_t(v)] > 0;
      for (int w = 0; w < nvars && pure; ++w)
        if (w != v && mm.e[size_t(w)]) pure = false;
      if (pure && (out[size_t(v)] < 0 || mm.e[size_t(v)] < out[size_t(v)]))
        out[size_t(v)] = mm.e[size_t(v)];
    }
    if (out[size_t(v)] < 0) return std::nullopt;
  }
  return out;
}

bool module_is_artinian(const FiniteModule& m) {
  const GroebnerBasis& G = module_rel_gb(m);
  for (int pos = 0; pos < m.rank(); ++pos)
    if (!position_nilpotency(G, pos, m.ring->nvars())) return false;
  return true;
}

std::optional<std::int64_t> module_sdeg_bound(const FiniteModule& m) {
  const GroebnerBasis& G = module_rel_gb(m);
  const int n = m.ring->nvars();
  std::int64_t bound = 0;
  for (int pos = 0; pos < m.rank(); ++pos) {
    auto nil = position_nilpotency(G, pos, n);
    if (!nil) return std::nullopt;
    bool dead = n > 0 && (*nil)[0] == 0;  // constant lead kills the position
    if (dead) continue;
    std::int64_t b = m.gens.sdeg[size_t(pos)];
    for (int v = 0; v < n; ++v)
      b += ((*nil)[size_t(v)] - 1) * m.ring->P().wscaled(v) * m.gens.mono_scale;
    bound = std::max(bound, b);
  }
  return bound;
}

std::int64_t module_total_dim(const FiniteModule& m) {
  auto bound = module_sdeg_bound(m);
  if (!bound) throw std::logic_error("module_total_dim: not artinian");
  std::int64_t total = 0;
  for (const auto& [d, k] : module_dims(m, *bound)) total += k;
  return total;
}

std::vector<std::pair<int, Monomial>> module_std_basis(const FiniteModule& m) {
  auto bound = module_sdeg_bound(m);
  if (!bound) throw std::logic_error("module_std_basis: not artinian");
  const GroebnerBasis& G = module_rel_gb(m);
  const PolyRing& R = m.ring->P();
  std::vector<std::pair<int, Monomial>> out;
  for (int pos = 0; pos < m.rank(); ++pos) {
    std::vector<Monomial> leads;
    for (const auto& g : G.gens)
      if (g.lead().pos == pos) leads.push_back(g.lead().t.m);
    if (m.gens.sdeg[size_t(pos)] > *bound) continue;
    std::int64_t budget =
        (*bound - m.gens.sdeg[size_t(pos)]) / m.gens.mono_scale;
    Monomial cur;
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t used) {
      if (v == R.nvars()) {
        out.emplace_back(pos, cur);
        return;
      }
      std::int64_t w = R.wscaled(v);
      for (std::int64_t e = 0; used + e * w <= budget; ++e) {
        cur.e[size_t(v)] = std::uint16_t(e);
        bool divisible = false;
        for (const auto& l : leads)
          if (l.divides(cur)) {
            divisible = true;
            break;
          }
        if (divisible) break;
        rec(v + 1, used + e * w);
      }
      cur.e[size_t(v)] = 0;
    };
    rec(0, 0);
  }
  return out;
}

namespace {
// x^m = (x^hi)^q * x^lo with lo in [0,q)^n
void q_digits(const Monomial& m, int q, Monomial& hi, Monomial& lo) {
  for (int i = 0; i < kMaxVars; ++i) {
    hi.e[i] = std::uint16_t(m.e[i] / q);
    lo.e[i] = std::uint16_t(m.e[i] % q);
  }
}

std::vector<Monomial> small_exponents(const PolyRing& R, int q) {
  // all a in [0,q)^nvars, lexicographic by variable index
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> rec = [&](int v) {
    if (v == R.nvars()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < q; ++e) {
      cur.e[v] = std::uint16_t(e);
      rec(v + 1);
    }
    cur.e[v] = 0;
  };
  rec(0);
  return out;
}

int small_rank(const PolyRing& R, int q, const Monomial& a) {
  int idx = 0;
  for (int v = 0; v < R.nvars(); ++v) idx = idx * q + a.e[v];
  return idx;
}
}  // namespace

int pushforward_gen_index(const PolyRing& R, int q, const Monomial& a, int j) {
  int qn = 1;
  for (int v = 0; v < R.nvars(); ++v) qn *= q;
  return j * qn + small_rank(R, q, a);
}

// F_*(f * e_src): expands every term of f*x^a into q-digits against
// generator column (b, j).
static ModElem push_element(const QRingPtr& ring, const FreeBasis& pushB,
                            int q, const Monomial& a, int j, const Poly& f) {
  const PolyRing& R = ring->P();
  std::vector<MTerm> ts;
  for (const auto& t : f.t) {
    Monomial prod = t.m.mul(a);
    Monomial hi, lo;
    q_digits(prod, q, hi, lo);
    MTerm mt;
    mt.pos = pushforward_gen_index(R, q, lo, j);
    mt.t.m = hi;
    mt.t.c = t.c;
    ts.push_back(mt);
  }
  return melem_make(R, pushB, OrderSpec{}, std::move(ts));
}

FiniteModule frobenius_pushforward(const FiniteModule& m, int e) {
  if (e < 1) throw std::invalid_argument("frobenius_pushforward: e >= 1");
  const PolyRing& R = m.ring->P();
  int q = 1;
  for (int i = 0; i < e; ++i) {
    q *= int(R.p());
    if (q > 1 << 12)
      throw std::invalid_argument("frobenius_pushforward: p^e too large");
  }
  auto smalls = small_exponents(R, q);
  std::vector<Rational> degs;
  for (int j = 0; j < m.rank(); ++j)
    for (const auto& a : smalls)
      degs.push_back((R.degree(a) + m.gens.deg[size_t(j)]) / Rational(q));
  FreeBasis pushB = FreeBasis::make(R, degs);

  std::vector<ModElem> rels;
  // pushforwards of the relation columns
  for (const auto& col : m.rels) {
    auto comps = melem_to_columns(R, col, m.rank());
    for (const auto& a : smalls) {
      ModElem acc;
      for (int j = 0; j < m.rank(); ++j) {
        if (comps[size_t(j)].is_zero()) continue;
        acc = melem_add(R, pushB, OrderSpec{}, acc,
                        push_element(m.ring, pushB, q, a, j, comps[size_t(j)]));
      }
      if (!acc.is_zero()) rels.push_back(std::move(acc));
    }
  }
  // ring relations on every generator block
  for (const auto& h : m.ring->ideal().gens) {
    Poly hp = melem_component(R, h, 0);
    for (int j = 0; j < m.rank(); ++j)
      for (const auto& a : smalls) {
        ModElem r = push_element(m.ring, pushB, q, a, j, hp);
        if (!r.is_zero()) rels.push_back(std::move(r));
      }
  }
  return make_module(m.ring, std::move(degs), std::move(rels));
}

FiniteModule frobenius_pushforward_ring(const QRingPtr& ring, int e) {
  return frobenius_pushforward(ring_as_module(ring), e);
}

std::vector<ModElem> frobenius_push_map(const QRingPtr& ring,
                                        const FreeBasis& src_gens,
                                        const FreeBasis& tgt_gens,
                                        const std::vector<ModElem>& cols,
                                        int e) {
  const PolyRing& R = ring->P();
  int q = 1;
  for (int i = 0; i < e; ++i) q *= int(R.p());
  auto smalls = small_exponents(R, q);
  // pushforward target basis (for building elements)
  std::vector<Rational> tdegs;
  for (int j = 0; j < tgt_gens.rank(); ++j)
    for (const auto& a : smalls)
      tdegs.push_back((R.degree(a) + tgt_gens.deg[size_t(j)]) / Rational(q));
  FreeBasis pushT = FreeBasis::make(R, tdegs);

  std::vector<ModElem> out;
  for (int j = 0; j < src_gens.rank(); ++j) {
    auto comps = melem_to_columns(R, cols[size_t(j)], tgt_gens.rank());
    for (const auto& a : smalls) {
      ModElem acc;
      for (int i = 0; i < tgt_gens.rank(); ++i) {
        if (comps[size_t(i)].is_zero()) continue;
        acc = melem_add(R, pushT, OrderSpec{}, acc,
                        push_element(ring, pushT, q, a, i, comps[size_t(i)]));
      }
      out.push_back(std::move(acc));
    }
  }
  return out;
}

}  // namespace frobkit
