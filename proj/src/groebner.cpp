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

#include "frobkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace frobkit {

namespace {

struct Ctx {
  const PolyRing& R;
  const FreeBasis& B;
  const OrderSpec& spec;
};

using Quotients = std::vector<std::pair<int, Term>>;  // v -= c*m*gens[k]

int find_reducer(const std::vector<ModElem>& gens,
                 const std::vector<std::vector<int>>& bucket, const MTerm& ld) {
  const auto& cand = bucket[ld.pos];
  for (int idx : cand) {
    if (gens[idx].lead().t.m.divides(ld.t.m)) return idx;
  }
  return -1;
}

// Full normal form.  Quotients, when requested, satisfy
//   v = sum_k quot_k * gens[k] + result.
ModElem nf_full(const Ctx& c, const std::vector<ModElem>& gens,
                const std::vector<std::vector<int>>& bucket, const ModElem& v,
                Quotients* quot) {
  ModElem out;
  std::vector<MTerm> rest = v.t;
  size_t off = 0;
  const auto& F = c.R.field();
  while (off < rest.size()) {
    const MTerm& ld = rest[off];
    int g = find_reducer(gens, bucket, ld);
    if (g < 0) {
      out.t.push_back(ld);
      ++off;
      continue;
    }
    const ModElem& red = gens[g];
    std::uint32_t lc = red.lead().t.c;
    std::uint32_t cc = lc == 1 ? ld.t.c : F.mul(ld.t.c, F.inv(lc));
    Monomial m = ld.t.m.div(red.lead().t.m);
    if (quot) {
      Term qt;
      qt.m = m;
      qt.sdeg = c.R.sdeg(m);
      qt.c = cc;
      quot->emplace_back(g, qt);
    }
    ModElem sub = melem_mul_term(c.R, red, m, F.neg(cc));
    // merge rest[off..] with sub; the leads cancel by construction
    std::vector<MTerm> merged;
    merged.reserve(rest.size() - off + sub.t.size());
    size_t i = off, j = 0;
    while (i < rest.size() && j < sub.t.size()) {
      int cmp = cmp_mterm(c.R, c.B, c.spec, rest[i], sub.t[j]);
      if (cmp > 0) {
        merged.push_back(rest[i++]);
      } else if (cmp < 0) {
        merged.push_back(sub.t[j++]);
      } else {
        std::uint32_t s = F.add(rest[i].t.c, sub.t[j].t.c);
        if (s) {
          MTerm mt = rest[i];
          mt.t.c = s;
          merged.push_back(mt);
        }
        ++i;
        ++j;
      }
    }
    while (i < rest.size()) merged.push_back(rest[i++]);
    while (j < sub.t.size()) merged.push_back(sub.t[j++]);
    rest = std::move(merged);
    off = 0;
    // out terms stay irreducible and strictly larger than anything left,
    // so we only ever rescan the remainder.
  }
  return out;
}

struct PairEntry {
  std::int64_t deg;
  int i, j;
  bool operator>(const PairEntry& o) const {
    return std::tie(deg, i, j) > std::tie(o.deg, o.i, o.j);
  }
};

// Buchberger engine with optional expression tracking.
struct Builder {
  Ctx c;
  FreeBasis exprB;        // basis of the input-coordinate module (tracking)
  OrderSpec exprSpec;     // plain POT
  bool track;
  std::int64_t bound;
  std::vector<ModElem> gens;
  std::vector<ModElem> exprs;
  std::vector<int> block;  // phase-1 skip id, -1 none
  std::vector<std::vector<int>> bucket;
  std::priority_queue<PairEntry, std::vector<PairEntry>, std::greater<>> pq;
  bool truncated = false;

  Builder(const Ctx& ctx, bool track_, std::int64_t bound_)
      : c(ctx), track(track_), bound(bound_) {
    bucket.resize(size_t(c.B.rank()));
  }

  std::int64_t pair_degree(int i, int j) const {
    const MTerm& a = gens[i].lead();
    const MTerm& b = gens[j].lead();
    Monomial u = a.t.m.lcm(b.t.m);
    return c.R.sdeg(u) * c.B.mono_scale + c.B.sdeg[a.pos];
  }

  void push_pairs(int n) {
    const MTerm& ln = gens[n].lead();
    for (int k = 0; k < n; ++k) {
      if (gens[k].lead().pos != ln.pos) continue;
      if (block[k] >= 0 && block[k] == block[n]) continue;
      if (c.B.rank() == 1 && gens[k].lead().t.m.coprime(ln.t.m)) continue;
      pq.push(PairEntry{pair_degree(k, n), k, n});
    }
  }

  // NF + insert; expr0 is the tracked expression of `v` before reduction.
  // Inputs are re-canonicalized under the builder's order, which may
  // differ from the order they were constructed with (elimination).
  void insert(const ModElem& v, ModElem expr0, int blk) {
    Quotients q;
    ModElem vv = melem_make(c.R, c.B, c.spec, v.t);
    ModElem r = nf_full(c, gens, bucket, vv, track ? &q : nullptr);
    if (r.is_zero()) return;
    bool changed = !q.empty();
    const auto& F = c.R.field();
    std::uint32_t lc = r.lead().t.c;
    if (track) {
      for (const auto& [k, qt] : q)
        expr0 = melem_add(c.R, exprB, exprSpec, expr0,
                          melem_mul_term(c.R, exprs[k], qt.m, F.neg(qt.c)));
    }
    if (lc != 1) {
      std::uint32_t il = F.inv(lc);
      r = melem_scale(c.R, r, il);
      if (track) expr0 = melem_scale(c.R, expr0, il);
    }
    int n = int(gens.size());
    gens.push_back(std::move(r));
    exprs.push_back(track ? std::move(expr0) : ModElem{});
    block.push_back(changed ? -1 : blk);
    bucket[gens[n].lead().pos].push_back(n);
    push_pairs(n);
  }

  void run() {
    const auto& F = c.R.field();
    while (!pq.empty()) {
      PairEntry pe = pq.top();
      pq.pop();
      if (bound >= 0 && pe.deg > bound) {
        truncated = true;
        continue;
      }
      const ModElem& gi = gens[pe.i];
      const ModElem& gj = gens[pe.j];
      Monomial u = gi.lead().t.m.lcm(gj.lead().t.m);
      Monomial a = u.div(gi.lead().t.m);
      Monomial b = u.div(gj.lead().t.m);
      // both generators are monic
      ModElem s = melem_add(c.R, c.B, c.spec, melem_mul_term(c.R, gi, a, 1),
                            melem_mul_term(c.R, gj, b, F.neg(1)));
      if (s.is_zero()) continue;
      ModElem expr;
      if (track)
        expr = melem_add(c.R, exprB, exprSpec,
                         melem_mul_term(c.R, exprs[pe.i], a, 1),
                         melem_mul_term(c.R, exprs[pe.j], b, F.neg(1)));
      insert(s, std::move(expr), -1);
    }
  }
};

// Sorted order for canonical bases: ascending on leads.
std::vector<int> canonical_order(const Ctx& c, const std::vector<ModElem>& v,
                                 const std::vector<int>& idx) {
  std::vector<int> out = idx;
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    int cmp = cmp_mterm(c.R, c.B, c.spec, v[a].lead(), v[b].lead());
    if (cmp != 0) return cmp < 0;
    return a < b;
  });
  return out;
}

struct ReducedResult {
  std::vector<ModElem> gens;   // reduced, monic, canonical order
  std::vector<ModElem> exprs;  // tracking for each gen (if tracked)
  bool truncated = false;
};

ReducedResult reduce_basis(const Ctx& c, Builder& bld) {
  ReducedResult out;
  out.truncated = bld.truncated;
  // drop generators whose lead is divisible by another kept lead
  std::vector<int> all(bld.gens.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
  std::vector<int> sorted = canonical_order(c, bld.gens, all);
  std::vector<int> kept;
  for (int idx : sorted) {
    const MTerm& ld = bld.gens[idx].lead();
    bool redundant = false;
    for (int k : kept) {
      const MTerm& lk = bld.gens[k].lead();
      if (lk.pos == ld.pos && lk.t.m.divides(ld.t.m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(idx);
  }
  // tail-reduce each against the others (leads are pairwise indivisible,
  // so a single pass leaves everything fully reduced)
  std::vector<ModElem> kg;
  std::vector<std::vector<int>> kbucket(static_cast<size_t>(c.B.rank()));
  for (size_t k = 0; k < kept.size(); ++k) {
    kg.push_back(bld.gens[kept[k]]);
    kbucket[kg[k].lead().pos].push_back(int(k));
  }
  const auto& F = c.R.field();
  for (size_t k = 0; k < kg.size(); ++k) {
    // temporarily remove k from its bucket
    auto& bb = kbucket[kg[k].lead().pos];
    bb.erase(std::find(bb.begin(), bb.end(), int(k)));
    Quotients q;
    ModElem r = nf_full(c, kg, kbucket, kg[k], bld.track ? &q : nullptr);
    if (bld.track) {
      // quotient indices refer into kg, whose live expressions sit at
      // exprs[kept[...]] and are updated in place as the pass proceeds
      ModElem e = bld.exprs[size_t(kept[k])];
      for (const auto& [g, qt] : q)
        e = melem_add(c.R, bld.exprB, bld.exprSpec, e,
                      melem_mul_term(c.R, bld.exprs[size_t(kept[size_t(g)])],
                                     qt.m, F.neg(qt.c)));
      bld.exprs[size_t(kept[k])] = std::move(e);
    }
    kg[k] = std::move(r);
    bb.push_back(int(k));
    std::sort(bb.begin(), bb.end());
  }
  // canonical final order
  std::vector<int> fi(kg.size());
  for (size_t i = 0; i < fi.size(); ++i) fi[i] = int(i);
  std::vector<int> order = canonical_order(c, kg, fi);
  for (int i : order) {
    out.gens.push_back(kg[size_t(i)]);
    if (bld.track) out.exprs.push_back(bld.exprs[kept[size_t(i)]]);
  }
  return out;
}

void check_homogeneous(const FreeBasis& B, const std::vector<ModElem>& gens) {
  for (const auto& g : gens)
    if (!melem_is_homogeneous(B, g))
      throw std::invalid_argument("groebner: inhomogeneous generator");
}

std::vector<std::vector<int>> make_buckets(const FreeBasis& B,
                                           const std::vector<ModElem>& gens) {
  std::vector<std::vector<int>> bucket(static_cast<size_t>(B.rank()));
  for (size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) bucket[gens[i].lead().pos].push_back(int(i));
  return bucket;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const FreeBasis& basis,
                         const OrderSpec& order,
                         const std::vector<ModElem>& gens,
                         const GBOptions& opt) {
  check_homogeneous(basis, gens);
  Ctx c{*ring, basis, order};
  Builder bld(c, false, opt.deg_bound);
  for (const auto& g : gens)
    if (!g.is_zero()) bld.insert(g, ModElem{}, -1);
  bld.run();
  ReducedResult rr = reduce_basis(c, bld);
  GroebnerBasis G;
  G.ring = ring;
  G.basis = basis;
  G.order = order;
  G.gens = std::move(rr.gens);
  G.reduced = true;
  G.truncated = rr.truncated;
  G.deg_bound = opt.deg_bound;
  return G;
}

ModElem normal_form(const GroebnerBasis& G, const ModElem& v) {
  Ctx c{*G.ring, G.basis, G.order};
  auto bucket = make_buckets(G.basis, G.gens);
  return nf_full(c, G.gens, bucket, melem_make(*G.ring, G.basis, G.order, v.t),
                 nullptr);
}

Poly normal_form_poly(const GroebnerBasis& G, const Poly& f) {
  if (G.basis.rank() != 1)
    throw std::invalid_argument("normal_form_poly: not an ideal basis");
  ModElem v = melem_inject(*G.ring, G.basis, G.order, 0, f);
  return melem_component(*G.ring, normal_form(G, v), 0);
}

bool buchberger_criterion_holds(const GroebnerBasis& G) {
  Ctx c{*G.ring, G.basis, G.order};
  auto bucket = make_buckets(G.basis, G.gens);
  const auto& F = G.ring->field();
  for (size_t i = 0; i < G.gens.size(); ++i)
    for (size_t j = i + 1; j < G.gens.size(); ++j) {
      const MTerm& a = G.gens[i].lead();
      const MTerm& b = G.gens[j].lead();
      if (a.pos != b.pos) continue;
      Monomial u = a.t.m.lcm(b.t.m);
      ModElem s = melem_add(
          c.R, c.B, c.spec,
          melem_mul_term(c.R, G.gens[i], u.div(a.t.m), F.inv(a.t.c)),
          melem_mul_term(c.R, G.gens[j], u.div(b.t.m), F.neg(F.inv(b.t.c))));
      if (!nf_full(c, G.gens, bucket, s, nullptr).is_zero()) return false;
    }
  return true;
}

std::vector<ModElem> syzygy_basis(const GroebnerBasis& G) {
  if (!G.reduced)
    throw std::invalid_argument("syzygy_basis: basis must be reduced");
  Ctx c{*G.ring, G.basis, G.order};
  auto bucket = make_buckets(G.basis, G.gens);
  const auto& F = G.ring->field();
  std::vector<Rational> degs;
  for (const auto& g : G.gens) degs.push_back(*melem_degree(G.basis, g));
  FreeBasis sB = FreeBasis::make(*G.ring, degs);
  OrderSpec sSpec;
  // pairs in normal-selection order for determinism
  std::vector<PairEntry> pairs;
  for (int i = 0; i < G.size(); ++i)
    for (int j = i + 1; j < G.size(); ++j) {
      const MTerm& a = G.gens[size_t(i)].lead();
      const MTerm& b = G.gens[size_t(j)].lead();
      if (a.pos != b.pos) continue;
      Monomial u = a.t.m.lcm(b.t.m);
      pairs.push_back(
          PairEntry{c.R.sdeg(u) * c.B.mono_scale + c.B.sdeg[a.pos], i, j});
    }
  std::sort(pairs.begin(), pairs.end(),
            [](const PairEntry& x, const PairEntry& y) { return y > x; });
  std::vector<ModElem> out;
  for (const auto& pe : pairs) {
    const ModElem& gi = G.gens[size_t(pe.i)];
    const ModElem& gj = G.gens[size_t(pe.j)];
    Monomial u = gi.lead().t.m.lcm(gj.lead().t.m);
    Monomial a = u.div(gi.lead().t.m);
    Monomial b = u.div(gj.lead().t.m);
    ModElem s = melem_add(c.R, c.B, c.spec, melem_mul_term(c.R, gi, a, 1),
                          melem_mul_term(c.R, gj, b, F.neg(1)));
    Quotients q;
    ModElem r = nf_full(c, G.gens, bucket, s, &q);
    if (!r.is_zero())
      throw std::logic_error("syzygy_basis: S-pair did not reduce to zero");
    std::vector<MTerm> terms;
    {
      MTerm mt;
      mt.pos = pe.i;
      mt.t.m = a;
      mt.t.c = 1;
      terms.push_back(mt);
      mt.pos = pe.j;
      mt.t.m = b;
      mt.t.c = F.neg(1);
      terms.push_back(mt);
    }
    for (const auto& [k, qt] : q) {
      MTerm mt;
      mt.pos = k;
      mt.t.m = qt.m;
      mt.t.c = F.neg(qt.c);
      terms.push_back(mt);
    }
    ModElem syz = melem_make(c.R, sB, sSpec, std::move(terms));
    if (!syz.is_zero()) out.push_back(std::move(syz));
  }
  return out;
}

static SyzygyResult syzygies_of_blocked(const RingPtr& ring,
                                        const FreeBasis& basis,
                                        const OrderSpec& order,
                                        const std::vector<ModElem>& inputs,
                                        const std::vector<int>& blocks,
                                        const GBOptions& opt);

SyzygyResult syzygies_of(const RingPtr& ring, const FreeBasis& basis,
                         const OrderSpec& order,
                         const std::vector<ModElem>& inputs,
                         const GBOptions& opt) {
  return syzygies_of_blocked(ring, basis, order, inputs, std::vector<int>(),
                             opt);
}

static SyzygyResult syzygies_of_blocked(const RingPtr& ring,
                                        const FreeBasis& basis,
                                        const OrderSpec& order,
                                        const std::vector<ModElem>& inputs,
                                        const std::vector<int>& blocks,
                                        const GBOptions& opt) {
  check_homogeneous(basis, inputs);
  Ctx c{*ring, basis, order};
  Builder bld(c, true, opt.deg_bound);
  // expression ambient: one position per input
  std::vector<Rational> ideg;
  for (const auto& v : inputs) {
    auto d = melem_degree(basis, v);
    ideg.push_back(d ? *d : Rational(0));
  }
  bld.exprB = FreeBasis::make(*ring, ideg);
  bld.exprSpec = OrderSpec{};
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) continue;  // handled by the identity rows
    ModElem e0 = melem_unit(*ring, bld.exprB, bld.exprSpec, int(i));
    bld.insert(inputs[i], std::move(e0), blocks.empty() ? -1 : blocks[i]);
  }
  bld.run();
  ReducedResult rr = reduce_basis(c, bld);

  SyzygyResult res;
  res.gb.ring = ring;
  res.gb.basis = basis;
  res.gb.order = order;
  res.gb.gens = rr.gens;
  res.gb.reduced = true;
  res.gb.truncated = rr.truncated;
  res.gb.deg_bound = opt.deg_bound;
  res.syz_basis = bld.exprB;

  // Schreyer syzygies of the reduced basis, transported to input coords
  std::vector<ModElem> Z = syzygy_basis(res.gb);
  const auto& F = ring->field();
  for (const auto& z : Z) {
    ModElem s;
    for (const auto& mt : z.t)
      s = melem_add(*ring, bld.exprB, bld.exprSpec, s,
                    melem_mul_term(*ring, rr.exprs[size_t(mt.pos)], mt.t.m,
                                   mt.t.c));
    if (!s.is_zero()) res.syzygies.push_back(std::move(s));
  }
  // identity-minus-division rows: input_j - sum_k U_jk * gb_k
  auto bucket = make_buckets(basis, rr.gens);
  for (size_t j = 0; j < inputs.size(); ++j) {
    Quotients q;
    ModElem r = nf_full(c, rr.gens, bucket,
                        melem_make(*ring, basis, order, inputs[j].t), &q);
    if (!r.is_zero())
      throw std::logic_error("syzygies_of: input failed to divide by basis");
    ModElem row = melem_unit(*ring, bld.exprB, bld.exprSpec, int(j));
    for (const auto& [k, qt] : q)
      row = melem_add(*ring, bld.exprB, bld.exprSpec, row,
                      melem_mul_term(*ring, rr.exprs[size_t(k)], qt.m,
                                     F.neg(qt.c)));
    if (!row.is_zero()) res.syzygies.push_back(std::move(row));
  }
  return res;
}

std::vector<ModElem> kernel_mod_submodule(
    const RingPtr& ring, const FreeBasis& tgt, const FreeBasis& src,
    const std::vector<ModElem>& cols, const std::vector<ModElem>& tgt_relations,
    const GroebnerBasis* ideal, const GBOptions& opt, bool reduce_entries) {
  OrderSpec order;  // plain POT on the target
  std::vector<ModElem> inputs = cols;
  std::vector<int> blocks(cols.size(), -1);
  for (const auto& r : tgt_relations) {
    inputs.push_back(r);
    blocks.push_back(-1);
  }
  if (ideal && !ideal->gens.empty()) {
    for (int pos = 0; pos < tgt.rank(); ++pos)
      for (const auto& h : ideal->gens) {
        inputs.push_back(melem_inject(*ring, tgt, order, pos,
                                      melem_component(*ring, h, 0)));
        blocks.push_back(pos);
      }
  }
  SyzygyResult sr = syzygies_of_blocked(ring, tgt, order, inputs, blocks, opt);

  // project to the column block and reduce entries mod the ideal
  std::vector<ModElem> out;
  OrderSpec srcSpec;
  for (const auto& s : sr.syzygies) {
    std::vector<MTerm> keep;
    for (const auto& mt : s.t)
      if (mt.pos < int(cols.size())) keep.push_back(mt);
    if (keep.empty()) continue;
    ModElem v = melem_make(*ring, src, srcSpec, std::move(keep));
    if (reduce_entries && ideal && !ideal->gens.empty()) {
      std::vector<Poly> comps = melem_to_columns(*ring, v, src.rank());
      for (auto& f : comps) f = normal_form_poly(*ideal, f);
      v = melem_from_columns(*ring, src, srcSpec, comps);
    }
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  // dedupe identical generators, deterministic order
  Ctx c{*ring, src, srcSpec};
  std::vector<int> idx(out.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  std::vector<int> order2 = canonical_order(c, out, idx);
  std::vector<ModElem> fin;
  for (int i : order2) {
    if (!fin.empty() && fin.back().t.size() == out[size_t(i)].t.size()) {
      bool same = true;
      for (size_t k = 0; k < fin.back().t.size(); ++k) {
        const auto& a = fin.back().t[k];
        const auto& b = out[size_t(i)].t[k];
        if (a.pos != b.pos || a.t.c != b.t.c || !(a.t.m == b.t.m)) {
          same = false;
          break;
        }
      }
      if (same) continue;
    }
    fin.push_back(out[size_t(i)]);
  }
  return fin;
}

std::vector<ModElem> kernel_of_module_map(const RingPtr& ring,
                                          const FreeBasis& tgt,
                                          const FreeBasis& src,
                                          const std::vector<ModElem>& cols,
                                          const GroebnerBasis* ideal,
                                          const GBOptions& opt) {
  return kernel_mod_submodule(ring, tgt, src, cols, {}, ideal, opt);
}

GroebnerBasis eliminate(const GroebnerBasis& G, const std::vector<int>& keep) {
  if (G.basis.rank() != 1)
    throw std::invalid_argument("eliminate: expects an ideal basis");
  std::uint32_t mask = 0;
  for (int i = 0; i < G.ring->nvars(); ++i) mask |= 1u << i;
  for (int k : keep) mask &= ~(1u << k);
  OrderSpec elimSpec;
  elimSpec.elim_mask = mask;
  GroebnerBasis big = buchberger(G.ring, G.basis, elimSpec, G.gens);
  GroebnerBasis out;
  out.ring = G.ring;
  out.basis = G.basis;
  out.order = OrderSpec{};
  for (const auto& g : big.gens) {
    bool pure = true;
    for (const auto& mt : g.t)
      if (elim_blockdeg(mask, mt.t.m) != 0) {
        pure = false;
        break;
      }
    if (pure) out.gens.push_back(g);
  }
  // re-sort under the standard order (restriction of the block order to
  // the kept variables agrees with it, so this is still a reduced GB)
  Ctx c{*G.ring, out.basis, out.order};
  std::vector<int> idx(out.gens.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  std::vector<int> ord = canonical_order(c, out.gens, idx);
  std::vector<ModElem> sorted;
  for (int i : ord) sorted.push_back(out.gens[size_t(i)]);
  out.gens = std::move(sorted);
  out.reduced = true;
  out.truncated = big.truncated;
  return out;
}

std::vector<ModElem> module_eliminate(const RingPtr& ring,
                                      const FreeBasis& basis,
                                      const std::vector<ModElem>& gens,
                                      std::uint32_t elim_mask) {
  OrderSpec spec;
  spec.elim_mask = elim_mask;
  GroebnerBasis G = buchberger(ring, basis, spec, gens);
  std::vector<ModElem> out;
  for (const auto& g : G.gens) {
    bool pure = true;
    for (const auto& mt : g.t)
      if (elim_blockdeg(elim_mask, mt.t.m) != 0) {
        pure = false;
        break;
      }
    if (pure) out.push_back(g);
  }
  return out;
}

std::vector<std::optional<std::vector<Poly>>> lift_through_batch(
    const RingPtr& ring, const FreeBasis& tgt,
    const std::vector<ModElem>& cols, const std::vector<ModElem>& tgt_relations,
    const GroebnerBasis* ideal, const std::vector<ModElem>& targets) {
  OrderSpec order;
  std::vector<ModElem> inputs = cols;
  std::vector<int> blocks(cols.size(), -1);
  for (const auto& r : tgt_relations) {
    inputs.push_back(r);
    blocks.push_back(-1);
  }
  if (ideal && !ideal->gens.empty()) {
    for (int pos = 0; pos < tgt.rank(); ++pos)
      for (const auto& h : ideal->gens) {
        inputs.push_back(melem_inject(*ring, tgt, order, pos,
                                      melem_component(*ring, h, 0)));
        blocks.push_back(pos);
      }
  }
  check_homogeneous(tgt, inputs);
  Ctx c{*ring, tgt, order};
  Builder bld(c, true, -1);
  std::vector<Rational> ideg;
  for (const auto& v : inputs) {
    auto d = melem_degree(tgt, v);
    ideg.push_back(d ? *d : Rational(0));
  }
  bld.exprB = FreeBasis::make(*ring, ideg);
  bld.exprSpec = OrderSpec{};
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) continue;
    bld.insert(inputs[i], melem_unit(*ring, bld.exprB, bld.exprSpec, int(i)),
               blocks[i]);
  }
  bld.run();
  ReducedResult rr = reduce_basis(c, bld);
  auto bucket = make_buckets(tgt, rr.gens);

  std::vector<std::optional<std::vector<Poly>>> out;
  for (const auto& v : targets) {
    Quotients q;
    ModElem r = nf_full(c, rr.gens, bucket, melem_make(*ring, tgt, order, v.t),
                        &q);
    if (!r.is_zero()) {
      out.push_back(std::nullopt);
      continue;
    }
    ModElem coords;
    for (const auto& [k, qt] : q)
      coords = melem_add(*ring, bld.exprB, bld.exprSpec, coords,
                         melem_mul_term(*ring, rr.exprs[size_t(k)], qt.m,
                                        qt.c));
    std::vector<std::vector<Term>> acc(cols.size());
    for (const auto& mt : coords.t)
      if (mt.pos < int(cols.size())) acc[size_t(mt.pos)].push_back(mt.t);
    std::vector<Poly> lift(cols.size());
    for (size_t k = 0; k < lift.size(); ++k)
      lift[k] = poly_make(*ring, std::move(acc[k]));
    if (ideal && !ideal->gens.empty())
      for (auto& f : lift) f = normal_form_poly(*ideal, f);
    out.push_back(std::move(lift));
  }
  return out;
}

std::optional<std::vector<Poly>> lift_through(
    const RingPtr& ring, const FreeBasis& tgt,
    const std::vector<ModElem>& cols, const std::vector<ModElem>& tgt_relations,
    const GroebnerBasis* ideal, const ModElem& target) {
  auto v = lift_through_batch(ring, tgt, cols, tgt_relations, ideal, {target});
  return v.at(0);
}

SpanBuilder::SpanBuilder(RingPtr ring, FreeBasis basis, OrderSpec order,
                         const GroebnerBasis* ideal)
    : ring_(std::move(ring)), basis_(std::move(basis)), order_(std::move(order)) {
  bucket_.resize(size_t(basis_.rank()));
  if (ideal && !ideal->gens.empty()) {
    for (int pos = 0; pos < basis_.rank(); ++pos)
      for (const auto& h : ideal->gens) {
        ModElem e = melem_inject(*ring_, basis_, order_, pos,
                                 melem_component(*ring_, h, 0));
        int n = int(gens_.size());
        gens_.push_back(std::move(e));
        is_known_gb_.push_back(1);
        bucket_[gens_[size_t(n)].lead().pos].push_back(n);
      }
  }
}

void SpanBuilder::complete() {
  Ctx c{*ring_, basis_, order_};
  const auto& F = ring_->field();
  while (!pending_.empty()) {
    // lowest-degree pair first
    size_t best = 0;
    std::int64_t bestDeg = -1;
    for (size_t k = 0; k < pending_.size(); ++k) {
      auto [i, j] = pending_[k];
      Monomial u = gens_[size_t(i)].lead().t.m.lcm(gens_[size_t(j)].lead().t.m);
      std::int64_t d = ring_->sdeg(u) * basis_.mono_scale +
                       basis_.sdeg[gens_[size_t(i)].lead().pos];
      if (bestDeg < 0 || d < bestDeg) {
        bestDeg = d;
        best = k;
      }
    }
    auto [i, j] = pending_[best];
    pending_.erase(pending_.begin() + std::ptrdiff_t(best));
    const ModElem& gi = gens_[size_t(i)];
    const ModElem& gj = gens_[size_t(j)];
    Monomial u = gi.lead().t.m.lcm(gj.lead().t.m);
    ModElem s = melem_add(
        c.R, c.B, c.spec,
        melem_mul_term(c.R, gi, u.div(gi.lead().t.m), F.inv(gi.lead().t.c)),
        melem_mul_term(c.R, gj, u.div(gj.lead().t.m),
                       F.neg(F.inv(gj.lead().t.c))));
    ModElem r = nf_full(c, gens_, bucket_, s, nullptr);
    if (r.is_zero()) continue;
    r = melem_scale(*ring_, r, F.inv(r.lead().t.c));
    int n = int(gens_.size());
    for (int k = 0; k < n; ++k) {
      if (gens_[size_t(k)].lead().pos != r.lead().pos) continue;
      pending_.emplace_back(k, n);
    }
    gens_.push_back(std::move(r));
    is_known_gb_.push_back(0);
    bucket_[gens_[size_t(n)].lead().pos].push_back(n);
  }
}

bool SpanBuilder::add(const ModElem& elem) {
  Ctx c{*ring_, basis_, order_};
  const auto& F = ring_->field();
  complete();
  ModElem r = nf_full(c, gens_, bucket_,
                      melem_make(*ring_, basis_, order_, elem.t), nullptr);
  if (r.is_zero()) return false;
  r = melem_scale(*ring_, r, F.inv(r.lead().t.c));
  int n = int(gens_.size());
  for (int k = 0; k < n; ++k) {
    if (gens_[size_t(k)].lead().pos != r.lead().pos) continue;
    bool bothKnown = is_known_gb_[size_t(k)];
    // pairs between two pristine ideal copies never arise here: the new
    // element is never a pristine copy
    (void)bothKnown;
    pending_.emplace_back(k, n);
  }
  gens_.push_back(std::move(r));
  is_known_gb_.push_back(0);
  bucket_[gens_[size_t(n)].lead().pos].push_back(n);
  return true;
}

bool SpanBuilder::contains(const ModElem& elem) const {
  auto* self = const_cast<SpanBuilder*>(this);
  self->complete();
  Ctx c{*ring_, basis_, order_};
  return nf_full(c, gens_, bucket_,
                 melem_make(*ring_, basis_, order_, elem.t), nullptr)
      .is_zero();
}

std::vector<int> prune_to_minimal_generators(const RingPtr& ring,
                                             const FreeBasis& basis,
                                             const std::vector<ModElem>& gens,
                                             const GroebnerBasis* ideal) {
  std::vector<int> idx;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) idx.push_back(int(i));
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    std::int64_t da = mod_sdeg(basis, gens[size_t(a)].lead());
    std::int64_t db = mod_sdeg(basis, gens[size_t(b)].lead());
    if (da != db) return da < db;
    return a < b;
  });
  SpanBuilder span(ring, basis, OrderSpec{}, ideal);
  std::vector<int> kept;
  for (int i : idx)
    if (span.add(gens[size_t(i)])) kept.push_back(i);
  return kept;
}

}  // namespace frobkit
