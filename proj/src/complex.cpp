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

#include "frobkit/complex.hpp"

#include <algorithm>

#include "frobkit/fpmatrix.hpp"

namespace frobkit {

ModuleComplex as_module_complex(const FreeComplex& C) {
  ModuleComplex out;
  out.ring = C.ring;
  out.lo = C.lo;
  for (const auto& lvl : C.levels)
    out.terms.push_back(free_module(C.ring, lvl.deg));
  out.d = C.d;
  return out;
}

static ModElem apply_columns(const PolyRing& R, const FreeBasis& tgt,
                             const std::vector<ModElem>& cols,
                             const ModElem& v) {
  ModElem acc;
  for (const auto& mt : v.t)
    acc = melem_add(R, tgt, OrderSpec{}, acc,
                    melem_mul_term(R, cols[size_t(mt.pos)], mt.t.m, mt.t.c));
  return acc;
}

bool complex_squares_to_zero(const FreeComplex& C) {
  for (int i = 2; i < C.length(); ++i) {
    for (const auto& col : C.d[size_t(i)]) {
      ModElem img = apply_columns(C.ring->P(), C.levels[size_t(i - 2)],
                                  C.d[size_t(i - 1)], col);
      // reduce modulo the ring ideal (entries live in the quotient)
      auto comps = melem_to_columns(C.ring->P(), img,
                                    C.levels[size_t(i - 2)].rank());
      for (auto& f : comps)
        if (!C.ring->nf(f).is_zero()) return false;
    }
  }
  return true;
}

bool complex_squares_to_zero(const ModuleComplex& C) {
  for (int i = 2; i < C.length(); ++i) {
    const FiniteModule& tgt = C.terms[size_t(i - 2)];
    const GroebnerBasis& G = module_rel_gb(tgt);
    for (const auto& col : C.d[size_t(i)]) {
      ModElem img = apply_columns(C.ring->P(), C.terms[size_t(i - 1)].gens,
                                  C.d[size_t(i - 1)], col);
      if (!normal_form(G, img).is_zero()) return false;
    }
  }
  return true;
}

FreeComplex koszul_complex(const QRingPtr& A, const std::vector<Poly>& elems) {
  const PolyRing& R = A->P();
  for (const auto& f : elems)
    for (const auto& t : f.t)
      if (t.sdeg == 0)
        throw std::invalid_argument("koszul: element not in the irrelevant ideal");
  const int k = int(elems.size());
  std::vector<Rational> fdeg(size_t(k), Rational(0));
  for (int j = 0; j < k; ++j) {
    auto d = poly_degree(R, elems[size_t(j)]);
    fdeg[size_t(j)] = d ? *d : Rational(1);  // zero elements: degree free
  }
  // subsets of {0..k-1} in the standard rank order per exterior degree
  std::vector<std::vector<std::vector<int>>> subsets(size_t(k) + 1);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < k; ++j)
      if (mask & (1u << j)) s.push_back(j);
    subsets[s.size()].push_back(s);
  }
  for (auto& bucket : subsets) std::sort(bucket.begin(), bucket.end());
  FreeComplex C;
  C.ring = A;
  C.lo = 0;
  std::vector<std::map<std::vector<int>, int>> index(size_t(k) + 1);
  for (int i = 0; i <= k; ++i) {
    std::vector<Rational> degs;
    for (const auto& s : subsets[size_t(i)]) {
      Rational d(0);
      for (int j : s) d = d + fdeg[size_t(j)];
      index[size_t(i)][s] = int(degs.size());
      degs.push_back(d);
    }
    C.levels.push_back(FreeBasis::make(R, degs));
  }
  C.d.resize(size_t(k) + 1);
  const auto& F = R.field();
  for (int i = 1; i <= k; ++i) {
    for (const auto& s : subsets[size_t(i)]) {
      ModElem col;
      for (size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<int> rest;
        for (size_t t2 = 0; t2 < s.size(); ++t2)
          if (t2 != pos) rest.push_back(s[t2]);
        std::uint32_t sign = (pos % 2 == 0) ? 1 : F.neg(1);
        const Poly& f = elems[size_t(s[pos])];
        if (f.is_zero()) continue;
        ModElem contrib = melem_inject(R, C.levels[size_t(i - 1)], OrderSpec{},
                                       index[size_t(i - 1)][rest],
                                       poly_scale(R, f, sign));
        col = melem_add(R, C.levels[size_t(i - 1)], OrderSpec{}, col, contrib);
      }
      C.d[size_t(i)].push_back(std::move(col));
    }
  }
  return C;
}

ModuleComplex koszul_on_module(const FiniteModule& M,
                               const std::vector<Poly>& elems) {
  FreeComplex K = koszul_complex(M.ring, elems);
  ModuleComplex out;
  out.ring = M.ring;
  out.lo = 0;
  const PolyRing& R = M.ring->P();
  // term_i = direct sum of copies of M shifted by the koszul degrees
  for (int i = 0; i < K.length(); ++i) {
    FiniteModule blocks = shift_degrees(M, K.levels[size_t(i)].deg[0]);
    for (int b = 1; b < K.levels[size_t(i)].rank(); ++b)
      blocks = direct_sum(blocks,
                          shift_degrees(M, K.levels[size_t(i)].deg[size_t(b)]));
    out.terms.push_back(blocks);
  }
  out.d.resize(size_t(K.length()));
  const int g = M.rank();
  for (int i = 1; i < K.length(); ++i) {
    const FreeBasis& tgtB = out.terms[size_t(i - 1)].gens;
    for (int c = 0; c < K.levels[size_t(i)].rank(); ++c) {
      // block column: koszul entry f at (r, c) becomes f * Id_g
      for (int j = 0; j < g; ++j) {
        ModElem col;
        for (const auto& mt : K.d[size_t(i)][size_t(c)].t) {
          MTerm nt = mt;
          nt.pos = mt.pos * g + j;
          col = melem_add(R, tgtB, OrderSpec{}, col,
                          melem_make(R, tgtB, OrderSpec{}, {nt}));
        }
        out.d[size_t(i)].push_back(std::move(col));
      }
    }
  }
  return out;
}

std::vector<Poly> minimal_irrelevant_generators(const QRingPtr& A) {
  const PolyRing& R = A->P();
  const int n = R.nvars();
  // group variables by weight; x_i is redundant iff it lies in
  // m^2 + I + span(kept variables of the same degree)
  std::vector<Poly> kept;
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[size_t(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return R.wscaled(a) < R.wscaled(b);
  });
  for (int idx : order) {
    std::int64_t d = R.wscaled(idx);
    // basis of the degree-d piece of the quotient ring
    auto sm = A->standard_monomials(d);
    auto it = sm.find(d);
    if (it == sm.end()) continue;  // variable is zero in A
    const auto& basis = it->second;
    std::map<std::array<std::uint16_t, kMaxVars>, int> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i].e] = int(i);
    FpMatrix rows(R.p(), 0, int(basis.size()));
    auto add_row = [&](const Poly& f) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& t : A->nf(f).t) {
        auto p2 = pos.find(t.m.e);
        if (p2 != pos.end()) row[size_t(p2->second)] = t.c;
      }
      rows.append_row(row);
    };
    // m^2 in degree d: products of two standard monomials of positive degree
    auto all = A->standard_monomials(d);
    for (const auto& [d1, list1] : all) {
      if (d1 <= 0 || d1 >= d) continue;
      auto it2 = all.find(d - d1);
      if (it2 == all.end()) continue;
      for (const auto& m1 : list1)
        for (const auto& m2 : it2->second)
          add_row(poly_mono(R, m1.mul(m2), 1));
    }
    for (const auto& f : kept) {
      auto dd = poly_degree(R, f);
      if (dd && dd->num * (R.wden() / dd->den) == d) add_row(f);
    }
    RrefResult rr = rref(rows);
    std::vector<std::uint32_t> v(basis.size(), 0);
    Poly xv = A->nf(poly_var(R, idx));
    for (const auto& t : xv.t) {
      auto p2 = pos.find(t.m.e);
      if (p2 != pos.end()) v[size_t(p2->second)] = t.c;
    }
    reduce_against_rref(rr, v);
    bool zero = true;
    for (auto x : v)
      if (x) {
        zero = false;
        break;
      }
    if (!zero) kept.push_back(poly_var(R, idx));
  }
  return kept;
}

FiniteModule homology_module(const ModuleComplex& C, int i) {
  const int li = i - C.lo;
  if (li < 0 || li >= C.length())
    throw std::invalid_argument("homology_module: index out of range");
  const FiniteModule& Mi = C.terms[size_t(li)];
  const QRingPtr& A = C.ring;
  const GroebnerBasis* ideal = &A->ideal();
  // kernel of d_i into the presented lower term
  std::vector<ModElem> ker;
  if (li == 0 || C.d[size_t(li)].empty()) {
    for (int j = 0; j < Mi.rank(); ++j)
      ker.push_back(melem_unit(A->P(), Mi.gens, OrderSpec{}, j));
  } else {
    ker = kernel_mod_submodule(A->poly(), C.terms[size_t(li - 1)].gens, Mi.gens,
                               C.d[size_t(li)], C.terms[size_t(li - 1)].rels,
                               ideal);
  }
  // image generators + the term's own relations, written in kernel coords
  std::vector<ModElem> img;
  if (li + 1 < C.length())
    for (const auto& col : C.d[size_t(li + 1)]) img.push_back(col);
  for (const auto& r : Mi.rels) img.push_back(r);

  std::vector<Rational> kdeg;
  for (const auto& kgen : ker) {
    auto d = melem_degree(Mi.gens, kgen);
    kdeg.push_back(d ? *d : Rational(0));
  }
  auto lifts = lift_through_batch(A->poly(), Mi.gens, ker, {}, ideal, img);
  FreeBasis hB = FreeBasis::make(A->P(), kdeg);
  std::vector<ModElem> hrels;
  for (size_t t = 0; t < lifts.size(); ++t) {
    if (!lifts[t])
      throw std::logic_error("homology_module: image not inside kernel");
    hrels.push_back(melem_from_columns(A->P(), hB, OrderSpec{}, *lifts[t]));
  }
  // syzygies among the kernel generators over the quotient ring
  for (auto& s :
       kernel_of_module_map(A->poly(), Mi.gens, hB, ker, ideal))
    hrels.push_back(std::move(s));
  return make_module(A, kdeg, std::move(hrels));
}

bool homology_is_zero(const ModuleComplex& C, int i) {
  const int li = i - C.lo;
  if (li < 0 || li >= C.length()) return true;
  const FiniteModule& Mi = C.terms[size_t(li)];
  const QRingPtr& A = C.ring;
  const GroebnerBasis* ideal = &A->ideal();
  std::vector<ModElem> ker;
  if (li == 0 || C.d[size_t(li)].empty()) {
    for (int j = 0; j < Mi.rank(); ++j)
      ker.push_back(melem_unit(A->P(), Mi.gens, OrderSpec{}, j));
  } else {
    ker = kernel_mod_submodule(A->poly(), C.terms[size_t(li - 1)].gens, Mi.gens,
                               C.d[size_t(li)], C.terms[size_t(li - 1)].rels,
                               ideal);
  }
  std::vector<ModElem> img = Mi.rels;
  if (li + 1 < C.length())
    for (const auto& col : C.d[size_t(li + 1)]) img.push_back(col);
  // span(img) must contain every kernel generator
  SpanBuilder span(A->poly(), Mi.gens, OrderSpec{}, ideal);
  for (const auto& v : img) span.add(v);
  for (const auto& kgen : ker)
    if (!span.contains(kgen)) return false;
  return true;
}

std::vector<FiniteModule> complex_homology(const ModuleComplex& C) {
  std::vector<FiniteModule> out;
  for (int i = C.lo; i <= C.hi(); ++i) out.push_back(homology_module(C, i));
  return out;
}

ModuleComplex frobenius_pushforward_complex(const ModuleComplex& C, int e) {
  ModuleComplex out;
  out.ring = C.ring;
  out.lo = C.lo;
  for (const auto& t : C.terms)
    out.terms.push_back(frobenius_pushforward(t, e));
  out.d.resize(size_t(C.length()));
  for (int i = 1; i < C.length(); ++i)
    out.d[size_t(i)] =
        frobenius_push_map(C.ring, C.terms[size_t(i)].gens,
                           C.terms[size_t(i - 1)].gens, C.d[size_t(i)], e);
  return out;
}

}  // namespace frobkit
