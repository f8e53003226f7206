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

#include "frobkit/pushforward.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "frobkit/fpmatrix.hpp"

namespace frobkit {

namespace {

// The graph ring Q = F_p[target vars | source vars] with the target
// block first (it gets eliminated).  Source weights are scaled by the
// map's degree scale so the graph relations are homogeneous.
struct GraphRing {
  RingPtr Q;
  int nB;  // target block size
  int nA;  // source block size
  std::uint32_t elim_mask;
  GroebnerBasis Jgb;  // I_B + graph relations, reduced
};

GraphRing build_graph_ring(const RingMap& psi) {
  const PolyRing& A = psi.source->P();
  const PolyRing& B = psi.target->P();
  if (A.p() != B.p())
    throw std::invalid_argument("pushforward: characteristic mismatch");
  std::vector<std::string> names;
  std::vector<Rational> weights;
  for (int i = 0; i < B.nvars(); ++i) {
    names.push_back(B.names()[size_t(i)] + "@");
    weights.push_back(B.weights()[size_t(i)]);
  }
  for (int j = 0; j < A.nvars(); ++j) {
    names.push_back(A.names()[size_t(j)] + "$");
    weights.push_back(A.weights()[size_t(j)] * psi.scale);
  }
  GraphRing g;
  g.nB = B.nvars();
  g.nA = A.nvars();
  g.Q = std::make_shared<PolyRing>(B.field(), names, weights);
  g.elim_mask = 0;
  for (int i = 0; i < g.nB; ++i) g.elim_mask |= 1u << i;

  FreeBasis rank1 = FreeBasis::trivial(*g.Q, 1);
  std::vector<ModElem> jg;
  for (const auto& h : psi.target->ideal().gens)
    jg.push_back(melem_inject(
        *g.Q, rank1, OrderSpec{}, 0,
        poly_transport(B, melem_component(B, h, 0), *g.Q, 0)));
  for (int j = 0; j < g.nA; ++j) {
    Poly graph = poly_sub(*g.Q, poly_var(*g.Q, g.nB + j),
                          poly_transport(B, psi.images[size_t(j)], *g.Q, 0));
    if (!graph.is_zero())
      jg.push_back(melem_inject(*g.Q, rank1, OrderSpec{}, 0, graph));
  }
  g.Jgb = buchberger(g.Q, rank1, OrderSpec{}, jg);
  return g;
}

// Transport a polynomial supported on the source block back to the
// source ring.  Entries must be free of target-block variables.
Poly transport_to_source(const GraphRing& g, const PolyRing& A, const Poly& f) {
  std::vector<Term> ts;
  for (const auto& t : f.t) {
    Term u;
    u.c = t.c;
    for (int i = 0; i < g.nB; ++i)
      if (t.m.e[size_t(i)])
        throw std::logic_error("pushforward: target variable survived elimination");
    for (int j = 0; j < g.nA; ++j) u.m.e[size_t(j)] = t.m.e[size_t(g.nB + j)];
    ts.push_back(u);
  }
  return poly_make(A, std::move(ts));
}

// Checks B/(im psi) is artinian and that the candidate generators span
// M/(m_A)M; throws NotModuleFinite otherwise.
void check_generation(const RingMap& psi, const std::vector<Monomial>& ring_gens,
                      const FiniteModule& M) {
  const PolyRing& B = psi.target->P();
  std::vector<Poly> bar_gens;
  for (const auto& h : psi.target->ideal().gens)
    bar_gens.push_back(melem_component(B, h, 0));
  for (const auto& im : psi.images)
    if (!im.is_zero()) bar_gens.push_back(im);
  QRingPtr Bbar = GradedQuotientRing::make(psi.target->poly(), bar_gens);
  FiniteModule Mbar = make_module(Bbar, M.gens.deg, M.rels);
  if (!module_is_artinian(Mbar)) {
    for (int v = 0; v < B.nvars(); ++v) {
      bool found = false;
      for (const auto& gg : Bbar->ideal().gens) {
        const Monomial& mm = gg.lead().t.m;
        bool pure = mm.e[size_t(v)] > 0;
        for (int w = 0; w < B.nvars() && pure; ++w)
          if (w != v && mm.e[size_t(w)]) pure = false;
        if (pure) {
          found = true;
          break;
        }
      }
      if (!found) throw NotModuleFinite(B.names()[size_t(v)] + "^inf");
    }
    throw NotModuleFinite("?");
  }
  auto basis = module_std_basis(Mbar);
  if (basis.empty()) return;  // zero module: anything generates
  const GroebnerBasis& G = module_rel_gb(Mbar);
  std::map<std::pair<int, std::array<std::uint16_t, kMaxVars>>, int> index;
  for (size_t i = 0; i < basis.size(); ++i)
    index[{basis[i].first, basis[i].second.e}] = int(i);
  FpMatrix rows(B.p(), 0, int(basis.size()));
  for (int j = 0; j < Mbar.rank(); ++j)
    for (const auto& u : ring_gens) {
      ModElem cand = melem_mul_term(
          B, melem_unit(B, Mbar.gens, OrderSpec{}, j), u, 1);
      ModElem nf = normal_form(G, cand);
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& mt : nf.t) {
        auto it = index.find({mt.pos, mt.t.m.e});
        if (it == index.end())
          throw std::logic_error("pushforward: NF left the standard basis");
        row[size_t(it->second)] = mt.t.c;
      }
      rows.append_row(row);
    }
  RrefResult rr = rref(rows);
  if (rr.rank == int(basis.size())) return;
  // witness: first standard basis vector outside the row space
  for (size_t i = 0; i < basis.size(); ++i) {
    std::vector<std::uint32_t> v(basis.size(), 0);
    v[i] = 1;
    reduce_against_rref(rr, v);
    bool zero = true;
    for (auto x : v)
      if (x) {
        zero = false;
        break;
      }
    if (!zero) {
      Poly mono = poly_mono(B, basis[i].second, 1);
      throw NotModuleFinite(poly_str(B, mono) + "*e" +
                            std::to_string(basis[i].first));
    }
  }
  throw NotModuleFinite("?");
}

}  // namespace

std::vector<Monomial> frobenius_generator_exponents(const PolyRing& R, int q) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> rec = [&](int v) {
    if (v == R.nvars()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < q; ++e) {
      cur.e[size_t(v)] = std::uint16_t(e);
      rec(v + 1);
    }
    cur.e[size_t(v)] = 0;
  };
  rec(0);
  return out;
}

FiniteModule pushforward_finite_module(const RingMap& psi,
                                       const std::vector<Monomial>& ring_gens,
                                       const FiniteModule& M) {
  if (M.ring != psi.target)
    throw std::invalid_argument("pushforward: module not over the target ring");
  check_generation(psi, ring_gens, M);
  GraphRing g = build_graph_ring(psi);
  const PolyRing& A = psi.source->P();
  const PolyRing& B = psi.target->P();

  // target of the evaluation map: M's free cover, transported to Q
  FreeBasis tgtB = FreeBasis::make(*g.Q, M.gens.deg);
  OrderSpec spec;
  std::vector<ModElem> rels;
  for (const auto& r : M.rels) {
    auto cols = melem_to_columns(B, r, M.rank());
    std::vector<Poly> qcols;
    for (const auto& f : cols) qcols.push_back(poly_transport(B, f, *g.Q, 0));
    rels.push_back(melem_from_columns(*g.Q, tgtB, spec, qcols));
  }
  // evaluation columns u_a * e_j, indexed j-major
  std::vector<ModElem> cols;
  std::vector<Rational> src_degs;
  for (int j = 0; j < M.rank(); ++j)
    for (const auto& u : ring_gens) {
      Monomial uq = u;  // exponents live on the target block already
      cols.push_back(melem_mul_term(*g.Q, melem_unit(*g.Q, tgtB, spec, j), uq, 1));
      src_degs.push_back(B.degree(u) + M.gens.deg[size_t(j)]);
    }
  FreeBasis srcB = FreeBasis::make(*g.Q, src_degs);
  std::vector<ModElem> K =
      kernel_mod_submodule(g.Q, tgtB, srcB, cols, rels, &g.Jgb, GBOptions{},
                           /*reduce_entries=*/false);
  std::vector<ModElem> pure = module_eliminate(g.Q, srcB, K, g.elim_mask);

  // transport to the source ring; degrees divide by the scale
  std::vector<Rational> out_degs;
  for (const auto& d : src_degs) out_degs.push_back(d / psi.scale);
  FreeBasis outB = FreeBasis::make(A, out_degs);
  std::vector<ModElem> out_rels;
  for (const auto& v : pure) {
    auto comps = melem_to_columns(*g.Q, v, srcB.rank());
    std::vector<Poly> acomps;
    for (const auto& f : comps)
      acomps.push_back(transport_to_source(g, A, f));
    out_rels.push_back(melem_from_columns(A, outB, spec, acomps));
  }
  return make_module(psi.source, out_degs, std::move(out_rels));
}

FiniteModule pushforward_module(const RingMap& psi,
                                const std::vector<Monomial>& gens) {
  return pushforward_finite_module(psi, gens, ring_as_module(psi.target));
}

SubringExpressor::SubringExpressor(RingMap psi, std::vector<Monomial> gens)
    : psi_(std::move(psi)), gens_(std::move(gens)) {}

std::vector<std::optional<std::vector<Poly>>> SubringExpressor::express(
    const std::vector<Poly>& targets) const {
  GraphRing g = build_graph_ring(psi_);
  const PolyRing& A = psi_.source->P();
  const PolyRing& B = psi_.target->P();
  FreeBasis rank1 = FreeBasis::trivial(*g.Q, 1);
  OrderSpec spec;
  const int ng = int(gens_.size());
  const int m = int(targets.size());
  std::vector<ModElem> cols;
  std::vector<Rational> src_degs;
  for (const auto& u : gens_) {
    cols.push_back(melem_inject(*g.Q, rank1, spec, 0, poly_mono(*g.Q, u, 1)));
    src_degs.push_back(B.degree(u));
  }
  for (const auto& t : targets) {
    Poly tq = poly_transport(B, psi_.target->nf(t), *g.Q, 0);
    cols.push_back(melem_inject(*g.Q, rank1, spec, 0, tq));
    auto d = poly_degree(B, psi_.target->nf(t));
    src_degs.push_back(d ? *d : Rational(0));
  }
  FreeBasis srcB = FreeBasis::make(*g.Q, src_degs);
  std::vector<ModElem> K =
      kernel_mod_submodule(g.Q, rank1, srcB, cols, {}, &g.Jgb, GBOptions{},
                           /*reduce_entries=*/false);
  // block order: eliminate target vars, slots above generator coords
  OrderSpec kspec;
  kspec.elim_mask = g.elim_mask;
  kspec.pos_rank.resize(size_t(ng + m));
  for (int l = 0; l < m; ++l) kspec.pos_rank[size_t(ng + l)] = l;
  for (int a = 0; a < ng; ++a) kspec.pos_rank[size_t(a)] = m + a;
  GroebnerBasis GK = buchberger(g.Q, srcB, kspec, K);

  std::vector<std::optional<std::vector<Poly>>> out;
  for (int l = 0; l < m; ++l) {
    if (targets[size_t(l)].is_zero()) {
      out.push_back(std::vector<Poly>(size_t(ng)));
      continue;
    }
    ModElem slot = melem_unit(*g.Q, srcB, kspec, ng + l);
    ModElem r = normal_form(GK, slot);
    bool ok = true;
    std::vector<Poly> coords(static_cast<size_t>(ng));
    std::vector<std::vector<Term>> acc(static_cast<size_t>(ng));
    for (const auto& mt : r.t) {
      if (mt.pos >= ng || elim_blockdeg(g.elim_mask, mt.t.m) != 0) {
        ok = false;
        break;
      }
      acc[size_t(mt.pos)].push_back(mt.t);
    }
    if (!ok) {
      out.push_back(std::nullopt);
      continue;
    }
    for (int a = 0; a < ng; ++a) {
      Poly f = poly_make(*g.Q, std::move(acc[size_t(a)]));
      coords[size_t(a)] = psi_.source->nf(transport_to_source(g, A, f));
    }
    out.push_back(std::move(coords));
  }
  return out;
}

RelativeFrobenius relative_frobenius(const RingMap& phi, int e) {
  const PolyRing& RP = phi.source->P();
  const PolyRing& SP = phi.target->P();
  int q = 1;
  for (int i = 0; i < e; ++i) q *= int(SP.p());

  // A = F_p[x, y'] / (I_S + J(y') + (phi(y_j) - y'^q))
  std::vector<std::string> names = SP.names();
  std::set<std::string> used(names.begin(), names.end());
  std::vector<std::string> ynames;
  for (const auto& yn : RP.names()) {
    std::string cand = yn + "'";
    while (used.count(cand)) cand += "'";
    used.insert(cand);
    ynames.push_back(cand);
    names.push_back(cand);
  }
  std::vector<Rational> weights = SP.weights();
  for (int j = 0; j < RP.nvars(); ++j)
    weights.push_back(RP.weights()[size_t(j)] * phi.scale / Rational(q));
  RingPtr AP = std::make_shared<PolyRing>(SP.field(), names, weights);

  std::vector<Poly> ideal;
  for (const auto& h : phi.target->ideal().gens)
    ideal.push_back(poly_transport(SP, melem_component(SP, h, 0), *AP, 0));
  for (const auto& h : phi.source->ideal().gens)
    ideal.push_back(poly_transport(RP, melem_component(RP, h, 0), *AP,
                                   SP.nvars()));
  for (int j = 0; j < RP.nvars(); ++j) {
    Poly mixed = poly_sub(*AP, poly_transport(SP, phi.images[size_t(j)], *AP, 0),
                          poly_var(*AP, SP.nvars() + j, q));
    if (!mixed.is_zero()) ideal.push_back(mixed);
  }
  QRingPtr A = GradedQuotientRing::make(AP, std::move(ideal));

  // F_rel : A -> S
  std::vector<Poly> images;
  for (int i = 0; i < SP.nvars(); ++i) images.push_back(poly_var(SP, i, q));
  for (int j = 0; j < RP.nvars(); ++j) images.push_back(phi.images[size_t(j)]);
  RingMap F_rel = make_ring_map(A, phi.target, std::move(images));

  // the diagram commutes: F_rel(y'^q) = (e-fold Frobenius of S)(phi(y))
  RingMap FS = frobenius_endo(phi.target, e);
  for (int j = 0; j < RP.nvars(); ++j) {
    Poly lhs = map_apply(F_rel, A->nf(poly_var(*AP, SP.nvars() + j, q)));
    Poly rhs = phi.target->nf(map_apply(FS, phi.images[size_t(j)]));
    if (!(lhs == rhs))
      throw std::logic_error("relative_frobenius: diagram does not commute");
  }

  RelativeFrobenius out;
  out.A = A;
  out.F_rel = F_rel;
  out.M = pushforward_module(F_rel, frobenius_generator_exponents(SP, q));
  out.e = e;
  return out;
}

}  // namespace frobkit
