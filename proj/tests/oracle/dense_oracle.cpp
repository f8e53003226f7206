#include "dense_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobkit/fpmatrix.hpp"
#include "frobkit/ring.hpp"

namespace frobkit::oracle {

namespace {

// Graded pieces of the ambient ring modulo the ideal span, built purely
// from monomial enumeration and row reduction.
struct DenseRing {
  const PolyRing* R = nullptr;
  std::uint32_t p = 2;
  std::int64_t cap = 0;  // scaled by R->wden()
  // per degree: monomials, their index, ideal-span rref, quotient basis
  struct Piece {
    std::vector<Monomial> monos;
    std::map<std::array<std::uint16_t, kMaxVars>, int> index;
    RrefResult ideal_rref;
    std::vector<int> qbasis;  // indices of non-pivot monomials
    std::map<std::int64_t, int> qindex_of_mono;  // mono index -> quotient pos
  };
  std::map<std::int64_t, Piece> pieces;

  const Piece& piece(std::int64_t d) const {
    auto it = pieces.find(d);
    if (it == pieces.end())
      throw std::logic_error("oracle: degree outside the built cap");
    return it->second;
  }

  int qdim(std::int64_t d) const {
    if (d < 0) return 0;
    auto it = pieces.find(d);
    return it == pieces.end() ? 0 : int(it->second.qbasis.size());
  }

  // coefficient vector of f's class over the quotient basis in degree d
  std::vector<std::uint32_t> reduce(const Poly& f, std::int64_t d) const {
    const Piece& pc = piece(d);
    std::vector<std::uint32_t> full(pc.monos.size(), 0);
    for (const auto& t : f.t) {
      auto it = pc.index.find(t.m.e);
      if (it == pc.index.end())
        throw std::logic_error("oracle: monomial of unexpected degree");
      full[size_t(it->second)] = t.c;
    }
    reduce_against_rref(pc.ideal_rref, full);
    std::vector<std::uint32_t> out(pc.qbasis.size(), 0);
    for (size_t i = 0; i < pc.qbasis.size(); ++i)
      out[i] = full[size_t(pc.qbasis[i])];
    return out;
  }
};

DenseRing build_dense_ring(const QRingPtr& ring) {
  DenseRing dr;
  dr.R = &ring->P();
  dr.p = ring->p();
  const PolyRing& R = *dr.R;
  std::vector<Poly> gens;
  for (const auto& g : ring->ideal().gens)
    gens.push_back(melem_component(R, g, 0));
  // grow the cap until a vanishing window wider than the max weight
  std::int64_t maxw = 1;
  for (int v = 0; v < R.nvars(); ++v) maxw = std::max(maxw, R.wscaled(v));
  std::int64_t cap = 4 * maxw;
  const std::int64_t hard_cap = 4000;
  while (true) {
    dr.pieces.clear();
    for (std::int64_t d = 0; d <= cap; ++d) {
      auto monos = monomials_of_sdeg(R, d);
      if (monos.empty()) continue;
      DenseRing::Piece pc;
      pc.monos = monos;
      for (size_t i = 0; i < monos.size(); ++i)
        pc.index[monos[i].e] = int(i);
      FpMatrix rows(dr.p, 0, int(monos.size()));
      for (const auto& g : gens) {
        auto dd = poly_degree(R, g);
        std::int64_t gd = dd->num * (R.wden() / dd->den);
        if (gd > d) continue;
        for (const auto& m : monomials_of_sdeg(R, d - gd)) {
          Poly prod = poly_mul_term(R, g, m, 1);
          std::vector<std::uint32_t> row(monos.size(), 0);
          for (const auto& t : prod.t) row[size_t(pc.index[t.m.e])] = t.c;
          rows.append_row(row);
        }
      }
      pc.ideal_rref = rref(rows);
      std::vector<char> is_pivot(monos.size(), 0);
      for (int c : pc.ideal_rref.pivot_cols) is_pivot[size_t(c)] = 1;
      for (size_t i = 0; i < monos.size(); ++i)
        if (!is_pivot[i]) {
          pc.qindex_of_mono[std::int64_t(i)] = int(pc.qbasis.size());
          pc.qbasis.push_back(int(i));
        }
      dr.pieces[d] = std::move(pc);
    }
    // vanishing window?
    std::int64_t window_start = -1;
    std::int64_t zeros = 0;
    for (std::int64_t d = 0; d <= cap; ++d) {
      if (dr.qdim(d) == 0)
        ++zeros;
      else
        zeros = 0;
      if (zeros > maxw) {
        window_start = d;
        break;
      }
    }
    if (window_start >= 0) {
      dr.cap = cap;
      return dr;
    }
    cap *= 2;
    if (cap > hard_cap)
      throw std::logic_error("oracle: ring does not look artinian");
  }
}

// A free module piece basis: pairs (component j, quotient basis slot).
struct FreePieces {
  std::vector<std::int64_t> gen_sdeg;  // scaled by ring wden * mono_scale...
  // piece(d): flattened (j, q) with q over ring quotient basis of d - a_j
};

struct PieceBasis {
  std::vector<std::pair<int, int>> slots;  // (component, ring qbasis pos)
  std::map<std::int64_t, int> at;          // j * BIG + q -> slot index
};

PieceBasis free_piece(const DenseRing& dr,
                      const std::vector<std::int64_t>& gdeg, std::int64_t d) {
  PieceBasis out;
  for (size_t j = 0; j < gdeg.size(); ++j) {
    std::int64_t rd = d - gdeg[j];
    if (rd < 0) continue;
    int n = dr.qdim(rd);
    for (int q = 0; q < n; ++q) {
      out.at[std::int64_t(j) * 100000 + q] = int(out.slots.size());
      out.slots.emplace_back(int(j), q);
    }
  }
  return out;
}

// expand poly * e_j into the piece coordinates of degree d
void accumulate(const DenseRing& dr, const std::vector<std::int64_t>& gdeg,
                const PieceBasis& pb, std::int64_t d, int j, const Poly& f,
                std::vector<std::uint32_t>& row) {
  if (f.is_zero()) return;
  std::int64_t rd = d - gdeg[size_t(j)];
  if (rd < 0) throw std::logic_error("oracle: negative piece degree");
  auto coords = dr.reduce(f, rd);
  for (size_t q = 0; q < coords.size(); ++q) {
    if (!coords[q]) continue;
    auto it = pb.at.find(std::int64_t(j) * 100000 + std::int64_t(q));
    row[size_t(it->second)] =
        std::uint32_t((row[size_t(it->second)] + coords[q]) % dr.p);
  }
}

}  // namespace

OracleBetti oracle_betti(const FiniteModule& M, int N) {
  const QRingPtr& ring = M.ring;
  const PolyRing& R = ring->P();
  DenseRing dr = build_dense_ring(ring);
  OracleBetti out;
  out.lcd = M.gens.lcd;
  out.totals.assign(size_t(N) + 1, 0);
  // everything in sdeg units of 1/lcd; ring degrees scale by mono_scale
  const std::int64_t ms = M.gens.mono_scale;
  if (ms != 1)
    throw std::logic_error("oracle: fractional module gradings should be "
                           "rescaled before calling (mono_scale != 1)");
  // current stage: generators gamma_i of a submodule K of F_n (vectors
  // over F_n's gen components as polynomials); F_0 handled below
  struct Stage {
    std::vector<std::int64_t> gdeg;                 // degrees of F_n basis
    std::vector<std::vector<Poly>> kernel_vectors;  // per element: comps
    std::vector<std::int64_t> kdeg;
  };

  // ring elements of a given degree: quotient-basis monomials
  auto ring_monos = [&](std::int64_t rd) {
    std::vector<Monomial> out2;
    if (rd < 0) return out2;
    auto it = dr.pieces.find(rd);
    if (it == dr.pieces.end()) return out2;
    for (int qi : it->second.qbasis)
      out2.push_back(it->second.monos[size_t(qi)]);
    return out2;
  };

  // --- step 0: minimal generators of M = F / span(rels) ---
  std::vector<std::int64_t> fdeg;
  for (auto d0 : M.gens.sdeg) fdeg.push_back(d0);
  auto stage_cap = [&](const std::vector<std::int64_t>& gdeg) {
    std::int64_t top = 0;
    for (auto g : gdeg) top = std::max(top, g);
    return top + dr.cap;
  };
  std::int64_t cap = stage_cap(fdeg);
  // relation span rows per degree (plus mF rows for minimality)
  auto expand_elem = [&](const std::vector<Poly>& comps,
                         const std::vector<std::int64_t>& gdeg,
                         const PieceBasis& pb, std::int64_t d,
                         const Monomial& mult) {
    std::vector<std::uint32_t> row(pb.slots.size(), 0);
    for (size_t j = 0; j < comps.size(); ++j)
      if (!comps[j].is_zero())
        accumulate(dr, gdeg, pb, d, int(j), poly_mul_term(R, comps[j], mult, 1),
                   row);
    return row;
  };

  std::vector<std::vector<Poly>> rel_vectors;
  for (const auto& r : M.rels)
    rel_vectors.push_back(melem_to_columns(R, r, M.rank()));
  std::vector<std::int64_t> rel_deg;
  for (const auto& r : M.rels)
    rel_deg.push_back(mod_sdeg(M.gens, r.lead()));

  Stage cur;  // will hold ker(F_0 -> M)
  std::vector<std::int64_t> f0deg;
  std::vector<std::vector<Poly>> f0cols;  // generators of M inside F
  for (std::int64_t d = 0; d <= cap; ++d) {
    PieceBasis pb = free_piece(dr, fdeg, d);
    if (pb.slots.empty()) continue;
    FpMatrix span(dr.p, 0, int(pb.slots.size()));
    for (size_t ri = 0; ri < rel_vectors.size(); ++ri) {
      std::int64_t rd = d - rel_deg[ri];
      for (const auto& m : ring_monos(rd))
        span.append_row(expand_elem(rel_vectors[ri], fdeg, pb, d, m));
    }
    // m*F rows: x_v * (basis of F in degree d - w_v)
    for (int v = 0; v < R.nvars(); ++v) {
      std::int64_t dv = d - R.wscaled(v);
      if (dv < 0) continue;
      PieceBasis pv = free_piece(dr, fdeg, dv);
      for (const auto& [j, q] : pv.slots) {
        const auto& lower = dr.piece(dv - fdeg[size_t(j)]);
        Monomial mono = lower.monos[size_t(lower.qbasis[size_t(q)])];
        std::vector<Poly> comps(size_t(M.rank()));
        comps[size_t(j)] = poly_mono(R, mono.mul(poly_var(R, v).t[0].m), 1);
        span.append_row(expand_elem(comps, fdeg, pb, d, Monomial{}));
      }
    }
    RrefResult rr = rref(span);
    // greedy: basis unit vectors not in the span
    for (size_t s = 0; s < pb.slots.size(); ++s) {
      std::vector<std::uint32_t> v(pb.slots.size(), 0);
      v[s] = 1;
      reduce_against_rref(rr, v);
      bool zero = std::all_of(v.begin(), v.end(),
                              [](std::uint32_t x) { return x == 0; });
      if (zero) continue;
      span.append_row(v);
      rr = rref(span);
      auto [j, q] = pb.slots[s];
      const auto& rp = dr.piece(d - fdeg[size_t(j)]);
      Monomial mono = rp.monos[size_t(rp.qbasis[size_t(q)])];
      std::vector<Poly> gen(size_t(M.rank()));
      gen[size_t(j)] = poly_mono(R, mono, 1);
      f0cols.push_back(gen);
      f0deg.push_back(d);
      out.entries[{0, d}] += 1;
      out.totals[0] += 1;
    }
  }

  // kernel of F_0 -> M (coordinates of M = F/rel-span per degree)
  auto kernel_step = [&](const std::vector<std::int64_t>& updeg,
                         const std::vector<std::vector<Poly>>& upcols,
                         const std::vector<std::int64_t>& lowdeg,
                         const std::vector<std::vector<Poly>>& modrels,
                         const std::vector<std::int64_t>& modrel_deg) {
    // kernel of (free on upcols) -> F_low / span(modrels)
    Stage next;
    next.gdeg = updeg;
    std::int64_t kcap = 0;
    for (auto g : updeg) kcap = std::max(kcap, g);
    kcap += dr.cap;
    for (std::int64_t d = 0; d <= kcap; ++d) {
      PieceBasis up = free_piece(dr, updeg, d);
      if (up.slots.empty()) continue;
      PieceBasis low = free_piece(dr, lowdeg, d);
      // rref of the relation span in the lower piece
      FpMatrix span(dr.p, 0, std::max(1, int(low.slots.size())));
      for (size_t ri = 0; ri < modrels.size(); ++ri) {
        std::int64_t rd = d - modrel_deg[ri];
        for (const auto& m : ring_monos(rd))
          span.append_row(expand_elem(modrels[ri], lowdeg, low, d, m));
      }
      RrefResult rs = rref(span);
      // quotient coordinates: non-pivot slots
      std::vector<int> freecols;
      {
        std::vector<char> piv(low.slots.size(), 0);
        for (int c : rs.pivot_cols) piv[size_t(c)] = 1;
        for (size_t c2 = 0; c2 < low.slots.size(); ++c2)
          if (!piv[c2]) freecols.push_back(int(c2));
      }
      // matrix of the map on this piece (rows = quotient coords of image)
      FpMatrix mat(dr.p, std::max(1, int(freecols.size())),
                   int(up.slots.size()));
      for (size_t s = 0; s < up.slots.size(); ++s) {
        auto [i, q] = up.slots[s];
        const auto& rp = dr.piece(d - updeg[size_t(i)]);
        Monomial mono = rp.monos[size_t(rp.qbasis[size_t(q)])];
        auto row = expand_elem(upcols[size_t(i)], lowdeg, low, d, mono);
        reduce_against_rref(rs, row);
        for (size_t fc = 0; fc < freecols.size(); ++fc)
          mat.at(int(fc), int(s)) = row[size_t(freecols[fc])];
      }
      for (auto& kv : kernel_basis(mat)) {
        // back to polynomial vectors over the upper basis components
        std::vector<Poly> vec(updeg.size());
        for (size_t s = 0; s < up.slots.size(); ++s) {
          if (!kv[s]) continue;
          auto [i, q] = up.slots[s];
          const auto& rp = dr.piece(d - updeg[size_t(i)]);
          Monomial mono = rp.monos[size_t(rp.qbasis[size_t(q)])];
          vec[size_t(i)] = poly_add(
              R, vec[size_t(i)], poly_mono(R, mono, std::int64_t(kv[s])));
        }
        next.kernel_vectors.push_back(std::move(vec));
        next.kdeg.push_back(d);
      }
    }
    return next;
  };

  cur = kernel_step(f0deg, f0cols, fdeg, rel_vectors, rel_deg);
  std::vector<std::int64_t> lowdeg = f0deg;

  for (int n = 1; n <= N; ++n) {
    // minimal generators of the kernel: greedy over degrees against mK
    std::vector<std::vector<Poly>> chosen;
    std::vector<std::int64_t> chosen_deg;
    std::int64_t mcap = 0;
    for (auto g : cur.kdeg) mcap = std::max(mcap, g);
    for (std::int64_t d = 0; d <= mcap; ++d) {
      PieceBasis pb = free_piece(dr, lowdeg, d);
      if (pb.slots.empty()) continue;
      FpMatrix span(dr.p, 0, int(pb.slots.size()));
      // m*K rows: x_v * kernel vectors of degree d - w_v, and ring
      // multiples of everything lower in K
      for (size_t ki = 0; ki < cur.kernel_vectors.size(); ++ki) {
        std::int64_t rd = d - cur.kdeg[ki];
        if (rd <= 0) continue;  // strictly lower degree -> multiple by m
        for (const auto& m : ring_monos(rd))
          span.append_row(expand_elem(cur.kernel_vectors[ki], lowdeg, pb, d, m));
      }
      RrefResult rr = rref(span);
      for (size_t ki = 0; ki < cur.kernel_vectors.size(); ++ki) {
        if (cur.kdeg[ki] != d) continue;
        auto row = expand_elem(cur.kernel_vectors[ki], lowdeg, pb, d, Monomial{});
        reduce_against_rref(rr, row);
        bool zero = std::all_of(row.begin(), row.end(),
                                [](std::uint32_t x) { return x == 0; });
        if (zero) continue;
        span.append_row(row);
        rr = rref(span);
        chosen.push_back(cur.kernel_vectors[ki]);
        chosen_deg.push_back(d);
        out.entries[{n, d}] += 1;
        out.totals[size_t(n)] += 1;
      }
    }
    if (chosen.empty()) break;
    if (n == N) break;
    cur = kernel_step(chosen_deg, chosen, lowdeg, {}, {});
    lowdeg = chosen_deg;
  }
  return out;
}

bool oracle_ideal_member(const QRingPtr& ring, const Poly& f) {
  if (f.is_zero()) return true;
  DenseRing dr = build_dense_ring(ring);
  auto d = poly_degree(ring->P(), f);
  if (!d) throw std::invalid_argument("oracle_ideal_member: inhomogeneous");
  std::int64_t sd = d->num * (ring->P().wden() / d->den);
  if (sd > dr.cap) return false;  // past the top of an artinian ring
  auto coords = dr.reduce(f, sd);
  return std::all_of(coords.begin(), coords.end(),
                     [](std::uint32_t x) { return x == 0; });
}

std::map<std::int64_t, std::int64_t> oracle_ring_dims(const QRingPtr& ring) {
  DenseRing dr = build_dense_ring(ring);
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [d, pc] : dr.pieces)
    if (!pc.qbasis.empty()) out[d] = std::int64_t(pc.qbasis.size());
  return out;
}

}  // namespace frobkit::oracle
