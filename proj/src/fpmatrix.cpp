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

#include "frobkit/fpmatrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frobkit {

void FpMatrix::append_row(const std::vector<std::uint32_t>& r) {
  if (int(r.size()) != cols_)
    throw std::invalid_argument("FpMatrix::append_row: width mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

namespace {

// Gauss-Jordan with fixed pivot policy (first nonzero in column order,
// scanning rows top to bottom).  The elimination of non-pivot rows for a
// fixed pivot is data-parallel; serial and parallel variants share this
// skeleton so that outputs are bit-identical.
template <bool Parallel>
RrefResult rref_impl(const FpMatrix& in) {
  PrimeField F(in.p());
  RrefResult out;
  out.m = in;
  FpMatrix& A = out.m;
  const int rows = A.rows(), cols = A.cols();
  const std::uint64_t p = in.p();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int r = lead; r < rows; ++r)
      if (A.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int c = col; c < cols; ++c) std::swap(A.at(piv, c), A.at(lead, c));
    std::uint32_t inv = F.inv(A.at(lead, col));
    if (inv != 1) {
      std::uint32_t* pr = A.row(lead);
      for (int c = col; c < cols; ++c)
        pr[c] = std::uint32_t((std::uint64_t(pr[c]) * inv) % p);
    }
    const std::uint32_t* pr = A.row(lead);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && rows > 64)
#endif
    for (int r = 0; r < rows; ++r) {
      if (r == lead) continue;
      std::uint32_t f = A.at(r, col);
      if (f == 0) continue;
      std::uint32_t* rr = A.row(r);
      for (int c = col; c < cols; ++c) {
        std::uint64_t sub = (std::uint64_t(f) * pr[c]) % p;
        std::uint64_t val = rr[c] + p - sub;
        rr[c] = std::uint32_t(val >= p ? val - p : val);
      }
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = int(out.pivot_cols.size());
  return out;
}

}  // namespace

RrefResult rref_serial(const FpMatrix& in) { return rref_impl<false>(in); }
RrefResult rref_parallel(const FpMatrix& in) { return rref_impl<true>(in); }

RrefResult rref(const FpMatrix& in) {
  if (std::int64_t(in.rows()) * in.cols() >= 1 << 14) return rref_parallel(in);
  return rref_serial(in);
}

int rank(const FpMatrix& in) { return rref(in).rank; }

std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& in) {
  PrimeField F(in.p());
  RrefResult R = rref(in);
  const int cols = in.cols();
  std::vector<int> pivot_of_col(cols, -1);
  for (int i = 0; i < R.rank; ++i) pivot_of_col[R.pivot_cols[size_t(i)]] = i;
  std::vector<std::vector<std::uint32_t>> out;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<std::uint32_t> v(size_t(cols), 0);
    v[size_t(c)] = 1;
    for (int i = 0; i < R.rank; ++i) {
      std::uint32_t coef = R.m.at(i, c);
      if (coef) v[size_t(R.pivot_cols[size_t(i)])] = F.neg(coef);
    }
    out.push_back(std::move(v));
  }
  return out;
}

void reduce_against_rref(const RrefResult& R, std::vector<std::uint32_t>& v) {
  PrimeField F(R.m.p());
  const std::uint64_t p = R.m.p();
  for (int i = 0; i < R.rank; ++i) {
    int pc = R.pivot_cols[size_t(i)];
    std::uint32_t f = v[size_t(pc)];
    if (!f) continue;
    const std::uint32_t* row = R.m.row(i);
    for (size_t c = size_t(pc); c < v.size(); ++c) {
      std::uint64_t sub = (std::uint64_t(f) * row[c]) % p;
      std::uint64_t val = v[c] + p - sub;
      v[c] = std::uint32_t(val >= p ? val - p : val);
    }
  }
}

}  // namespace frobkit
