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

#ifndef FROBKIT_FPMATRIX_HPP
#define FROBKIT_FPMATRIX_HPP

#include <cstdint>
#include <vector>

#include "frobkit/fp.hpp"

namespace frobkit {

/// Dense row-major matrix over F_p.  These kernels carry the degreewise
/// linear algebra: rank/dimension counts in the main library and the
/// whole resolution oracle on the test side.
///
/// Row reduction comes in two flavors with identical output: a serial
/// reference and an OpenMP-parallel version (rows are eliminated
/// independently once the pivot row is fixed, so the parallel schedule
/// cannot change the result).  `rref` dispatches on problem size.
class FpMatrix {
 public:
  FpMatrix() : p_(2), rows_(0), cols_(0) {}
  FpMatrix(std::uint32_t p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), 0) {}

  std::uint32_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  std::uint32_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  std::uint32_t* row(int r) { return a_.data() + size_t(r) * cols_; }
  const std::uint32_t* row(int r) const { return a_.data() + size_t(r) * cols_; }

  void append_row(const std::vector<std::uint32_t>& r);

  bool operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::uint32_t p_;
  int rows_, cols_;
  std::vector<std::uint32_t> a_;
};

struct RrefResult {
  FpMatrix m;
  std::vector<int> pivot_cols;  // ascending
  int rank = 0;
};

RrefResult rref_serial(const FpMatrix& in);
RrefResult rref_parallel(const FpMatrix& in);
RrefResult rref(const FpMatrix& in);

int rank(const FpMatrix& in);

/// Basis of the right kernel {x : A x = 0}, one row per basis vector,
/// in the canonical rref-derived form (free variable set to 1).
std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& in);

/// Reduces `v` against the rows of an rref; afterwards v has zeros in
/// all pivot columns.
void reduce_against_rref(const RrefResult& R, std::vector<std::uint32_t>& v);

}  // namespace frobkit

#endif
