// Copyright 2026 The vecq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vecq/veclib.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vecq {

std::size_t index_fuse(std::size_t a, std::size_t b, std::size_t q) {
  if (b >= q) {
    throw std::invalid_argument("index_fuse: column index " + std::to_string(b) +
                                " out of range for " + std::to_string(q) + " columns");
  }
  return a * q + b;
}

std::pair<std::size_t, std::size_t> index_split(std::size_t alpha, std::size_t q) {
  if (q == 0) throw std::invalid_argument("index_split: column count must be positive");
  return {alpha / q, alpha % q};
}

VecOperator::VecOperator(std::size_t src_rows, std::size_t src_cols, std::vector<Complex> entries)
    : src_rows_(src_rows), src_cols_(src_cols), entries_(std::move(entries)) {
  if (entries_.size() != src_rows_ * src_cols_) {
    throw std::invalid_argument("VecOperator: length " + std::to_string(entries_.size()) +
                                " inconsistent with shape " + std::to_string(src_rows_) + "x" +
                                std::to_string(src_cols_));
  }
}

ComplexMatrix VecOperator::as_column() const {
  return ComplexMatrix(entries_.size(), 1, entries_);
}

VecOperator vec(const ComplexMatrix& m) {
  return VecOperator(m.rows(), m.cols(), {m.entries().begin(), m.entries().end()});
}

ComplexMatrix mat(const VecOperator& v) {
  if (v.src_rows() == 0 || v.src_cols() == 0) {
    throw std::invalid_argument("mat: vector carries no source shape");
  }
  return mat(v.entries(), v.src_rows(), v.src_cols());
}

ComplexMatrix mat(std::span<const Complex> entries, std::size_t rows, std::size_t cols) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("mat: length " + std::to_string(entries.size()) +
                                " does not match shape " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  return ComplexMatrix(rows, cols, {entries.begin(), entries.end()});
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  Complex sum{};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a.entries()[i]) * b.entries()[i];
  return sum;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t a1 = 0; a1 < a.rows(); ++a1)
    for (std::size_t b1 = 0; b1 < a.cols(); ++b1) {
      const Complex x = a(a1, b1);
      if (x == Complex{}) continue;
      for (std::size_t a2 = 0; a2 < b.rows(); ++a2)
        for (std::size_t b2 = 0; b2 < b.cols(); ++b2)
          out(a1 * b.rows() + a2, b1 * b.cols() + b2) = x * b(a2, b2);
    }
  return out;
}

std::vector<Complex> kron(std::span<const Complex> u, std::span<const Complex> v) {
  std::vector<Complex> out;
  out.reserve(u.size() * v.size());
  for (const auto& x : u)
    for (const auto& y : v) out.push_back(x * y);
  return out;
}

ComplexMatrix left_action(const ComplexMatrix& a, std::size_t r) {
  if (r == 0) throw std::invalid_argument("left_action: r must be positive");
  return kron(a, ComplexMatrix::identity(r));
}

ComplexMatrix right_action(const ComplexMatrix& b, std::size_t p) {
  if (p == 0) throw std::invalid_argument("right_action: p must be positive");
  return kron(ComplexMatrix::identity(p), transpose(b));
}

VecOperator vec_triple(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b) {
  if (a.cols() != x.rows() || x.cols() != b.rows()) {
    throw std::invalid_argument("vec_triple: non-conformable shapes " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + ", " +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                                ", " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
  const ComplexMatrix y = kron(a, transpose(b)) * vec(x).as_column();
  return VecOperator(a.rows(), b.cols(), {y.entries().begin(), y.entries().end()});
}

IndexPermutation::IndexPermutation(std::vector<std::size_t> destinations)
    : dest_(std::move(destinations)) {
  std::vector<bool> hit(dest_.size(), false);
  for (std::size_t d : dest_) {
    if (d >= dest_.size() || hit[d]) {
      throw std::invalid_argument("IndexPermutation: not a bijection");
    }
    hit[d] = true;
  }
}

IndexPermutation IndexPermutation::identity(std::size_t n) {
  std::vector<std::size_t> dest(n);
  for (std::size_t i = 0; i < n; ++i) dest[i] = i;
  return IndexPermutation(std::move(dest));
}

IndexPermutation IndexPermutation::inverse() const {
  std::vector<std::size_t> inv(dest_.size());
  for (std::size_t i = 0; i < dest_.size(); ++i) inv[dest_[i]] = i;
  return IndexPermutation(std::move(inv));
}

ComplexMatrix IndexPermutation::matrix() const {
  ComplexMatrix m(dest_.size(), dest_.size());
  for (std::size_t i = 0; i < dest_.size(); ++i) m(dest_[i], i) = 1.0;
  return m;
}

SwapSpec swap_spec(std::size_t r, std::size_t p) {
  if (r == 0 || p == 0) throw std::invalid_argument("swap_spec: dimensions must be positive");
  std::vector<std::size_t> dest(r * p);
  // x (x) y has index x*p + y; y (x) x has index y*r + x.
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < p; ++y) dest[x * p + y] = y * r + x;
  return SwapSpec{r, p, IndexPermutation(std::move(dest))};
}

ReshuffleSpec reshuffle_spec(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  if (p == 0 || q == 0 || r == 0 || s == 0) {
    throw std::invalid_argument("reshuffle_spec: dimensions must be positive");
  }
  std::vector<std::size_t> dest(p * q * r * s);
  for (std::size_t a1 = 0; a1 < p; ++a1)
    for (std::size_t b1 = 0; b1 < q; ++b1)
      for (std::size_t a2 = 0; a2 < r; ++a2)
        for (std::size_t b2 = 0; b2 < s; ++b2) {
          const std::size_t from = ((a1 * q + b1) * r + a2) * s + b2;
          const std::size_t to = ((a1 * r + a2) * q + b1) * s + b2;
          dest[from] = to;
        }
  return ReshuffleSpec{p, q, r, s, IndexPermutation(std::move(dest))};
}

std::vector<Complex> apply_perm(const IndexPermutation& perm, std::span<const Complex> v) {
  if (v.size() != perm.size()) {
    throw std::invalid_argument("apply_perm: vector length " + std::to_string(v.size()) +
                                " does not match permutation size " +
                                std::to_string(perm.size()));
  }
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

std::vector<Complex> apply_perm(const SwapSpec& spec, std::span<const Complex> v) {
  return apply_perm(spec.perm, v);
}

std::vector<Complex> apply_perm(const ReshuffleSpec& spec, std::span<const Complex> v) {
  return apply_perm(spec.perm, v);
}

ComplexMatrix conjugate_by(const IndexPermutation& perm, const ComplexMatrix& a) {
  require_square(a, "conjugate_by");
  if (a.rows() != perm.size()) {
    throw std::invalid_argument("conjugate_by: permutation size does not match matrix");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(perm[i], perm[j]) = a(i, j);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& tau, std::size_t d1, std::size_t d2,
                            Subsystem keep) {
  if (d1 == 0 || d2 == 0 || tau.rows() != d1 * d2 || tau.cols() != d1 * d2) {
    throw std::invalid_argument("partial_trace: operator is " + std::to_string(tau.rows()) + "x" +
                                std::to_string(tau.cols()) + ", expected " +
                                std::to_string(d1 * d2) + "x" + std::to_string(d1 * d2));
  }
  if (keep == Subsystem::First) {
    ComplexMatrix out(d1, d1);
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d1; ++b) {
        Complex sum{};
        for (std::size_t k = 0; k < d2; ++k) sum += tau(a * d2 + k, b * d2 + k);
        out(a, b) = sum;
      }
    return out;
  }
  ComplexMatrix out(d2, d2);
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d2; ++b) {
      Complex sum{};
      for (std::size_t k = 0; k < d1; ++k) sum += tau(k * d2 + a, k * d2 + b);
      out(a, b) = sum;
    }
  return out;
}

}  // namespace vecq
