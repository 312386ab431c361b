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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vecq {

using Complex = std::complex<double>;

/**
 * Dense rectangular complex matrix stored row-major.
 *
 * Entry (a, b) lives at position a * cols + b, so the flat storage is exactly
 * the row-stacked vectorization of the matrix.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);
  /** Matrix unit E_a^b = |a><b| of the given shape. */
  static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t a, std::size_t b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t a, std::size_t b) { return entries_[a * cols_ + b]; }
  const Complex& operator()(std::size_t a, std::size_t b) const {
    return entries_[a * cols_ + b];
  }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }
  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);

/** Sum of diagonal entries, accumulated in index order. */
Complex trace(const ComplexMatrix& m);

/** Largest |A_ij - B_ij|; shapes must agree. */
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);

/** max |M - M^dagger|; zero for Hermitian matrices. */
double hermiticity_error(const ComplexMatrix& m);
/** max |U^dagger U - 1|. */
double unitarity_error(const ComplexMatrix& u);

/** Outer product |u><v| of two equal-role column vectors given as spans. */
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const std::string& what);
void require_square(const ComplexMatrix& m, const std::string& what);

}  // namespace vecq
