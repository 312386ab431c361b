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

// Vectorization kernels.
//
// Conventions (0-based throughout):
//   * a p x q matrix M is vectorized by stacking its rows, so entry (a, b)
//     lands at fused index a*q + b (the 1-based form is q(a-1) + b);
//   * Kronecker products fuse index pairs with the same lexicographic rule,
//     (A (x) B)[(a1,a2),(b1,b2)] = A[a1,b1] * B[a2,b2];
//   * index permutations are stored as destination maps: applying `perm` to a
//     vector v produces w with w[perm[i]] = v[i]. The matching permutation
//     matrix has a single 1 in column i at row perm[i].

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vecq/matrix.hpp"

namespace vecq {

/** Row-major fused index a*q + b. Throws if b >= q. */
std::size_t index_fuse(std::size_t a, std::size_t b, std::size_t q);
/** Inverse of index_fuse: (alpha / q, alpha % q). Throws if q == 0. */
std::pair<std::size_t, std::size_t> index_split(std::size_t alpha, std::size_t q);

/** A vectorized matrix together with the shape it came from. */
class VecOperator {
 public:
  VecOperator() = default;
  VecOperator(std::size_t src_rows, std::size_t src_cols, std::vector<Complex> entries);

  std::size_t src_rows() const { return src_rows_; }
  std::size_t src_cols() const { return src_cols_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Complex> entries() const { return entries_; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  /** The vector as a (rows*cols) x 1 matrix. */
  ComplexMatrix as_column() const;

  bool operator==(const VecOperator&) const = default;

 private:
  std::size_t src_rows_ = 0;
  std::size_t src_cols_ = 0;
  std::vector<Complex> entries_;
};

VecOperator vec(const ComplexMatrix& m);
ComplexMatrix mat(const VecOperator& v);
/** Re-matricize raw entries with an explicit shape. */
ComplexMatrix mat(std::span<const Complex> entries, std::size_t rows, std::size_t cols);

/** tr(A^dagger B) = vec(A)^dagger vec(B), summed in storage order. */
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/** Kronecker product of two vectors (a column-vector tensor product). */
std::vector<Complex> kron(std::span<const Complex> u, std::span<const Complex> v);

/** A (x) 1_r: (A (x) 1_r) vec(B) = vec(AB) for any q x r matrix B. */
ComplexMatrix left_action(const ComplexMatrix& a, std::size_t r);
/** 1_p (x) B^T: (1_p (x) B^T) vec(A) = vec(AB) for any p x q matrix A. */
ComplexMatrix right_action(const ComplexMatrix& b, std::size_t p);

/** (A (x) B^T) vec(X), which equals vec(A X B). */
VecOperator vec_triple(const ComplexMatrix& a, const ComplexMatrix& x, const ComplexMatrix& b);

/** Bijection on {0, ..., n-1} in destination-map form. */
class IndexPermutation {
 public:
  IndexPermutation() = default;
  explicit IndexPermutation(std::vector<std::size_t> destinations);

  static IndexPermutation identity(std::size_t n);

  std::size_t size() const { return dest_.size(); }
  std::size_t operator[](std::size_t i) const { return dest_[i]; }
  std::span<const std::size_t> destinations() const { return dest_; }

  IndexPermutation inverse() const;
  /** Permutation matrix P with P * v == apply(v). */
  ComplexMatrix matrix() const;

  bool operator==(const IndexPermutation&) const = default;

 private:
  std::vector<std::size_t> dest_;
};

/**
 * SWAP of two tensor factors. swap_spec(r, p) takes x (x) y, with x of length
 * r and y of length p, to y (x) x. Its matrix has S(r,p)^T = S(p,r); S(2,2)
 * and S(2,3) reproduce the standard displayed forms.
 */
struct SwapSpec {
  std::size_t r = 1;
  std::size_t p = 1;
  IndexPermutation perm;
};

/**
 * Reshuffle taking vec(M) (x) vec(N) to vec(M (x) N) for M of shape p x q and
 * N of shape r x s. Swaps the middle (column of M, row of N) factors, i.e.
 * 1_p (x) SWAP (x) 1_s. An involution when p = q = r = s.
 */
struct ReshuffleSpec {
  std::size_t p = 1;
  std::size_t q = 1;
  std::size_t r = 1;
  std::size_t s = 1;
  IndexPermutation perm;
};

SwapSpec swap_spec(std::size_t r, std::size_t p);
ReshuffleSpec reshuffle_spec(std::size_t p, std::size_t q, std::size_t r, std::size_t s);

std::vector<Complex> apply_perm(const IndexPermutation& perm, std::span<const Complex> v);
std::vector<Complex> apply_perm(const SwapSpec& spec, std::span<const Complex> v);
std::vector<Complex> apply_perm(const ReshuffleSpec& spec, std::span<const Complex> v);
/** P A P^{-1} for a permutation P, without materializing P. */
ComplexMatrix conjugate_by(const IndexPermutation& perm, const ComplexMatrix& a);

enum class Subsystem { First, Second };

/**
 * Partial trace of an operator on a d1*d2 dimensional product space,
 * returning the reduced operator on the kept factor.
 */
ComplexMatrix partial_trace(const ComplexMatrix& tau, std::size_t d1, std::size_t d2,
                            Subsystem keep);

}  // namespace vecq
