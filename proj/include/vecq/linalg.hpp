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

// Dense factorizations used by the channel and tomography code. Backed by
// Eigen; everything here takes and returns row-major ComplexMatrix values.

#include <vector>

#include "vecq/matrix.hpp"

namespace vecq::linalg {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/** Eigendecomposition of a Hermitian matrix (only the lower triangle is read). */
HermitianEigen eigh(const ComplexMatrix& m);

std::vector<double> singular_values(const ComplexMatrix& m);  // descending
/** sigma_max / sigma_min; infinity for singular or rank-deficient input. */
double condition_number(const ComplexMatrix& m);
/** Numerical rank: singular values above rel_tol * max(1, sigma_max). */
std::size_t rank(const ComplexMatrix& m, double rel_tol = 1e-10);

/** X with A X = B, by column-pivoted Householder QR. A must be square. */
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
/** Moore-Penrose pseudo-inverse, dropping singular values below rcond * sigma_max. */
ComplexMatrix pseudo_inverse(const ComplexMatrix& a, double rcond = 1e-10);
/** Principal square root of the inverse of a positive-definite Hermitian matrix. */
ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& m);

}  // namespace vecq::linalg
