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

#include "vecq/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vecq::linalg {

namespace {

using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMat> view(const ComplexMatrix& m) {
  return Eigen::Map<const RowMat>(m.data(), static_cast<Eigen::Index>(m.rows()),
                                  static_cast<Eigen::Index>(m.cols()));
}

template <typename Derived>
ComplexMatrix to_matrix(const Eigen::MatrixBase<Derived>& e) {
  ComplexMatrix out(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return out;
}

}  // namespace

HermitianEigen eigh(const ComplexMatrix& m) {
  require_square(m, "eigh");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(view(m)));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: decomposition failed");
  HermitianEigen out;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = to_matrix(solver.eigenvectors());
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(view(m)));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double condition_number(const ComplexMatrix& m) {
  const auto s = singular_values(m);
  if (s.empty()) return std::numeric_limits<double>::infinity();
  const double smin = s.back();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s.front() / smin;
}

std::size_t rank(const ComplexMatrix& m, double rel_tol) {
  const auto s = singular_values(m);
  if (s.empty()) return 0;
  const double cutoff = rel_tol * std::max(1.0, s.front());
  std::size_t r = 0;
  for (double v : s)
    if (v > cutoff) ++r;
  return r;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "solve");
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: right-hand side has wrong height");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(Eigen::MatrixXcd(view(a)));
  const Eigen::MatrixXcd x = qr.solve(Eigen::MatrixXcd(view(b)));
  return to_matrix(x);
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& a, double rcond) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(view(a)),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cutoff = s.size() > 0 ? rcond * s(0) : 0.0;
  Eigen::VectorXcd inv(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) inv(i) = s(i) > cutoff ? 1.0 / s(i) : 0.0;
  const Eigen::MatrixXcd p = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
  return to_matrix(p);
}

ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& m) {
  const auto e = eigh(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (e.values[k] <= 0.0) throw std::invalid_argument("inverse_sqrt_psd: matrix is not positive definite");
    const double w = 1.0 / std::sqrt(e.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += w * e.vectors(i, k) * std::conj(e.vectors(j, k));
  }
  return out;
}

}  // namespace vecq::linalg
