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

#include "vecq/random.hpp"

#include <cmath>

#include "vecq/linalg.hpp"
#include "vecq/veclib.hpp"

namespace vecq::random {

ComplexMatrix ginibre(std::size_t n, std::size_t m, Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, m);
  for (auto& z : g.entries()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = Complex(re, im) / std::sqrt(2.0);
  }
  return g;
}

ComplexMatrix haar_unitary(std::size_t n, Engine& rng) {
  // Gram-Schmidt on Ginibre columns gives the QR factor with positive R
  // diagonal, which is Haar distributed. Two passes keep U^dagger U - 1 near
  // machine precision for n ~ 64.
  ComplexMatrix q = ginibre(n, n, rng);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
    }
  }
  return q;
}

std::vector<Complex> pure_state(std::size_t n, Engine& rng) {
  const ComplexMatrix g = ginibre(n, 1, rng);
  double norm = 0.0;
  for (const auto& z : g.entries()) norm += std::norm(z);
  norm = std::sqrt(norm);
  std::vector<Complex> psi(g.entries().begin(), g.entries().end());
  for (auto& z : psi) z /= norm;
  return psi;
}

ComplexMatrix density_matrix(std::size_t n, Engine& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix rho = g * adjoint(g);
  rho *= 1.0 / trace(rho).real();
  return rho;
}

Superoperator cptp_channel(std::size_t d, Engine& rng) {
  const std::size_t env = d * d;
  const ComplexMatrix u = haar_unitary(d * env, rng);
  return dilation_superop(u, ComplexMatrix::unit(env, env, 0, 0));
}

std::vector<ComplexMatrix> povm(std::size_t d, std::size_t outcomes, Engine& rng) {
  std::vector<ComplexMatrix> elems;
  ComplexMatrix total(d, d);
  for (std::size_t k = 0; k < outcomes; ++k) {
    const ComplexMatrix g = ginibre(d, d, rng);
    elems.push_back(g * adjoint(g));
    total += elems.back();
  }
  const ComplexMatrix w = linalg::inverse_sqrt_psd(total);
  for (auto& e : elems) {
    e = w * e * w;
    // Exact Hermiticity; the products above leave rounding asymmetry.
    e = 0.5 * (e + adjoint(e));
  }
  return elems;
}

}  // namespace vecq::random
