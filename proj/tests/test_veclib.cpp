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

#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "vecq/veclib.hpp"

namespace vecq {
namespace {

using Catch::Matchers::WithinAbs;

ComplexMatrix integer_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Complex> entries;
  std::size_t cols = rows.begin()->size();
  for (const auto& row : rows)
    for (int v : row) entries.emplace_back(v, 0.0);
  return ComplexMatrix(rows.size(), cols, std::move(entries));
}

TEST_CASE("index_fuse and index_split are inverse row-major maps") {
  CHECK(index_fuse(0, 0, 5) == 0);
  // 1-based f(1,2) = 2 with q = 2 is the 0-based pair (0,1) -> 1.
  CHECK(index_fuse(0, 1, 2) == 1);
  CHECK(index_fuse(2, 3, 4) == 11);
  CHECK_THROWS_AS(index_fuse(0, 4, 4), std::invalid_argument);

  // Enumerating a 3x4 matrix hits every fused index exactly once.
  std::vector<int> hits(12, 0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 4; ++b) ++hits[index_fuse(a, b, 4)];
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

  CHECK(index_split(0, 3) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(index_split(11, 4) == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK_THROWS_AS(index_split(3, 0), std::invalid_argument);
  for (std::size_t q = 1; q <= 6; ++q)
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < q; ++b)
        CHECK(index_split(index_fuse(a, b, q), q) == std::pair{a, b});
}

TEST_CASE("vec stacks rows and mat restores the shape") {
  const ComplexMatrix m = integer_matrix({{1, 2}, {3, 4}});
  const auto v = vec(m);
  REQUIRE(v.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(v[i] == Complex(i + 1, 0));

  const auto vi = vec(ComplexMatrix::identity(3));
  for (std::size_t i = 0; i < 9; ++i) CHECK(vi[i] == (i % 4 == 0 ? Complex(1) : Complex(0)));

  CHECK(mat(VecOperator(2, 2, {1.0, 0.0, 0.0, 1.0})) == ComplexMatrix::identity(2));
  CHECK_THROWS_AS(VecOperator(2, 3, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(mat(VecOperator{}), std::invalid_argument);
  CHECK_THROWS_AS(mat(std::vector<Complex>(5), 2, 2), std::invalid_argument);

  random::Engine rng(11);
  for (std::size_t r = 1; r <= 8; ++r)
    for (std::size_t c = 1; c <= 8; ++c) {
      const ComplexMatrix x = test::random_matrix(r, c, rng);
      const auto vx = vec(x);
      // Bitwise identity on storage.
      CHECK(std::equal(vx.entries().begin(), vx.entries().end(), x.entries().begin()));
      CHECK(mat(vx) == x);
    }
}

TEST_CASE("vec of conjugates and adjoints follows the index conventions") {
  random::Engine rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = test::random_matrix(3, 4, rng);
    const auto vc = vec(conjugate(m));
    const auto vm = vec(m);
    for (std::size_t i = 0; i < vm.size(); ++i) CHECK(vc[i] == std::conj(vm[i]));
    const auto vd = vec(adjoint(m));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 3; ++b) CHECK(vd[index_fuse(a, b, 3)] == std::conj(m(b, a)));
  }
}

TEST_CASE("hs_inner is tr(A^dagger B)") {
  CHECK(hs_inner(ComplexMatrix::identity(4), ComplexMatrix::identity(4)) == Complex(4.0));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 3; ++d) {
          const double expected = (a == c && b == d) ? 1.0 : 0.0;
          CHECK(hs_inner(ComplexMatrix::unit(2, 3, a, b), ComplexMatrix::unit(2, 3, c, d)) ==
                Complex(expected));
        }
  random::Engine rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = test::random_matrix(3, 3, rng);
    const auto b = test::random_matrix(3, 3, rng);
    const Complex direct = trace(adjoint(a) * b);
    CHECK(std::abs(hs_inner(a, b) - direct) < 1e-13);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-14);
    const Complex self = hs_inner(a, a);
    CHECK(self.real() > 0.0);
    CHECK(std::abs(self.imag()) < 1e-14);
  }
  const Complex zero = hs_inner(ComplexMatrix::zero(2, 2), ComplexMatrix::zero(2, 2));
  CHECK(std::abs(zero) < 1e-14);
  CHECK_THROWS_AS(hs_inner(ComplexMatrix(2, 2), ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("kron follows the lexicographic index rule") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) == ComplexMatrix::identity(6));
  const ComplexMatrix xz = kron(test::pauli_x(), test::pauli_z());
  // Direct entry formula: X[a1,b1] Z[a2,b2].
  const ComplexMatrix expected = integer_matrix(
      {{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  CHECK(xz == expected);

  random::Engine rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = test::random_matrix(2, 3, rng);
    const auto b = test::random_matrix(3, 2, rng);
    const auto c = test::random_matrix(3, 2, rng);
    const auto d = test::random_matrix(2, 4, rng);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("left and right actions vectorize matrix products") {
  random::Engine rng(15);
  const auto b0 = test::random_matrix(3, 2, rng);
  CHECK(max_abs_diff(left_action(ComplexMatrix::identity(3), 2) * vec(b0).as_column(),
                     vec(b0).as_column()) == 0.0);
  CHECK(max_abs_diff(right_action(ComplexMatrix::identity(2), 3) * vec(b0).as_column(),
                     vec(b0).as_column()) == 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = test::random_matrix(2, 3, rng);
    const auto b = test::random_matrix(3, 2, rng);
    CHECK(max_abs_diff(left_action(a, 2) * vec(b).as_column(), vec(a * b).as_column()) < 1e-12);

    const auto a2 = test::random_matrix(3, 2, rng);
    const auto b2 = test::random_matrix(2, 4, rng);
    CHECK(max_abs_diff(right_action(b2, 3) * vec(a2).as_column(), vec(a2 * b2).as_column()) <
          1e-12);

    // The two actions commute and compose to A (x) B^T.
    const auto sq_a = test::random_matrix(3, 3, rng);
    const auto sq_b = test::random_matrix(3, 3, rng);
    const auto l = left_action(sq_a, 3);
    const auto r = right_action(sq_b, 3);
    CHECK(max_abs_diff(r * l, kron(sq_a, transpose(sq_b))) < 1e-12);
    CHECK(max_abs_diff(l * r, kron(sq_a, transpose(sq_b))) < 1e-12);
  }
  CHECK_THROWS_AS(left_action(ComplexMatrix::identity(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(right_action(ComplexMatrix::identity(2), 0), std::invalid_argument);
}

TEST_CASE("vec_triple reproduces vec(AXB)") {
  random::Engine rng(16);
  const auto x0 = test::random_matrix(3, 4, rng);
  CHECK(vec_triple(ComplexMatrix::identity(3), x0, ComplexMatrix::identity(4)) == vec(x0));
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = test::random_matrix(2, 3, rng);
    const auto x = test::random_matrix(3, 4, rng);
    const auto b = test::random_matrix(4, 2, rng);
    const auto v = vec_triple(a, x, b);
    CHECK(v.src_rows() == 2);
    CHECK(v.src_cols() == 2);
    CHECK(max_abs_diff(mat(v), a * x * b) < 1e-12);
  }
  // Unitary conjugation: vec(U X U^dagger) = (U (x) U*) vec(X).
  const auto u = random::haar_unitary(3, rng);
  const auto x = test::random_matrix(3, 3, rng);
  CHECK(max_abs_diff(kron(u, conjugate(u)) * vec(x).as_column(),
                     vec(u * x * adjoint(u)).as_column()) < 1e-12);
  CHECK_THROWS_AS(vec_triple(ComplexMatrix(2, 3), ComplexMatrix(2, 2), ComplexMatrix(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("swap_spec reproduces the displayed SWAP matrices") {
  const ComplexMatrix s22 = integer_matrix({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  const ComplexMatrix s23 = integer_matrix({{1, 0, 0, 0, 0, 0},
                                            {0, 0, 0, 1, 0, 0},
                                            {0, 1, 0, 0, 0, 0},
                                            {0, 0, 0, 0, 1, 0},
                                            {0, 0, 1, 0, 0, 0},
                                            {0, 0, 0, 0, 0, 1}});
  CHECK(swap_spec(2, 2).perm.matrix() == s22);
  CHECK(swap_spec(2, 3).perm.matrix() == s23);
  for (std::size_t p = 1; p <= 5; ++p)
    CHECK(swap_spec(1, p).perm.matrix() == ComplexMatrix::identity(p));

  for (std::size_t r = 1; r <= 6; ++r)
    for (std::size_t p = 1; p <= 6; ++p) {
      const auto s = swap_spec(r, p).perm.matrix();
      CHECK(transpose(s) * s == ComplexMatrix::identity(r * p));
      CHECK(transpose(s) == swap_spec(p, r).perm.matrix());
    }

  // x (x) y with |x| = r goes to y (x) x.
  random::Engine rng(17);
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t p = 1; p <= 4; ++p) {
      const auto x = test::random_matrix(r, 1, rng);
      const auto y = test::random_matrix(p, 1, rng);
      const auto swapped = apply_perm(swap_spec(r, p), kron(x.entries(), y.entries()));
      CHECK(swapped == kron(y.entries(), x.entries()));
    }

  // N (x) M = S (M (x) N) S^T for square M (r x r) and N (p x p).
  const auto m = test::random_matrix(2, 2, rng);
  const auto n = test::random_matrix(3, 3, rng);
  const auto s = swap_spec(2, 3).perm.matrix();
  CHECK(max_abs_diff(s * kron(m, n) * transpose(s), kron(n, m)) == 0.0);
}

TEST_CASE("reshuffle_spec maps vec(M) (x) vec(N) to vec(M (x) N)") {
  // Exhaustive check on matrix units: a pure permutation, so exact.
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      for (std::size_t r = 1; r <= 3; ++r)
        for (std::size_t s = 1; s <= 3; ++s) {
          const auto spec = reshuffle_spec(p, q, r, s);
          // Equals 1_p (x) SWAP(q -> r) (x) 1_s.
          const auto expected = kron(kron(ComplexMatrix::identity(p), swap_spec(q, r).perm.matrix()),
                                     ComplexMatrix::identity(s));
          CHECK(spec.perm.matrix() == expected);
          for (std::size_t a1 = 0; a1 < p; ++a1)
            for (std::size_t b1 = 0; b1 < q; ++b1)
              for (std::size_t a2 = 0; a2 < r; ++a2)
                for (std::size_t b2 = 0; b2 < s; ++b2) {
                  const auto m = ComplexMatrix::unit(p, q, a1, b1);
                  const auto n = ComplexMatrix::unit(r, s, a2, b2);
                  const auto lhs = vec(kron(m, n));
                  const auto rhs = apply_perm(spec, kron(vec(m).entries(), vec(n).entries()));
                  CHECK(std::equal(rhs.begin(), rhs.end(), lhs.entries().begin()));
                }
        }

  random::Engine rng(18);
  const auto m = test::random_matrix(2, 3, rng);
  const auto n = test::random_matrix(4, 2, rng);
  const auto rhs = apply_perm(reshuffle_spec(2, 3, 4, 2), kron(vec(m).entries(), vec(n).entries()));
  const auto lhs = vec(kron(m, n));
  for (std::size_t i = 0; i < rhs.size(); ++i) CHECK(std::abs(rhs[i] - lhs[i]) < 1e-13);

  const auto r2 = reshuffle_spec(2, 2, 2, 2).perm.matrix();
  CHECK(r2 * r2 == ComplexMatrix::identity(16));
  CHECK(reshuffle_spec(1, 1, 3, 2).perm.matrix() == ComplexMatrix::identity(6));
}

TEST_CASE("apply_perm agrees with the materialized permutation matrix") {
  random::Engine rng(19);
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      for (std::size_t r = 1; r <= 2; ++r)
        for (std::size_t s = 1; s <= 2; ++s) {
          if (p * q * r * s > 36) continue;
          const auto spec = reshuffle_spec(p, q, r, s);
          const auto v = test::random_matrix(p * q * r * s, 1, rng);
          const auto direct = apply_perm(spec, v.entries());
          const auto via_matrix = spec.perm.matrix() * v;
          CHECK(std::equal(direct.begin(), direct.end(), via_matrix.entries().begin()));
          const auto back = apply_perm(spec.perm.inverse(), direct);
          CHECK(std::equal(back.begin(), back.end(), v.entries().begin()));
        }
  const auto id = IndexPermutation::identity(5);
  const std::vector<Complex> v = {1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(apply_perm(id, v) == v);
  CHECK_THROWS_AS(apply_perm(id, std::vector<Complex>(4)), std::invalid_argument);
  CHECK_THROWS_AS(IndexPermutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("partial_trace contracts one tensor factor") {
  random::Engine rng(20);
  const auto rho = random::density_matrix(2, rng);
  auto omega = test::random_matrix(3, 3, rng);
  const auto product = kron(rho, omega);
  CHECK(max_abs_diff(partial_trace(product, 2, 3, Subsystem::First), trace(omega) * rho) < 1e-13);
  CHECK(max_abs_diff(partial_trace(product, 2, 3, Subsystem::Second), trace(rho) * omega) < 1e-13);

  for (std::size_t d = 1; d <= 4; ++d) {
    // tau_+ by its definition: entries 1/d at (a*d + a, b*d + b).
    ComplexMatrix tau(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) tau(a * d + a, b * d + b) = 1.0 / static_cast<double>(d);
    const auto expected = (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d);
    CHECK(max_abs_diff(partial_trace(tau, d, d, Subsystem::Second), expected) < 1e-15);
    CHECK(max_abs_diff(partial_trace(tau, d, d, Subsystem::First), expected) < 1e-15);
  }

  const auto tau = test::random_matrix(6, 6, rng);
  CHECK(std::abs(trace(partial_trace(tau, 2, 3, Subsystem::First)) - trace(tau)) < 1e-13);
  CHECK(std::abs(trace(partial_trace(tau, 2, 3, Subsystem::Second)) - trace(tau)) < 1e-13);
  CHECK_THROWS_AS(partial_trace(tau, 2, 2, Subsystem::First), std::invalid_argument);
}

}  // namespace
}  // namespace vecq
