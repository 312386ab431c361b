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

// Representations of completely positive maps on a d-dimensional system.
//
// Index conventions, with f(a, b) = a*d + b:
//   Choi (dynamical) matrix  D[f(a,c), f(b,d)] so that T(rho)[a,b] =
//                            sum_{c,d} D[f(a,c), f(b,d)] rho[c,d];
//   superoperator            Phi[f(a,b), f(c,d)] = D[f(a,c), f(b,d)],
//                            Phi vec(rho) = vec(T(rho)).
// For the identity channel on a qubit, D = vec(1) vec(1)^dagger has ones at
// (0,0), (0,3), (3,0), (3,3) and Phi is the 4x4 identity.

#include <optional>
#include <variant>
#include <vector>

#include "vecq/errors.hpp"
#include "vecq/matrix.hpp"

namespace vecq {

/// Default CP tolerance: lambda_min >= -kCpRelTol * tr(D).
inline constexpr double kCpRelTol = 1e-10;
/// Default Kraus extraction cutoff: keep lambda > kKrausRelCutoff * tr(D).
inline constexpr double kKrausRelCutoff = 1e-12;
/// Largest tolerated |D - D^dagger| before eigendecomposition.
inline constexpr double kHermiticityGate = 1e-8;
/// Default tolerance for TP/unital checks and validators.
inline constexpr double kDefaultTol = 1e-10;

class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> operators_;
};

class ChoiMatrix {
 public:
  ChoiMatrix(std::size_t dim, ComplexMatrix matrix);
  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t dim_ = 0;
  ComplexMatrix matrix_;
};

class Superoperator {
 public:
  Superoperator(std::size_t dim, ComplexMatrix matrix);
  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t dim_ = 0;
  ComplexMatrix matrix_;
};

enum class Representation { Kraus, Choi, Superop };

/** A channel held in exactly one representation. */
class ChannelSpec {
 public:
  using Variant = std::variant<KrausSet, ChoiMatrix, Superoperator>;

  ChannelSpec(KrausSet k) : rep_(std::move(k)) {}
  ChannelSpec(ChoiMatrix c) : rep_(std::move(c)) {}
  ChannelSpec(Superoperator s) : rep_(std::move(s)) {}

  std::size_t dim() const;
  Representation representation() const;
  const Variant& variant() const { return rep_; }

  const KrausSet* kraus() const { return std::get_if<KrausSet>(&rep_); }
  const ChoiMatrix* choi() const { return std::get_if<ChoiMatrix>(&rep_); }
  const Superoperator* superop() const { return std::get_if<Superoperator>(&rep_); }

 private:
  Variant rep_;
};

ComplexMatrix apply_kraus(const KrausSet& k, const ComplexMatrix& rho);
ComplexMatrix apply_superop(const Superoperator& phi, const ComplexMatrix& rho);
/** tr_2[D (1 (x) rho^T)]. */
ComplexMatrix apply_choi(const ChoiMatrix& d, const ComplexMatrix& rho);
ComplexMatrix apply_channel(const ChannelSpec& c, const ComplexMatrix& rho);

/** sum_n K_n (x) conj(K_n). */
Superoperator kraus_to_superop(const KrausSet& k);
/** sum_n vec(K_n) vec(K_n)^dagger. */
ChoiMatrix kraus_to_choi(const KrausSet& k);
/** mat(R vec(D)) with R = reshuffle_spec(d, d, d, d). */
Superoperator choi_to_superop(const ChoiMatrix& d);
/** mat(R^{-1} vec(Phi)); R is an involution here. */
ChoiMatrix superop_to_choi(const Superoperator& phi);

/**
 * Kraus operators sqrt(lambda_n) mat(v_n) from the eigendecomposition of the
 * Choi matrix, largest eigenvalue first. Eigenvalues at or below `cutoff`
 * (default kKrausRelCutoff * tr D) are dropped; any eigenvalue below
 * -cutoff * d raises NotCompletelyPositive. Each eigenvector is rotated so its
 * largest-magnitude component (lowest index on ties) is real and positive.
 */
KrausSet choi_to_kraus(const ChoiMatrix& d, std::optional<double> cutoff = std::nullopt);

KrausSet to_kraus(const ChannelSpec& c, std::optional<double> cutoff = std::nullopt);
ChoiMatrix to_choi(const ChannelSpec& c);
Superoperator to_superop(const ChannelSpec& c);

/** Ascending eigenvalues of the symmetrized Choi matrix. */
std::vector<double> choi_eigenvalues(const ChoiMatrix& d);

struct CpReport {
  bool cp = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/** CP iff lambda_min(D) >= -tol; default tol = kCpRelTol * |tr D|. */
CpReport is_cp(const ChoiMatrix& d, std::optional<double> tol = std::nullopt);

/** max |tr_out D - 1| (equivalently |sum K^dagger K - 1| for Kraus input). */
double tp_error(const ChannelSpec& c);
/** max |T(1) - 1|, read off the Choi matrix as tr_in D. */
double unital_error(const ChannelSpec& c);
bool is_tp(const ChannelSpec& c, double tol = kDefaultTol);
bool is_unital(const ChannelSpec& c, double tol = kDefaultTol);

/** Everything `verify` reports about a channel, measured values included. */
struct VerificationReport {
  CpReport cp;
  double tp_error = 0.0;
  double unital_error = 0.0;
  bool tp = false;
  bool unital = false;
  Complex choi_trace;
  double hermiticity_error = 0.0;
  std::size_t choi_rank = 0;
  /** lambda_max / lambda_min over the Choi spectrum (infinite when singular). */
  double choi_condition = 0.0;
};

/**
 * CP/TP/unital diagnostics. Unlike is_cp, a Choi matrix failing the
 * Hermiticity gate yields cp = false instead of an exception.
 */
VerificationReport verify_channel(const ChannelSpec& c, std::optional<double> cp_tol = std::nullopt,
                                  double tol = kDefaultTol);

/** D / d, the image of the maximally entangled state under T (x) I. */
ComplexMatrix jamiolkowski_state(const ChannelSpec& c);

/** tr_2(U (rho (x) omega) U^dagger). */
ComplexMatrix stinespring_apply(const ComplexMatrix& u12, const ComplexMatrix& omega,
                                const ComplexMatrix& rho);
/** Superoperator of rho -> stinespring_apply(u12, omega, rho), sampled on matrix units. */
Superoperator dilation_superop(const ComplexMatrix& u12, const ComplexMatrix& omega);

ChannelSpec identity_channel(std::size_t d);
ChannelSpec unitary_channel(const ComplexMatrix& u);
/** rho -> (1 - p) rho + p tr(rho) 1/d, via the d^2 Weyl operators. */
ChannelSpec depolarizing(std::size_t d, double p);
ChannelSpec amplitude_damping(double gamma);
ChannelSpec phase_damping(double lambda);
/** rho -> rho^T, in Choi form (the SWAP matrix); it is not CP. */
ChannelSpec transpose_map(std::size_t d);

/** Max-abs entrywise difference of the two superoperator matrices. */
double channel_distance(const ChannelSpec& a, const ChannelSpec& b);

}  // namespace vecq
