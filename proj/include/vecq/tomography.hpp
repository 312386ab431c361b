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

// Linear-inversion process tomography: dual bases, standard (SPT),
// ancilla-assisted (AAPT) and entanglement-assisted (EAPT) reconstruction.
//
// Joint states live on system (x) ancilla with dims d1, d2. The reshuffled
// matrix of a joint state tau is Phi_tau = mat(R^{-1} vec(tau)) of shape
// d1^2 x d2^2, with R = reshuffle_spec(d1, d1, d2, d2). For a product state
// rho (x) omega it is vec(rho) vec(omega)^T.
//
// tau_+ is kept at unit trace, so Phi_{tau_+} = 1/d and the EAPT formula
// carries an explicit factor d.

#include <cstdint>
#include <optional>
#include <vector>

#include "vecq/channels.hpp"
#include "vecq/errors.hpp"
#include "vecq/matrix.hpp"

namespace vecq {

/// Inversions with a condition number above this are refused.
inline constexpr double kMaxCondition = 1e8;

struct InversionOptions {
  double max_condition = kMaxCondition;
  /// Use the SVD pseudo-inverse instead of refusing ill-conditioned inputs.
  bool pseudo_inverse = false;
  /// Relative singular-value cutoff of the pseudo-inverse.
  double pinv_rcond = 1e-10;
};

struct DensityReport {
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;
  bool valid = false;
};

/** Hermitian, PSD and unit trace, each to `tol`. */
DensityReport check_density_matrix(const ComplexMatrix& rho, double tol = kDefaultTol);

/** d^2 input states whose vectorizations span operator space. */
class TomographySet {
 public:
  /** Requires d^2 valid density matrices. */
  static TomographySet from_states(std::size_t d, std::vector<ComplexMatrix> states,
                                   double tol = kDefaultTol);
  /** d^2 arbitrary d x d operators; no physicality check. */
  static TomographySet from_operators(std::size_t d, std::vector<ComplexMatrix> operators);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& states() const { return states_; }
  /** Condition number of the state matrix [rho_in]. */
  double condition_number() const { return condition_; }

 private:
  TomographySet(std::size_t d, std::vector<ComplexMatrix> states);

  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> states_;
  double condition_ = 0.0;
};

struct DualBasis {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> duals;
};

/** POVM elements M_mu >= 0 with sum_mu M_mu = 1. */
class MeasurementSet {
 public:
  static MeasurementSet from_povm(std::size_t d, std::vector<ComplexMatrix> elements,
                                  double tol = kDefaultTol);
  /** Arbitrary operators (e.g. an orthonormal operator basis); no POVM check. */
  static MeasurementSet from_operators(std::size_t d, std::vector<ComplexMatrix> operators);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return outcomes_.size(); }
  const std::vector<ComplexMatrix>& outcomes() const { return outcomes_; }

 private:
  MeasurementSet(std::size_t d, std::vector<ComplexMatrix> outcomes);

  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> outcomes_;
};

/**
 * Outcome table m[mu][nu] = tr(M_mu^dagger rho'_nu), one column per input.
 * When `shots` is set the entries are sampled relative frequencies, not
 * probabilities.
 */
class ProbabilityMatrix {
 public:
  ProbabilityMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                    std::optional<std::uint64_t> shots = std::nullopt);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t mu, std::size_t nu) const { return entries_[mu * cols_ + nu]; }
  const std::vector<double>& entries() const { return entries_; }
  std::optional<std::uint64_t> shots() const { return shots_; }
  bool is_sampled() const { return shots_.has_value(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
  std::optional<std::uint64_t> shots_;
};

/** Density matrix on a d1 * d2 dimensional system (x) ancilla space. */
class JointState {
 public:
  JointState(std::size_t d1, std::size_t d2, ComplexMatrix matrix, double tol = kDefaultTol);

  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  ComplexMatrix matrix_;
};

/** Column mu is vec(ops[mu]). */
ComplexMatrix operator_matrix(const std::vector<ComplexMatrix>& ops);
ComplexMatrix state_matrix(const TomographySet& set);

/** [D] = [rho_in]^{-1 dagger}, so tr(D_nu^dagger rho_mu) = delta. */
DualBasis dual_basis(const TomographySet& set, const InversionOptions& opts = {});
/** Frame-operator route D_nu = P^{-1} vec(rho_nu), P = [rho_in][rho_in]^dagger. */
DualBasis dual_basis_frame(const TomographySet& set, const InversionOptions& opts = {});

/** Phi = [rho_out][rho_in]^{-1}. */
Superoperator spt_from_outputs(const TomographySet& set, const std::vector<ComplexMatrix>& outputs,
                               const InversionOptions& opts = {});
/** Phi = sum_mu vec(rho'_mu) vec(D_mu)^dagger. */
Superoperator spt_from_duals(const std::vector<ComplexMatrix>& outputs, const DualBasis& duals);

/**
 * Dual {E^mu} of a measurement set. For N = d^2 elements this is the exact
 * dual tr(E_nu^dagger M_mu) = delta; for N > d^2 it is the least-squares
 * (canonical) dual [E] = ([M] [M]^dagger)^{-1} [M], which still reconstructs
 * rho = sum_mu E^mu tr(M_mu^dagger rho).
 */
DualBasis measurement_dual(const MeasurementSet& meas, const InversionOptions& opts = {});

/** Phi = [E][m][D]^dagger. */
Superoperator spt_from_probs(const MeasurementSet& meas, const ProbabilityMatrix& m,
                             const DualBasis& duals, const InversionOptions& opts = {});

/**
 * Outcome table for sending each input through the channel and measuring.
 * With `shots`, each column is an independent multinomial sample drawn from a
 * generator seeded with `seed`.
 */
ProbabilityMatrix simulate_probs(const ChannelSpec& c, const TomographySet& set,
                                 const MeasurementSet& meas,
                                 std::optional<std::uint64_t> shots = std::nullopt,
                                 std::uint64_t seed = 0);

/** Superoperator of T (x) I on d1*d2: R (Phi (x) 1) R^{-1}. */
Superoperator joint_superop(const Superoperator& phi, std::size_t d2);

/** tau_+ = sum_{ab} E_ab (x) E_ab / d. */
JointState maximally_entangled_state(std::size_t d);

/** Phi_tau = mat(R^{-1} vec(tau)), a d1^2 x d2^2 matrix. */
ComplexMatrix reshuffled_joint(const ComplexMatrix& tau, std::size_t d1, std::size_t d2);

/**
 * Phi_T from the output of T (x) I on a single joint input. Requires d2 >= d1
 * and Phi_tau of full row rank; raises IllConditionedAncillaState otherwise.
 */
Superoperator aapt_reconstruct(const JointState& tau_in, const JointState& tau_out,
                               const InversionOptions& opts = {});
/** Phi_T = d mat(R^{-1} vec(tau_out)) when the input was tau_+. */
Superoperator eapt_reconstruct(const JointState& tau_out);

/** Orthonormal traceless Hermitian basis (normalized generalized Gell-Mann). */
std::vector<ComplexMatrix> traceless_hermitian_basis(std::size_t d);
/** Dimension of the affine span of outcome-probability vectors over all states. */
std::size_t povm_domain_dimension(const MeasurementSet& meas, double rel_tol = 1e-10);

namespace presets {

/** |0><0|, |1><1|, |+><+|, |+i><+i|. */
TomographySet qubit_inputs();
/** |a><a| for all a, then (|a>+|b>)/sqrt2 and (|a>+i|b>)/sqrt2 for a < b. */
TomographySet standard_inputs(std::size_t d);
/** Symmetric informationally complete qubit POVM (Bloch tetrahedron). */
MeasurementSet tetrahedral_povm();
/** Six projectors onto the +-X, +-Y, +-Z eigenstates, each weighted 1/3. */
MeasurementSet pauli_povm();
/** d^2-outcome IC POVM: tetrahedral for d = 2, else S^{-1/2} rho_mu S^{-1/2} over standard_inputs. */
MeasurementSet ic_povm(std::size_t d);

}  // namespace presets

}  // namespace vecq
