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

#include "vecq/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "vecq/linalg.hpp"
#include "vecq/veclib.hpp"

namespace vecq {

namespace {

void require_operators(std::size_t d, const std::vector<ComplexMatrix>& ops, const char* what) {
  if (d == 0) throw std::invalid_argument(std::string(what) + ": dimension must be positive");
  for (const auto& op : ops) {
    if (op.rows() != d || op.cols() != d) {
      throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(d) + "x" +
                                  std::to_string(d) + " operators, got " +
                                  std::to_string(op.rows()) + "x" + std::to_string(op.cols()));
    }
  }
}

std::string describe_condition(const char* what, double cond) {
  std::ostringstream msg;
  msg.precision(6);
  msg << what << ": condition number " << cond << " exceeds " << kMaxCondition;
  return msg.str();
}

// Inverse of a square matrix, refusing ill-conditioned input unless the
// pseudo-inverse mode is requested.
template <typename Error>
ComplexMatrix guarded_inverse(const ComplexMatrix& a, const InversionOptions& opts,
                              const char* what) {
  const double cond = linalg::condition_number(a);
  if (opts.pseudo_inverse) return linalg::pseudo_inverse(a, opts.pinv_rcond);
  if (!(cond <= opts.max_condition)) throw Error(describe_condition(what, cond), cond);
  return linalg::solve(a, ComplexMatrix::identity(a.rows()));
}

std::vector<ComplexMatrix> columns_as_operators(const ComplexMatrix& cols, std::size_t d) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(cols.cols());
  for (std::size_t mu = 0; mu < cols.cols(); ++mu) {
    ComplexMatrix op(d, d);
    for (std::size_t i = 0; i < d * d; ++i) op.entries()[i] = cols(i, mu);
    ops.push_back(std::move(op));
  }
  return ops;
}

}  // namespace

DensityReport check_density_matrix(const ComplexMatrix& rho, double tol) {
  require_square(rho, "check_density_matrix");
  DensityReport r;
  r.hermiticity_error = hermiticity_error(rho);
  ComplexMatrix h = 0.5 * (rho + adjoint(rho));
  r.min_eigenvalue = rho.empty() ? 0.0 : linalg::eigh(h).values.front();
  r.trace_error = std::abs(trace(rho) - 1.0);
  r.valid = r.hermiticity_error <= tol && r.min_eigenvalue >= -tol && r.trace_error <= tol;
  return r;
}

TomographySet::TomographySet(std::size_t d, std::vector<ComplexMatrix> states)
    : dim_(d), states_(std::move(states)) {
  require_operators(d, states_, "TomographySet");
  if (states_.size() != d * d) {
    throw std::invalid_argument("TomographySet: need exactly " + std::to_string(d * d) +
                                " states, got " + std::to_string(states_.size()));
  }
  condition_ = linalg::condition_number(operator_matrix(states_));
}

TomographySet TomographySet::from_states(std::size_t d, std::vector<ComplexMatrix> states,
                                         double tol) {
  require_operators(d, states, "TomographySet");
  for (std::size_t mu = 0; mu < states.size(); ++mu) {
    const auto report = check_density_matrix(states[mu], tol);
    if (!report.valid) {
      std::ostringstream msg;
      msg << "TomographySet: input " << mu << " is not a density matrix (hermiticity "
          << report.hermiticity_error << ", min eigenvalue " << report.min_eigenvalue
          << ", trace error " << report.trace_error << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  return TomographySet(d, std::move(states));
}

TomographySet TomographySet::from_operators(std::size_t d, std::vector<ComplexMatrix> operators) {
  return TomographySet(d, std::move(operators));
}

MeasurementSet::MeasurementSet(std::size_t d, std::vector<ComplexMatrix> outcomes)
    : dim_(d), outcomes_(std::move(outcomes)) {
  require_operators(d, outcomes_, "MeasurementSet");
  if (outcomes_.empty()) throw std::invalid_argument("MeasurementSet: no outcomes");
}

MeasurementSet MeasurementSet::from_povm(std::size_t d, std::vector<ComplexMatrix> elements,
                                         double tol) {
  require_operators(d, elements, "MeasurementSet");
  ComplexMatrix total(d, d);
  for (std::size_t mu = 0; mu < elements.size(); ++mu) {
    const auto& m = elements[mu];
    const double herm = hermiticity_error(m);
    const double lmin = linalg::eigh(0.5 * (m + adjoint(m))).values.front();
    if (herm > tol || lmin < -tol) {
      std::ostringstream msg;
      msg << "MeasurementSet: element " << mu << " is not positive semidefinite (hermiticity "
          << herm << ", min eigenvalue " << lmin << ")";
      throw std::invalid_argument(msg.str());
    }
    total += m;
  }
  const double err = max_abs_diff(total, ComplexMatrix::identity(d));
  if (err > tol) {
    throw std::invalid_argument("MeasurementSet: elements sum to identity only within " +
                                std::to_string(err));
  }
  return MeasurementSet(d, std::move(elements));
}

MeasurementSet MeasurementSet::from_operators(std::size_t d, std::vector<ComplexMatrix> operators) {
  return MeasurementSet(d, std::move(operators));
}

ProbabilityMatrix::ProbabilityMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                                     std::optional<std::uint64_t> shots)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), shots_(shots) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ProbabilityMatrix: " + std::to_string(entries_.size()) +
                                " entries for a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " table");
  }
}

JointState::JointState(std::size_t d1, std::size_t d2, ComplexMatrix matrix, double tol)
    : d1_(d1), d2_(d2), matrix_(std::move(matrix)) {
  if (d1_ == 0 || d2_ == 0 || matrix_.rows() != d1_ * d2_ || matrix_.cols() != d1_ * d2_) {
    throw std::invalid_argument("JointState: matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", expected " +
                                std::to_string(d1_ * d2_) + "x" + std::to_string(d1_ * d2_));
  }
  const auto report = check_density_matrix(matrix_, tol);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "JointState: not a density matrix (hermiticity " << report.hermiticity_error
        << ", min eigenvalue " << report.min_eigenvalue << ", trace error " << report.trace_error
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix operator_matrix(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) return {};
  const std::size_t n = ops.front().size();
  ComplexMatrix out(n, ops.size());
  for (std::size_t mu = 0; mu < ops.size(); ++mu) {
    if (ops[mu].size() != n) throw std::invalid_argument("operator_matrix: mixed operator sizes");
    for (std::size_t i = 0; i < n; ++i) out(i, mu) = ops[mu].entries()[i];
  }
  return out;
}

ComplexMatrix state_matrix(const TomographySet& set) { return operator_matrix(set.states()); }

DualBasis dual_basis(const TomographySet& set, const InversionOptions& opts) {
  const ComplexMatrix inv = guarded_inverse<IllConditionedSet>(state_matrix(set), opts,
                                                               "tomography input set");
  return DualBasis{set.dim(), columns_as_operators(adjoint(inv), set.dim())};
}

DualBasis dual_basis_frame(const TomographySet& set, const InversionOptions& opts) {
  const ComplexMatrix rho_in = state_matrix(set);
  const ComplexMatrix frame = rho_in * adjoint(rho_in);
  const ComplexMatrix inv = guarded_inverse<IllConditionedSet>(frame, opts, "tomography frame operator");
  return DualBasis{set.dim(), columns_as_operators(inv * rho_in, set.dim())};
}

Superoperator spt_from_outputs(const TomographySet& set, const std::vector<ComplexMatrix>& outputs,
                               const InversionOptions& opts) {
  if (outputs.size() != set.states().size()) {
    throw std::invalid_argument("spt_from_outputs: " + std::to_string(outputs.size()) +
                                " outputs for " + std::to_string(set.states().size()) + " inputs");
  }
  require_operators(set.dim(), outputs, "spt_from_outputs");
  const ComplexMatrix rho_in = state_matrix(set);
  const ComplexMatrix rho_out = operator_matrix(outputs);
  if (opts.pseudo_inverse) {
    return Superoperator(set.dim(), rho_out * linalg::pseudo_inverse(rho_in, opts.pinv_rcond));
  }
  const double cond = linalg::condition_number(rho_in);
  if (!(cond <= opts.max_condition)) {
    throw IllConditionedSet(describe_condition("tomography input set", cond), cond);
  }
  // Phi [rho_in] = [rho_out]  <=>  [rho_in]^T Phi^T = [rho_out]^T
  const ComplexMatrix phi_t = linalg::solve(transpose(rho_in), transpose(rho_out));
  return Superoperator(set.dim(), transpose(phi_t));
}

Superoperator spt_from_duals(const std::vector<ComplexMatrix>& outputs, const DualBasis& duals) {
  if (outputs.size() != duals.duals.size()) {
    throw std::invalid_argument("spt_from_duals: outputs and duals differ in length");
  }
  require_operators(duals.dim, outputs, "spt_from_duals");
  const std::size_t n = duals.dim * duals.dim;
  ComplexMatrix phi(n, n);
  for (std::size_t mu = 0; mu < outputs.size(); ++mu) {
    phi += outer(outputs[mu].entries(), duals.duals[mu].entries());
  }
  return Superoperator(duals.dim, std::move(phi));
}

DualBasis measurement_dual(const MeasurementSet& meas, const InversionOptions& opts) {
  const std::size_t d = meas.dim();
  const std::size_t n = d * d;
  if (meas.size() < n) {
    throw IllConditionedSet("measurement set has " + std::to_string(meas.size()) +
                                " elements; spanning operator space needs " + std::to_string(n),
                            std::numeric_limits<double>::infinity());
  }
  const ComplexMatrix m = operator_matrix(meas.outcomes());  // d^2 x N
  if (meas.size() == n) {
    const ComplexMatrix inv = guarded_inverse<IllConditionedSet>(m, opts, "measurement set");
    return DualBasis{d, columns_as_operators(adjoint(inv), d)};
  }
  const ComplexMatrix frame = m * adjoint(m);
  const ComplexMatrix inv = guarded_inverse<IllConditionedSet>(frame, opts, "measurement frame operator");
  return DualBasis{d, columns_as_operators(inv * m, d)};
}

Superoperator spt_from_probs(const MeasurementSet& meas, const ProbabilityMatrix& m,
                             const DualBasis& duals, const InversionOptions& opts) {
  const std::size_t d = meas.dim();
  if (duals.dim != d) throw std::invalid_argument("spt_from_probs: dual basis dimension mismatch");
  if (m.rows() != meas.size() || m.cols() != duals.duals.size()) {
    throw std::invalid_argument("spt_from_probs: table is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " +
                                std::to_string(meas.size()) + "x" +
                                std::to_string(duals.duals.size()));
  }
  const ComplexMatrix e = operator_matrix(measurement_dual(meas, opts).duals);
  ComplexMatrix table(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) table(i, j) = m(i, j);
  return Superoperator(d, e * table * adjoint(operator_matrix(duals.duals)));
}

ProbabilityMatrix simulate_probs(const ChannelSpec& c, const TomographySet& set,
                                 const MeasurementSet& meas, std::optional<std::uint64_t> shots,
                                 std::uint64_t seed) {
  if (c.dim() != set.dim() || c.dim() != meas.dim()) {
    throw std::invalid_argument("simulate_probs: channel, inputs and measurement dimensions differ");
  }
  const Superoperator phi = to_superop(c);
  const std::size_t rows = meas.size();
  const std::size_t cols = set.states().size();
  std::vector<double> table(rows * cols);
  for (std::size_t nu = 0; nu < cols; ++nu) {
    const ComplexMatrix out = apply_superop(phi, set.states()[nu]);
    for (std::size_t mu = 0; mu < rows; ++mu) {
      table[mu * cols + nu] = hs_inner(meas.outcomes()[mu], out).real();
    }
  }
  if (!shots) return ProbabilityMatrix(rows, cols, std::move(table));

  if (*shots == 0) throw std::invalid_argument("simulate_probs: shot count must be positive");
  std::mt19937_64 rng(seed);
  for (std::size_t nu = 0; nu < cols; ++nu) {
    // Multinomial draw as a chain of conditional binomials.
    double remaining_mass = 0.0;
    std::vector<double> p(rows);
    for (std::size_t mu = 0; mu < rows; ++mu) {
      p[mu] = std::max(0.0, table[mu * cols + nu]);
      remaining_mass += p[mu];
    }
    std::uint64_t remaining = *shots;
    for (std::size_t mu = 0; mu < rows; ++mu) {
      std::uint64_t count = 0;
      if (mu + 1 == rows) {
        count = remaining;
      } else if (remaining > 0 && remaining_mass > 0.0) {
        const double q = std::min(1.0, p[mu] / remaining_mass);
        std::binomial_distribution<std::uint64_t> draw(remaining, q);
        count = draw(rng);
      }
      remaining -= count;
      remaining_mass -= p[mu];
      table[mu * cols + nu] = static_cast<double>(count) / static_cast<double>(*shots);
    }
  }
  return ProbabilityMatrix(rows, cols, std::move(table), shots);
}

Superoperator joint_superop(const Superoperator& phi, std::size_t d2) {
  if (d2 == 0) throw std::invalid_argument("joint_superop: ancilla dimension must be positive");
  const std::size_t d1 = phi.dim();
  const auto r = reshuffle_spec(d1, d1, d2, d2);
  const ComplexMatrix product = kron(phi.matrix(), ComplexMatrix::identity(d2 * d2));
  return Superoperator(d1 * d2, conjugate_by(r.perm, product));
}

JointState maximally_entangled_state(std::size_t d) {
  if (d == 0) throw std::invalid_argument("maximally_entangled_state: dimension must be positive");
  ComplexMatrix tau(d * d, d * d);
  const double w = 1.0 / static_cast<double>(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) tau(a * d + a, b * d + b) = w;
  return JointState(d, d, std::move(tau));
}

ComplexMatrix reshuffled_joint(const ComplexMatrix& tau, std::size_t d1, std::size_t d2) {
  if (tau.rows() != d1 * d2 || tau.cols() != d1 * d2) {
    throw std::invalid_argument("reshuffled_joint: operator shape does not match dims");
  }
  const auto r_inv = reshuffle_spec(d1, d1, d2, d2).perm.inverse();
  return mat(apply_perm(r_inv, tau.entries()), d1 * d1, d2 * d2);
}

Superoperator aapt_reconstruct(const JointState& tau_in, const JointState& tau_out,
                               const InversionOptions& opts) {
  if (tau_in.d1() != tau_out.d1() || tau_in.d2() != tau_out.d2()) {
    throw std::invalid_argument("aapt_reconstruct: input and output joint dims differ");
  }
  const std::size_t d1 = tau_in.d1();
  const std::size_t d2 = tau_in.d2();
  if (d2 < d1) {
    throw IllConditionedAncillaState(
        "ancilla dimension " + std::to_string(d2) + " is smaller than system dimension " +
            std::to_string(d1) + "; the reshuffled input cannot have full rank",
        std::numeric_limits<double>::infinity());
  }
  const ComplexMatrix phi_tau = reshuffled_joint(tau_in.matrix(), d1, d2);
  const ComplexMatrix out = reshuffled_joint(tau_out.matrix(), d1, d2);

  ComplexMatrix phi_tau_inv;
  if (d1 == d2) {
    phi_tau_inv = guarded_inverse<IllConditionedAncillaState>(phi_tau, opts, "ancilla input state");
  } else {
    const double cond = linalg::condition_number(phi_tau);
    if (!opts.pseudo_inverse && !(cond <= opts.max_condition)) {
      throw IllConditionedAncillaState(describe_condition("ancilla input state", cond), cond);
    }
    phi_tau_inv = linalg::pseudo_inverse(phi_tau, opts.pinv_rcond);  // right inverse, d2^2 x d1^2
  }
  // vec(Phi_T) = (1 (x) (Phi_tau^{-1})^T) vec(out)
  const ComplexMatrix v = right_action(phi_tau_inv, d1 * d1) * vec(out).as_column();
  return Superoperator(d1, mat(v.entries(), d1 * d1, d1 * d1));
}

Superoperator eapt_reconstruct(const JointState& tau_out) {
  const std::size_t d = tau_out.d1();
  if (tau_out.d2() != d) {
    throw std::invalid_argument("eapt_reconstruct: system and ancilla dims must agree");
  }
  ComplexMatrix phi = reshuffled_joint(tau_out.matrix(), d, d);
  phi *= static_cast<double>(d);
  return Superoperator(d, std::move(phi));
}

std::vector<ComplexMatrix> traceless_hermitian_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix sym(d, d);
      sym(j, k) = s;
      sym(k, j) = s;
      basis.push_back(std::move(sym));
      ComplexMatrix anti(d, d);
      anti(j, k) = Complex(0.0, -s);
      anti(k, j) = Complex(0.0, s);
      basis.push_back(std::move(anti));
    }
  for (std::size_t l = 1; l < d; ++l) {
    ComplexMatrix diag(d, d);
    const double w = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) diag(j, j) = w;
    diag(l, l) = -static_cast<double>(l) * w;
    basis.push_back(std::move(diag));
  }
  return basis;
}

std::size_t povm_domain_dimension(const MeasurementSet& meas, double rel_tol) {
  const auto basis = traceless_hermitian_basis(meas.dim());
  if (basis.empty()) return 0;
  ComplexMatrix t(meas.size(), basis.size());
  for (std::size_t mu = 0; mu < meas.size(); ++mu)
    for (std::size_t k = 0; k < basis.size(); ++k)
      t(mu, k) = hs_inner(meas.outcomes()[mu], basis[k]).real();
  return linalg::rank(t, rel_tol);
}

namespace presets {

namespace {

ComplexMatrix projector(const std::vector<Complex>& psi) { return outer(psi, psi); }

}  // namespace

TomographySet qubit_inputs() { return standard_inputs(2); }

TomographySet standard_inputs(std::size_t d) {
  std::vector<ComplexMatrix> states;
  for (std::size_t a = 0; a < d; ++a) states.push_back(ComplexMatrix::unit(d, d, a, a));
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      std::vector<Complex> plus(d), plus_i(d);
      plus[a] = s;
      plus[b] = s;
      plus_i[a] = s;
      plus_i[b] = Complex(0.0, s);
      states.push_back(projector(plus));
      states.push_back(projector(plus_i));
    }
  return TomographySet::from_states(d, std::move(states));
}

MeasurementSet tetrahedral_povm() {
  const double r2 = std::sqrt(2.0);
  const double bloch[4][3] = {{0.0, 0.0, 1.0},
                              {2.0 * r2 / 3.0, 0.0, -1.0 / 3.0},
                              {-r2 / 3.0, std::sqrt(2.0 / 3.0), -1.0 / 3.0},
                              {-r2 / 3.0, -std::sqrt(2.0 / 3.0), -1.0 / 3.0}};
  std::vector<ComplexMatrix> elems;
  for (const auto& n : bloch) {
    // (1 + n . sigma) / 4
    elems.push_back(ComplexMatrix{{(1.0 + n[2]) / 4.0, Complex(n[0], -n[1]) / 4.0},
                                  {Complex(n[0], n[1]) / 4.0, (1.0 - n[2]) / 4.0}});
  }
  return MeasurementSet::from_povm(2, std::move(elems));
}

MeasurementSet pauli_povm() {
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<std::vector<Complex>> kets = {
      {1.0, 0.0}, {0.0, 1.0}, {s, s}, {s, -s}, {s, Complex(0.0, s)}, {s, Complex(0.0, -s)}};
  std::vector<ComplexMatrix> elems;
  for (const auto& k : kets) elems.push_back((1.0 / 3.0) * projector(k));
  return MeasurementSet::from_povm(2, std::move(elems));
}

MeasurementSet ic_povm(std::size_t d) {
  if (d == 2) return tetrahedral_povm();
  const auto inputs = standard_inputs(d);
  ComplexMatrix total(d, d);
  for (const auto& rho : inputs.states()) total += rho;
  const ComplexMatrix w = linalg::inverse_sqrt_psd(total);
  std::vector<ComplexMatrix> elems;
  for (const auto& rho : inputs.states()) {
    ComplexMatrix e = w * rho * w;
    elems.push_back(0.5 * (e + adjoint(e)));
  }
  return MeasurementSet::from_povm(d, std::move(elems));
}

}  // namespace presets

}  // namespace vecq
