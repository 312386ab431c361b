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

#include "vecq/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "vecq/linalg.hpp"
#include "vecq/veclib.hpp"

namespace vecq {

namespace {

void require_dim(std::size_t expected, const ComplexMatrix& rho, const char* what) {
  if (rho.rows() != expected || rho.cols() != expected) {
    throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(expected) +
                                "x" + std::to_string(expected) + " operator, got " +
                                std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
  }
}

void require_probability(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": parameter " + std::to_string(x) +
                                " outside [0, 1]");
  }
}

ComplexMatrix dilate_unchecked(const ComplexMatrix& u12, const ComplexMatrix& omega,
                               const ComplexMatrix& rho) {
  const ComplexMatrix joint = u12 * kron(rho, omega) * adjoint(u12);
  return partial_trace(joint, rho.rows(), omega.rows(), Subsystem::First);
}

}  // namespace

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw std::invalid_argument("KrausSet: at least one operator required");
  dim_ = operators_.front().rows();
  if (dim_ == 0) throw std::invalid_argument("KrausSet: empty operator");
  for (const auto& k : operators_) require_dim(dim_, k, "KrausSet");
}

ChoiMatrix::ChoiMatrix(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ == 0) throw std::invalid_argument("ChoiMatrix: dimension must be positive");
  require_dim(dim_ * dim_, matrix_, "ChoiMatrix");
}

Superoperator::Superoperator(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ == 0) throw std::invalid_argument("Superoperator: dimension must be positive");
  require_dim(dim_ * dim_, matrix_, "Superoperator");
}

std::size_t ChannelSpec::dim() const {
  return std::visit([](const auto& r) { return r.dim(); }, rep_);
}

Representation ChannelSpec::representation() const {
  switch (rep_.index()) {
    case 0:
      return Representation::Kraus;
    case 1:
      return Representation::Choi;
    default:
      return Representation::Superop;
  }
}

ComplexMatrix apply_kraus(const KrausSet& k, const ComplexMatrix& rho) {
  require_dim(k.dim(), rho, "apply_kraus");
  ComplexMatrix out(k.dim(), k.dim());
  for (const auto& op : k.operators()) out += op * rho * adjoint(op);
  return out;
}

ComplexMatrix apply_superop(const Superoperator& phi, const ComplexMatrix& rho) {
  require_dim(phi.dim(), rho, "apply_superop");
  const ComplexMatrix out = phi.matrix() * vec(rho).as_column();
  return mat(out.entries(), phi.dim(), phi.dim());
}

ComplexMatrix apply_choi(const ChoiMatrix& d, const ComplexMatrix& rho) {
  require_dim(d.dim(), rho, "apply_choi");
  const ComplexMatrix contracted =
      d.matrix() * kron(ComplexMatrix::identity(d.dim()), transpose(rho));
  return partial_trace(contracted, d.dim(), d.dim(), Subsystem::First);
}

ComplexMatrix apply_channel(const ChannelSpec& c, const ComplexMatrix& rho) {
  if (const auto* k = c.kraus()) return apply_kraus(*k, rho);
  if (const auto* d = c.choi()) return apply_choi(*d, rho);
  return apply_superop(*c.superop(), rho);
}

Superoperator kraus_to_superop(const KrausSet& k) {
  const std::size_t n = k.dim() * k.dim();
  ComplexMatrix phi(n, n);
  for (const auto& op : k.operators()) phi += kron(op, conjugate(op));
  return Superoperator(k.dim(), std::move(phi));
}

ChoiMatrix kraus_to_choi(const KrausSet& k) {
  const std::size_t n = k.dim() * k.dim();
  ComplexMatrix d(n, n);
  for (const auto& op : k.operators()) {
    const auto v = vec(op);
    d += outer(v.entries(), v.entries());
  }
  return ChoiMatrix(k.dim(), std::move(d));
}

Superoperator choi_to_superop(const ChoiMatrix& d) {
  const std::size_t n = d.dim();
  const auto shuffled = apply_perm(reshuffle_spec(n, n, n, n), d.matrix().entries());
  return Superoperator(n, mat(shuffled, n * n, n * n));
}

ChoiMatrix superop_to_choi(const Superoperator& phi) {
  const std::size_t n = phi.dim();
  const auto r_inv = reshuffle_spec(n, n, n, n).perm.inverse();
  const auto shuffled = apply_perm(r_inv, phi.matrix().entries());
  return ChoiMatrix(n, mat(shuffled, n * n, n * n));
}

namespace {

ComplexMatrix symmetrized(const ChoiMatrix& d) {
  const double err = hermiticity_error(d.matrix());
  if (err > kHermiticityGate) {
    std::ostringstream msg;
    msg << "Choi matrix is not Hermitian: max |D - D^dagger| = " << err;
    throw std::invalid_argument(msg.str());
  }
  ComplexMatrix h = d.matrix() + adjoint(d.matrix());
  h *= 0.5;
  return h;
}

}  // namespace

std::vector<double> choi_eigenvalues(const ChoiMatrix& d) {
  return linalg::eigh(symmetrized(d)).values;
}

KrausSet choi_to_kraus(const ChoiMatrix& d, std::optional<double> cutoff) {
  const ComplexMatrix h = symmetrized(d);
  const double scale = std::abs(trace(h));
  const double cut = cutoff.value_or(kKrausRelCutoff * scale);
  const auto eig = linalg::eigh(h);
  const std::size_t n = d.dim();
  const double lambda_min = eig.values.front();
  if (lambda_min < -cut * static_cast<double>(n)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "map is not completely positive: Choi eigenvalue " << lambda_min;
    throw NotCompletelyPositive(msg.str(), lambda_min);
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t idx = eig.values.size(); idx-- > 0;) {
    const double lambda = eig.values[idx];
    if (lambda <= cut) break;
    std::vector<Complex> v(n * n);
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = eig.vectors(i, idx);
      if (std::abs(v[i]) > std::abs(v[pivot]) * (1.0 + 1e-12)) pivot = i;
    }
    const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
    const double weight = std::sqrt(lambda);
    for (auto& z : v) z *= phase * weight;
    v[pivot] = Complex(v[pivot].real(), 0.0);
    ops.push_back(mat(v, n, n));
  }
  if (ops.empty()) ops.push_back(ComplexMatrix::zero(n, n));
  return KrausSet(std::move(ops));
}

KrausSet to_kraus(const ChannelSpec& c, std::optional<double> cutoff) {
  if (const auto* k = c.kraus()) return *k;
  return choi_to_kraus(to_choi(c), cutoff);
}

ChoiMatrix to_choi(const ChannelSpec& c) {
  if (const auto* k = c.kraus()) return kraus_to_choi(*k);
  if (const auto* d = c.choi()) return *d;
  return superop_to_choi(*c.superop());
}

Superoperator to_superop(const ChannelSpec& c) {
  if (const auto* k = c.kraus()) return kraus_to_superop(*k);
  if (const auto* d = c.choi()) return choi_to_superop(*d);
  return *c.superop();
}

CpReport is_cp(const ChoiMatrix& d, std::optional<double> tol) {
  const auto values = choi_eigenvalues(d);
  CpReport report;
  report.min_eigenvalue = values.front();
  report.tolerance = tol.value_or(kCpRelTol * std::abs(trace(d.matrix())));
  report.cp = report.min_eigenvalue >= -report.tolerance;
  return report;
}

double tp_error(const ChannelSpec& c) {
  const std::size_t n = c.dim();
  if (const auto* k = c.kraus()) {
    ComplexMatrix sum(n, n);
    for (const auto& op : k->operators()) sum += adjoint(op) * op;
    return max_abs_diff(sum, ComplexMatrix::identity(n));
  }
  const auto d = to_choi(c);
  return max_abs_diff(partial_trace(d.matrix(), n, n, Subsystem::Second),
                      ComplexMatrix::identity(n));
}

double unital_error(const ChannelSpec& c) {
  const std::size_t n = c.dim();
  const auto d = to_choi(c);
  return max_abs_diff(partial_trace(d.matrix(), n, n, Subsystem::First),
                      ComplexMatrix::identity(n));
}

bool is_tp(const ChannelSpec& c, double tol) { return tp_error(c) <= tol; }
bool is_unital(const ChannelSpec& c, double tol) { return unital_error(c) <= tol; }

VerificationReport verify_channel(const ChannelSpec& c, std::optional<double> cp_tol, double tol) {
  VerificationReport r;
  const ChoiMatrix d = to_choi(c);
  r.hermiticity_error = hermiticity_error(d.matrix());
  r.choi_trace = trace(d.matrix());
  ComplexMatrix h = d.matrix() + adjoint(d.matrix());
  h *= 0.5;
  const auto values = linalg::eigh(h).values;
  r.cp.min_eigenvalue = values.front();
  r.cp.tolerance = cp_tol.value_or(kCpRelTol * std::abs(r.choi_trace));
  r.cp.cp = r.hermiticity_error <= kHermiticityGate && r.cp.min_eigenvalue >= -r.cp.tolerance;
  const double lmax = std::abs(values.back());
  const double rank_cut = kKrausRelCutoff * std::max(1.0, std::abs(r.choi_trace));
  double lmin_abs = lmax;
  for (double v : values) {
    if (std::abs(v) > rank_cut) ++r.choi_rank;
    lmin_abs = std::min(lmin_abs, std::abs(v));
  }
  r.choi_condition =
      lmin_abs > 0.0 ? lmax / lmin_abs : std::numeric_limits<double>::infinity();
  r.tp_error = tp_error(c);
  r.unital_error = unital_error(c);
  r.tp = r.tp_error <= tol;
  r.unital = r.unital_error <= tol;
  return r;
}

ComplexMatrix jamiolkowski_state(const ChannelSpec& c) {
  const auto d = to_choi(c);
  const auto cp = is_cp(d);
  if (!cp.cp) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Jamiolkowski state requires a CP map; Choi eigenvalue " << cp.min_eigenvalue;
    throw NotCompletelyPositive(msg.str(), cp.min_eigenvalue);
  }
  const double tp = tp_error(c);
  if (tp > kDefaultTol) {
    throw std::invalid_argument("Jamiolkowski state requires a trace-preserving map; TP error " +
                                std::to_string(tp));
  }
  ComplexMatrix tau = d.matrix();
  tau *= 1.0 / static_cast<double>(c.dim());
  return tau;
}

ComplexMatrix stinespring_apply(const ComplexMatrix& u12, const ComplexMatrix& omega,
                                const ComplexMatrix& rho) {
  require_square(omega, "stinespring_apply");
  require_square(rho, "stinespring_apply");
  require_dim(rho.rows() * omega.rows(), u12, "stinespring_apply");
  const double err = unitarity_error(u12);
  if (err > kDefaultTol) {
    throw std::invalid_argument("stinespring_apply: dilation is not unitary, max |U^dagger U - 1| = " +
                                std::to_string(err));
  }
  return dilate_unchecked(u12, omega, rho);
}

Superoperator dilation_superop(const ComplexMatrix& u12, const ComplexMatrix& omega) {
  require_square(omega, "dilation_superop");
  if (omega.rows() == 0 || u12.rows() % omega.rows() != 0) {
    throw std::invalid_argument("dilation_superop: unitary size not a multiple of the environment");
  }
  const std::size_t d1 = u12.rows() / omega.rows();
  // Validates unitarity once.
  (void)stinespring_apply(u12, omega, ComplexMatrix::identity(d1));
  const std::size_t n = d1 * d1;
  ComplexMatrix phi(n, n);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d1; ++b) {
      const auto image = dilate_unchecked(u12, omega, ComplexMatrix::unit(d1, d1, a, b));
      const std::size_t col = index_fuse(a, b, d1);
      for (std::size_t row = 0; row < n; ++row) phi(row, col) = image.entries()[row];
    }
  return Superoperator(d1, std::move(phi));
}

ChannelSpec identity_channel(std::size_t d) {
  if (d == 0) throw std::invalid_argument("identity_channel: dimension must be positive");
  return KrausSet({ComplexMatrix::identity(d)});
}

ChannelSpec unitary_channel(const ComplexMatrix& u) {
  require_square(u, "unitary_channel");
  const double err = unitarity_error(u);
  if (err > kDefaultTol) {
    throw std::invalid_argument("unitary_channel: matrix is not unitary, max |U^dagger U - 1| = " +
                                std::to_string(err));
  }
  return KrausSet({u});
}

ChannelSpec depolarizing(std::size_t d, double p) {
  if (d == 0) throw std::invalid_argument("depolarizing: dimension must be positive");
  require_probability(p, "depolarizing");
  const double dd = static_cast<double>(d);
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::sqrt(1.0 - p + p / (dd * dd)) * ComplexMatrix::identity(d));
  if (p > 0.0) {
    const double w = std::sqrt(p) / dd;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t z = 0; z < d; ++z) {
        if (x == 0 && z == 0) continue;
        // Weyl operator X^x Z^z: |j> -> omega^{z j} |j + x>.
        ComplexMatrix weyl(d, d);
        for (std::size_t j = 0; j < d; ++j) {
          const double angle = 2.0 * std::numbers::pi * static_cast<double>(z * j) / dd;
          weyl((j + x) % d, j) = w * std::polar(1.0, angle);
        }
        ops.push_back(std::move(weyl));
      }
  }
  return KrausSet(std::move(ops));
}

ChannelSpec amplitude_damping(double gamma) {
  require_probability(gamma, "amplitude_damping");
  ComplexMatrix k0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}};
  ComplexMatrix k1{{0.0, std::sqrt(gamma)}, {0.0, 0.0}};
  return KrausSet({std::move(k0), std::move(k1)});
}

ChannelSpec phase_damping(double lambda) {
  require_probability(lambda, "phase_damping");
  ComplexMatrix k0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - lambda)}};
  ComplexMatrix k1{{0.0, 0.0}, {0.0, std::sqrt(lambda)}};
  return KrausSet({std::move(k0), std::move(k1)});
}

ChannelSpec transpose_map(std::size_t d) {
  if (d == 0) throw std::invalid_argument("transpose_map: dimension must be positive");
  // D[f(a,c), f(b,e)] = delta(a,e) delta(c,b)
  ComplexMatrix m(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = 0; c < d; ++c) m(a * d + c, c * d + a) = 1.0;
  return ChoiMatrix(d, std::move(m));
}

double channel_distance(const ChannelSpec& a, const ChannelSpec& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("channel_distance: dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()) + " differ");
  }
  return max_abs_diff(to_superop(a).matrix(), to_superop(b).matrix());
}

}  // namespace vecq
