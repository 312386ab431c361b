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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "vecq/channels.hpp"
#include "vecq/cli/commands.hpp"
#include "vecq/cli/documents.hpp"
#include "vecq/errors.hpp"
#include "vecq/random.hpp"
#include "vecq/tomography.hpp"
#include "vecq/veclib.hpp"

namespace {

using namespace vecq;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/** Tracks the worst value seen against a bound. */
struct Worst {
  double bound;
  double value = 0.0;
  bool ok = true;
  void see(double x) {
    value = std::max(value, x);
    if (!(x <= bound)) ok = false;
  }
  std::string str() const { return "max " + sci(value) + " <= " + sci(bound); }
};

ComplexMatrix integer_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  ComplexMatrix m(rows.size(), rows.begin()->size());
  std::size_t a = 0;
  for (const auto& row : rows) {
    std::size_t b = 0;
    for (int x : row) m(a, b++) = double(x);
    ++a;
  }
  return m;
}

/** Kraus operators (1 (x) <k|) U (1 (x) |0>) of a random dilation with a d^2 environment. */
KrausSet random_dilation_kraus(std::size_t d, random::Engine& rng) {
  const std::size_t env = d * d;
  const auto u = random::haar_unitary(d * env, rng);
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < env; ++k) {
    ComplexMatrix op(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) op(a, b) = u(a * env + k, b * env);
    ops.push_back(std::move(op));
  }
  return KrausSet(std::move(ops));
}

std::vector<KrausSet> generated_channels() {
  random::Engine rng(9001);
  std::vector<KrausSet> out;
  for (int i = 0; i < 100; ++i) out.push_back(random_dilation_kraus(2 + i % 3, rng));
  return out;
}

const std::vector<KrausSet>& channels() {
  static const auto cache = generated_channels();
  return cache;
}

Outcome golden_swap() {
  const auto s22 = integer_matrix({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  const auto s23 = integer_matrix({{1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0},
                                   {0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0},
                                   {0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 1}});
  const bool a = swap_spec(2, 2).perm.matrix() == s22;
  const bool b = swap_spec(2, 3).perm.matrix() == s23;
  return {a && b, std::string("S(2,2) ") + (a ? "exact" : "differs") + ", S(2,3) " + (b ? "exact" : "differs")};
}

Outcome reshuffle_identity() {
  std::size_t exact = 0, mismatched = 0;
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      for (std::size_t r = 1; r <= 3; ++r)
        for (std::size_t s = 1; s <= 3; ++s) {
          const auto spec = reshuffle_spec(p, q, r, s);
          for (std::size_t i = 0; i < p * q; ++i)
            for (std::size_t j = 0; j < r * s; ++j) {
              const auto m = ComplexMatrix::unit(p, q, i / q, i % q);
              const auto n = ComplexMatrix::unit(r, s, j / s, j % s);
              const auto lhs = vec(kron(m, n));
              const auto rhs = apply_perm(spec, kron(vec(m).entries(), vec(n).entries()));
              if (std::equal(rhs.begin(), rhs.end(), lhs.entries().begin())) ++exact;
              else ++mismatched;
            }
        }
  random::Engine rng(9002);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  Worst worst{1e-13};
  for (int t = 0; t < 200; ++t) {
    const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
    const auto m = test::random_matrix(p, q, rng);
    const auto n = test::random_matrix(r, s, rng);
    const auto lhs = vec(kron(m, n));
    const auto rhs = apply_perm(reshuffle_spec(p, q, r, s), kron(vec(m).entries(), vec(n).entries()));
    double e = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) e = std::max(e, std::abs(rhs[i] - lhs.entries()[i]));
    worst.see(e);
  }
  return {mismatched == 0 && worst.ok,
          std::to_string(exact) + " basis pairs exact, " + std::to_string(mismatched) +
              " mismatched; 200 random " + worst.str()};
}

Outcome triple_product() {
  random::Engine rng(9003);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  Worst worst{1e-12};
  for (int t = 0; t < 200; ++t) {
    const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
    const auto a = test::random_matrix(p, q, rng);
    const auto x = test::random_matrix(q, r, rng);
    const auto b = test::random_matrix(r, s, rng);
    const auto direct = vec(a * x * b).as_column();
    worst.see(max_abs_diff(vec_triple(a, x, b).as_column(), direct));
  }
  return {worst.ok, "200 triples " + worst.str()};
}

Outcome conversion_closure() {
  random::Engine rng(9004);
  Worst worst{1e-10};
  for (const auto& k : channels()) {
    const auto choi = kraus_to_choi(k);
    const auto phi = kraus_to_superop(k);
    // Every ordered conversion, landed back on a common representation.
    const std::vector<ChannelSpec> results{
        phi,                                   // K -> S
        choi_to_superop(choi),                 // K -> C -> S
        choi_to_superop(superop_to_choi(phi)), // S -> C
        kraus_to_superop(choi_to_kraus(choi)), // C -> K
        kraus_to_superop(to_kraus(phi)),       // S -> K
        kraus_to_choi(choi_to_kraus(superop_to_choi(phi))),
    };
    for (std::size_t i = 0; i < results.size(); ++i)
      for (std::size_t j = i + 1; j < results.size(); ++j) worst.see(channel_distance(results[i], results[j]));
    worst.see(max_abs_diff(choi.matrix(), test::choi_by_definition(k.operators())));
    const auto rho = random::density_matrix(k.dim(), rng);
    const auto out = apply_kraus(k, rho);
    worst.see(max_abs_diff(apply_choi(choi, rho), out));
    worst.see(max_abs_diff(apply_superop(phi, rho), out));
  }
  return {worst.ok, "100 channels d in {2,3,4}, " + worst.str()};
}

Outcome cp_criterion() {
  std::size_t cp = 0;
  double worst_min = std::numeric_limits<double>::infinity();
  for (const auto& k : channels()) {
    const auto rep = is_cp(kraus_to_choi(k));
    if (rep.cp) ++cp;
    worst_min = std::min(worst_min, rep.min_eigenvalue);
  }
  Worst dev{1e-10};
  bool rejected = true;
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto t = transpose_map(d);
    const auto rep = is_cp(*t.choi());
    rejected = rejected && !rep.cp;
    dev.see(std::abs(rep.min_eigenvalue + 1.0));
    const auto oracle = test::general_eigenvalues(t.choi()->matrix());
    dev.see(std::abs(oracle.front() + 1.0));
  }
  return {cp == channels().size() && rejected && dev.ok,
          std::to_string(cp) + "/100 dilation channels CP (min eigenvalue " + sci(worst_min) +
              "); transpose map rejected, |lambda_min + 1| " + dev.str()};
}

Outcome tp_constraints() {
  Worst worst{1e-10};
  for (const auto& k : channels()) {
    const std::size_t d = k.dim();
    const auto choi = kraus_to_choi(k).matrix();
    worst.see(std::abs(trace(choi) - double(d)));
    worst.see(max_abs_diff(partial_trace(choi, d, d, Subsystem::Second), ComplexMatrix::identity(d)));
    // Explicit sum over the output index.
    ComplexMatrix reduced(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) reduced(b, c) += choi(a * d + b, a * d + c);
    worst.see(max_abs_diff(reduced, ComplexMatrix::identity(d)));
  }
  return {worst.ok, "100 channels, " + worst.str()};
}

ComplexMatrix bell_oracle(std::size_t d) {
  std::vector<Complex> omega(d * d);
  for (std::size_t a = 0; a < d; ++a) omega[a * d + a] = 1.0 / std::sqrt(double(d));
  return outer(omega, omega);
}

Outcome jamiolkowski_loop() {
  random::Engine rng(9005);
  Worst worst{1e-10};
  bool valid = true;
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + t % 2;
    const ChannelSpec c = random::cptp_channel(d, rng);
    const auto rho = jamiolkowski_state(c);
    const auto eig = test::general_eigenvalues(rho);
    valid = valid && hermiticity_error(rho) < 1e-12 && std::abs(trace(rho) - 1.0) < 1e-12 &&
            eig.front() > -1e-12;
    ComplexMatrix image = apply_superop(joint_superop(*c.superop(), d), bell_oracle(d));
    image *= double(d);
    worst.see(max_abs_diff(image, to_choi(c).matrix()));
    worst.see(max_abs_diff(maximally_entangled_state(d).matrix(), bell_oracle(d)));
  }
  return {valid && worst.ok,
          std::string(valid ? "50 states valid" : "invalid state found") + ", " + worst.str()};
}

Outcome spt_pipeline() {
  random::Engine rng(9006);
  std::vector<ChannelSpec> cases;
  for (double p : {0.0, 0.25, 0.5, 1.0}) cases.push_back(depolarizing(2, p));
  for (int t = 0; t < 50; ++t) cases.push_back(random::cptp_channel(2 + t % 2, rng));
  Worst exact{1e-8}, agree{1e-10};
  for (const auto& c : cases) {
    const std::size_t d = c.dim();
    const auto set = presets::standard_inputs(d);
    const auto meas = presets::ic_povm(d);
    std::vector<ComplexMatrix> outputs;
    for (const auto& rho : set.states()) outputs.push_back(apply_channel(c, rho));
    const auto from_outputs = spt_from_outputs(set, outputs);
    const auto from_probs = spt_from_probs(meas, simulate_probs(c, set, meas), dual_basis(set));
    exact.see(channel_distance(from_outputs, c));
    exact.see(channel_distance(from_probs, c));
    agree.see(channel_distance(from_outputs, from_probs));
  }
  return {exact.ok && agree.ok, "54 channels, recovery " + exact.str() + ", routes agree " + agree.str()};
}

Outcome aapt() {
  random::Engine rng(9007);
  Worst worst{1e-8};
  double min_schmidt = 1.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 2;
    const auto psi = random::pure_state(d * d, rng);
    ComplexMatrix coeffs(d, d, psi);
    const auto sv = test::singular_values_oracle(coeffs);
    min_schmidt = std::min(min_schmidt, sv.back());
    const JointState tau_in(d, d, outer(psi, psi));
    const auto phi = random::cptp_channel(d, rng);
    const JointState tau_out(d, d, apply_superop(joint_superop(phi, d), tau_in.matrix()));
    worst.see(channel_distance(aapt_reconstruct(tau_in, tau_out), phi));
  }
  bool raised = false;
  const auto rho = random::density_matrix(2, rng);
  const auto omega = random::density_matrix(2, rng);
  const JointState product(2, 2, kron(rho, omega));
  const auto phi = random::cptp_channel(2, rng);
  try {
    (void)aapt_reconstruct(product, JointState(2, 2, apply_superop(joint_superop(phi, 2), product.matrix())));
  } catch (const IllConditionedAncillaState&) {
    raised = true;
  }
  return {worst.ok && raised && min_schmidt > 1e-6,
          "20 inputs (min Schmidt coefficient " + sci(min_schmidt) + "), " + worst.str() +
              "; product input " + (raised ? "raised" : "did not raise")};
}

Outcome eapt() {
  random::Engine rng(9008);
  Worst worst{1e-10};
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + t % 2;
    const ChannelSpec c = random::cptp_channel(d, rng);
    const JointState out(d, d, jamiolkowski_state(c));
    const auto rec = eapt_reconstruct(out);
    worst.see(channel_distance(rec, c));
    worst.see(channel_distance(rec, aapt_reconstruct(maximally_entangled_state(d), out)));
  }
  return {worst.ok, "50 channels, " + worst.str()};
}

Outcome povm_domain() {
  const auto tetra = povm_domain_dimension(presets::tetrahedral_povm());
  const auto trivial = povm_domain_dimension(MeasurementSet::from_povm(2, {ComplexMatrix::identity(2)}));
  random::Engine rng(9009);
  std::uniform_int_distribution<std::size_t> dim(2, 4), count(1, 20);
  std::size_t violations = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = dim(rng), n = count(rng);
    const auto k = povm_domain_dimension(MeasurementSet::from_povm(d, random::povm(d, n, rng)));
    if (k > std::min(n - 1, d * d - 1)) ++violations;
  }
  return {tetra == 3 && trivial == 0 && violations == 0,
          "tetrahedral " + std::to_string(tetra) + ", {1} " + std::to_string(trivial) + ", " +
              std::to_string(violations) + "/100 random trials over the bound"};
}

int cli(const std::vector<std::string>& args, const std::string& input, std::string* err_text = nullptr) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

Outcome cli_contract() {
  random::Engine rng(9010);
  std::size_t exact = 0, total = 0;
  for (int t = 0; t < 30; ++t) {
    const auto phi = random::cptp_channel(2 + t % 2, rng);
    const ChannelSpec spec = t % 3 == 0 ? ChannelSpec(phi) : t % 3 == 1 ? ChannelSpec(superop_to_choi(phi))
                                                                         : ChannelSpec(to_kraus(phi));
    const auto text = cli::dump_json(cli::channel_document(spec));
    const auto back = cli::parse_channel_document(cli::parse_json(text));
    const auto a = to_superop(spec).matrix(), b = to_superop(back).matrix();
    ++total;
    if (std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0 &&
        cli::dump_json(cli::channel_document(back)) == text)
      ++exact;
  }
  const auto doc = [](const ChannelSpec& c) { return cli::dump_json(cli::channel_document(c)); };
  cli::TomographyRun product;
  product.scheme = "aapt";
  product.dim = 2;
  product.joint_in.emplace(2, 2, ComplexMatrix::unit(4, 4, 0, 0));
  product.joint_out = product.joint_in;

  std::string not_cp_err;
  const int codes[] = {
      cli({"verify"}, doc(depolarizing(2, 0.5))),
      cli({"verify"}, doc(transpose_map(2))),
      cli({"verify"}, "{\"format_version\": \"1\""),
      cli({"convert", "--to", "kraus"}, doc(transpose_map(2)), &not_cp_err),
      cli({"tomo", "reconstruct"}, cli::dump_json(cli::run_document(product))),
  };
  bool codes_ok = true;
  std::string seen;
  for (int i = 0; i < 5; ++i) {
    codes_ok = codes_ok && codes[i] == i;
    seen += std::to_string(codes[i]);
  }
  bool lambda_ok = false;
  const auto pos = not_cp_err.find("lambda_min = ");
  if (pos != std::string::npos)
    lambda_ok = std::abs(std::stod(not_cp_err.substr(pos + 13)) + 1.0) < 1e-10;
  return {exact == total && codes_ok && lambda_ok,
          std::to_string(exact) + "/" + std::to_string(total) + " documents bit-exact; exit codes " + seen +
              " (expected 01234); transpose convert " + (lambda_ok ? "reports lambda_min = -1" : "missing lambda_min")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"golden-swap-matrices", golden_swap},
      {"reshuffle-identity", reshuffle_identity},
      {"triple-product", triple_product},
      {"conversion-closure", conversion_closure},
      {"cp-criterion", cp_criterion},
      {"tp-constraints", tp_constraints},
      {"jamiolkowski-loop", jamiolkowski_loop},
      {"spt-pipeline", spt_pipeline},
      {"aapt-reconstruction", aapt},
      {"eapt-reconstruction", eapt},
      {"povm-domain-dimension", povm_domain},
      {"cli-contract", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %-24s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
