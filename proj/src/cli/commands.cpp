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

#include "vecq/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vecq/channels.hpp"
#include "vecq/cli/documents.hpp"
#include "vecq/errors.hpp"
#include "vecq/random.hpp"
#include "vecq/tomography.hpp"
#include "vecq/veclib.hpp"

namespace vecq::cli {
namespace {

/** Flag combinations that parse but make no sense together. */
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string from, to, in = "-", out = "-", report, scheme;
  std::optional<double> kraus_cutoff, cp_tol;
  double tol = kDefaultTol;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 1;
  bool emit_outputs = false;
  double max_condition = kMaxCondition;
  bool pseudo_inverse = false;
  double rcond = 1e-10;
  std::size_t p = 0, q = 0, r = 0, s = 0, d = 0;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const char* representation_name(Representation r) {
  switch (r) {
    case Representation::Kraus:
      return "kraus";
    case Representation::Choi:
      return "choi";
    case Representation::Superop:
      return "superop";
  }
  return "";
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json report_json(const VerificationReport& rep) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["type"] = "verification_report";
  j["cp"] = rep.cp.cp;
  j["tp"] = rep.tp;
  j["unital"] = rep.unital;
  j["lambda_min"] = finite_or_null(rep.cp.min_eigenvalue);
  j["cp_tolerance"] = rep.cp.tolerance;
  j["trace_choi"] = Json::array({rep.choi_trace.real(), rep.choi_trace.imag()});
  j["tp_error"] = rep.tp_error;
  j["unital_error"] = rep.unital_error;
  j["hermiticity_error"] = rep.hermiticity_error;
  j["choi_rank"] = rep.choi_rank;
  j["choi_condition"] = finite_or_null(rep.choi_condition);
  return j;
}

ChannelSpec read_channel(const Options& o, std::istream& in) {
  return parse_channel_document(parse_json(read_text(o.in, in)));
}

int cmd_convert(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto c = read_channel(o, in);
  if (!o.from.empty() && o.from != representation_name(c.representation()))
    throw UsageError("--from " + o.from + " but the document is of type '" +
                     representation_name(c.representation()) + "'");
  std::optional<ChannelSpec> result;
  if (o.to == "kraus") {
    if (c.kraus()) {
      result = c;
    } else {
      const auto choi = to_choi(c);
      const auto eig = choi_eigenvalues(choi);
      err << "lambda_min: " << fmt(*std::min_element(eig.begin(), eig.end())) << "\n";
      result = choi_to_kraus(choi, o.kraus_cutoff);
    }
  } else if (o.to == "choi") {
    result = to_choi(c);
  } else {
    result = to_superop(c);
  }
  write_text(o.out, out, dump_json(channel_document(*result)));
  return kExitOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const auto rep = verify_channel(read_channel(o, in), o.cp_tol, o.tol);
  write_text(o.out, out, dump_json(report_json(rep)));
  return rep.cp.cp && rep.tp ? kExitOk : kExitVerificationFailed;
}

int cmd_simulate(const Options& o, std::istream& in, std::ostream& out) {
  const Json doc = parse_json(read_text(o.in, in));
  TomographyRun base;
  std::optional<ChannelSpec> channel;
  if (document_type(doc) == "tomography_run") {
    base = parse_run_document(doc);
    if (!base.channel) throw DocumentError("simulate needs a 'channel' in the run document");
    channel = base.channel;
    if (!o.scheme.empty() && o.scheme != base.scheme)
      throw UsageError("--scheme " + o.scheme + " but the run document is '" + base.scheme + "'");
  } else {
    channel = parse_channel_document(doc);
  }
  const std::string scheme = !o.scheme.empty() ? o.scheme : base.scheme.empty() ? "spt" : base.scheme;
  if (scheme != "spt" && o.shots) throw UsageError("--shots applies to the spt scheme only");
  if (scheme != "spt" && o.emit_outputs) throw UsageError("--outputs applies to the spt scheme only");
  if (o.shots && o.emit_outputs) throw UsageError("--shots and --outputs are exclusive");
  if (o.shots && *o.shots == 0) throw UsageError("--shots must be positive");

  const std::size_t d = channel->dim();
  TomographyRun run;
  run.scheme = scheme;
  run.dim = d;
  run.channel = channel;
  if (scheme == "spt") {
    run.inputs = base.inputs.empty() ? presets::standard_inputs(d).states() : base.inputs;
    const auto set = TomographySet::from_states(d, run.inputs);
    if (o.emit_outputs) {
      std::vector<ComplexMatrix> outputs;
      for (const auto& rho : set.states()) outputs.push_back(apply_channel(*channel, rho));
      run.outputs = std::move(outputs);
    } else {
      run.povm = base.povm ? *base.povm : presets::ic_povm(d).outcomes();
      const auto meas = MeasurementSet::from_povm(d, *run.povm);
      run.probabilities = simulate_probs(*channel, set, meas, o.shots, o.seed);
    }
  } else if (scheme == "aapt") {
    if (base.joint_in) {
      run.joint_in = base.joint_in;
    } else {
      random::Engine rng(o.seed);
      const auto psi = random::pure_state(d * d, rng);
      run.joint_in.emplace(d, d, outer(psi, psi));
    }
    const auto& tau = *run.joint_in;
    run.joint_out.emplace(tau.d1(), tau.d2(),
                          apply_superop(joint_superop(to_superop(*channel), tau.d2()), tau.matrix()));
  } else {
    run.joint_out.emplace(d, d, jamiolkowski_state(*channel));
  }
  write_text(o.out, out, dump_json(run_document(run)));
  return kExitOk;
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto run = parse_run_document(parse_json(read_text(o.in, in)));
  if (!o.scheme.empty() && o.scheme != run.scheme)
    throw UsageError("--scheme " + o.scheme + " but the run document is '" + run.scheme + "'");
  check_reconstruction_fields(run);

  InversionOptions opts;
  opts.max_condition = o.max_condition;
  opts.pseudo_inverse = o.pseudo_inverse;
  opts.pinv_rcond = o.rcond;
  std::optional<Superoperator> phi;
  if (run.scheme == "spt") {
    const auto set = TomographySet::from_states(run.dim, run.inputs);
    if (run.outputs) {
      phi = spt_from_outputs(set, *run.outputs, opts);
    } else {
      const auto meas = MeasurementSet::from_povm(run.dim, *run.povm);
      phi = spt_from_probs(meas, *run.probabilities, dual_basis(set, opts), opts);
    }
  } else if (run.scheme == "aapt") {
    phi = aapt_reconstruct(*run.joint_in, *run.joint_out, opts);
  } else {
    phi = eapt_reconstruct(*run.joint_out);
  }

  Json report = report_json(verify_channel(*phi, o.cp_tol, o.tol));
  report["scheme"] = run.scheme;
  if (run.channel) report["distance_to_channel"] = channel_distance(*phi, *run.channel);
  write_text(o.out, out, dump_json(channel_document(*phi)));
  if (o.report.empty())
    err << dump_json(report);
  else
    write_text(o.report, out, dump_json(report));
  return kExitOk;
}

CLI::Option* add_in(CLI::App* cmd, Options& o) {
  return cmd->add_option("--in", o.in, "Input document, '-' for stdin")->capture_default_str();
}

CLI::Option* add_out(CLI::App* cmd, Options& o) {
  return cmd->add_option("--out", o.out, "Output document, '-' for stdout")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Quantum channel representations and process tomography", "vecq"};
  app.require_subcommand(1);
  const std::vector<std::string> reps{"kraus", "choi", "superop"};
  const std::vector<std::string> schemes{"spt", "aapt", "eapt"};

  auto* convert = app.add_subcommand("convert", "Convert a channel between Kraus, Choi and superoperator form");
  convert->add_option("--from", o.from, "Expected input representation")->check(CLI::IsMember(reps));
  convert->add_option("--to", o.to, "Target representation")->required()->check(CLI::IsMember(reps));
  add_in(convert, o);
  add_out(convert, o);
  convert->add_option("--tol", o.kraus_cutoff,
                      "Eigenvalue cutoff for Kraus extraction (default 1e-12 * tr Choi)");

  auto* verify = app.add_subcommand("verify", "Report complete positivity, trace preservation and unitality");
  add_in(verify, o);
  add_out(verify, o);
  verify->add_option("--tol", o.tol, "Tolerance for the TP and unital checks")->capture_default_str();
  verify->add_option("--cp-tol", o.cp_tol, "Tolerance on lambda_min (default 1e-10 * |tr Choi|)");

  auto* tomo = app.add_subcommand("tomo", "Simulate or reconstruct process tomography");
  tomo->require_subcommand(1);
  auto* simulate = tomo->add_subcommand("simulate", "Generate tomography data for a channel");
  simulate->add_option("--scheme", o.scheme, "spt, aapt or eapt (default spt)")->check(CLI::IsMember(schemes));
  add_in(simulate, o);
  add_out(simulate, o);
  simulate->add_option("--shots", o.shots, "Sample this many shots per input (spt)");
  simulate->add_option("--seed", o.seed, "Seed for sampling and random ancilla states")->capture_default_str();
  simulate->add_flag("--outputs", o.emit_outputs, "Record output states instead of an outcome table (spt)");
  auto* reconstruct = tomo->add_subcommand("reconstruct", "Reconstruct the superoperator from a run document");
  reconstruct->add_option("--scheme", o.scheme, "Expected scheme")->check(CLI::IsMember(schemes));
  add_in(reconstruct, o);
  add_out(reconstruct, o);
  reconstruct->add_option("--report", o.report, "Write the verification report here (default stderr)");
  reconstruct->add_option("--max-condition", o.max_condition, "Largest acceptable condition number")
      ->capture_default_str();
  reconstruct->add_flag("--pinv", o.pseudo_inverse, "Use a pseudo-inverse instead of failing on ill-conditioned data");
  reconstruct->add_option("--rcond", o.rcond, "Relative singular-value cutoff for --pinv")->capture_default_str();
  reconstruct->add_option("--tol", o.tol, "Tolerance for the TP and unital checks")->capture_default_str();
  reconstruct->add_option("--cp-tol", o.cp_tol, "Tolerance on lambda_min");

  auto* dump = app.add_subcommand("dump", "Write a permutation matrix or the maximally entangled state");
  dump->require_subcommand(1);
  auto* swap = dump->add_subcommand("swap", "SWAP matrix S(r, p)");
  swap->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  swap->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
  add_out(swap, o);
  auto* reshuffle = dump->add_subcommand("reshuffle", "Reshuffling matrix for p x q and r x s factors");
  for (auto [name, field] : {std::pair{"--p", &o.p}, {"--q", &o.q}, {"--r", &o.r}, {"--s", &o.s}})
    reshuffle->add_option(name, *field)->required()->check(CLI::PositiveNumber);
  add_out(reshuffle, o);
  auto* bell = dump->add_subcommand("bell", "Maximally entangled state on C^d (x) C^d");
  bell->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
  add_out(bell, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (convert->parsed()) return cmd_convert(o, in, out, err);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (simulate->parsed()) return cmd_simulate(o, in, out);
    if (reconstruct->parsed()) return cmd_reconstruct(o, in, out, err);
    if (swap->parsed()) {
      write_text(o.out, out, dump_json(matrix_document(swap_spec(o.r, o.p).perm.matrix())));
    } else if (reshuffle->parsed()) {
      write_text(o.out, out, dump_json(matrix_document(reshuffle_spec(o.p, o.q, o.r, o.s).perm.matrix())));
    } else {
      write_text(o.out, out, dump_json(joint_state_document(maximally_entangled_state(o.d))));
    }
    return kExitOk;
  } catch (const NotCompletelyPositive& e) {
    err << "error: " << e.what() << " (lambda_min = " << fmt(e.min_eigenvalue()) << ")\n";
    return kExitNotCp;
  } catch (const IllConditioned& e) {
    err << "error: " << e.what() << " (condition number = " << fmt(e.condition_number()) << ")\n";
    return kExitIllConditioned;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}

}  // namespace vecq::cli
