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

#include "vecq/cli/documents.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace vecq::cli {
namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot serialize a non-finite number");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep the value a float on re-parse.
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_compact(const Json& j) {
  for (const auto& e : j) {
    if (is_scalar(e)) continue;
    if (!e.is_array()) return false;
    for (const auto& f : e)
      if (!is_scalar(f)) return false;
  }
  return true;
}

void write(std::ostream& os, const Json& j, int indent);

void write_inline(std::ostream& os, const Json& j) {
  if (!j.is_array()) {
    write(os, j, 0);
    return;
  }
  os << '[';
  bool first = true;
  for (const auto& e : j) {
    if (!first) os << ", ";
    first = false;
    write_inline(os, e);
  }
  os << ']';
}

void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    case Json::value_t::array:
      if (j.empty() || is_compact(j)) {
        write_inline(os, j);
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << pad;
        write(os, j[i], indent + 2);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << std::string(indent, ' ') << ']';
      return;
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {
        os << pad << Json(key).dump() << ": ";
        write(os, value, indent + 2);
        os << (++i < j.size() ? ",\n" : "\n");
      }
      os << std::string(indent, ' ') << '}';
      return;
    }
    default:
      os << j.dump();
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DocumentError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw DocumentError(std::string("field '") + key + "' must be a positive integer");
  return v.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw DocumentError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

double number(const Json& j, std::string_view what) {
  if (!j.is_number()) throw DocumentError("expected a number in " + std::string(what));
  return j.get<double>();
}

Json header(const char* type) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["type"] = type;
  return j;
}

Json matrices_to_json(const std::vector<ComplexMatrix>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(matrix_to_json(m));
  return arr;
}

std::vector<ComplexMatrix> matrices_from_json(const Json& j, std::string_view what) {
  if (!j.is_array() || j.empty())
    throw DocumentError("'" + std::string(what) + "' must be a non-empty list of matrices");
  std::vector<ComplexMatrix> ms;
  for (const auto& e : j) ms.push_back(matrix_from_json(e, what));
  return ms;
}

void require_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols, std::string_view what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DocumentError(std::string(what) + " must be " + std::to_string(rows) + "x" +
                        std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
}

Json joint_body(const JointState& tau) {
  Json j;
  j["d1"] = tau.d1();
  j["d2"] = tau.d2();
  j["matrix"] = matrix_to_json(tau.matrix());
  return j;
}

JointState joint_from_body(const Json& j, std::string_view what) {
  const auto d1 = size_field(j, "d1");
  const auto d2 = size_field(j, "d2");
  auto m = matrix_from_json(field(j, "matrix"), what);
  require_shape(m, d1 * d2, d1 * d2, what);
  try {
    return JointState(d1, d2, std::move(m));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << '\n';
  return os.str();
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < m.rows(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(Json::array({m(a, b).real(), m(a, b).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, std::string_view what) {
  const std::string name(what);
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw DocumentError("'" + name + "' must be a non-empty list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t a = 0; a < rows; ++a) {
    if (!j[a].is_array() || j[a].size() != cols)
      throw DocumentError("'" + name + "' has rows of unequal length");
    for (std::size_t b = 0; b < cols; ++b) {
      const Json& z = j[a][b];
      if (!z.is_array() || z.size() != 2)
        throw DocumentError("'" + name + "' entries must be [re, im] pairs");
      m(a, b) = Complex(number(z[0], name), number(z[1], name));
    }
  }
  return m;
}

std::string document_type(const Json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  const auto version = string_field(j, "format_version");
  if (version != kFormatVersion)
    throw DocumentError("unsupported format_version '" + version + "' (expected '" + kFormatVersion +
                        "')");
  return string_field(j, "type");
}

Json channel_document(const ChannelSpec& c) {
  Json j;
  switch (c.representation()) {
    case Representation::Kraus:
      j = header("kraus");
      j["dim"] = c.dim();
      j["matrices"] = matrices_to_json(c.kraus()->operators());
      break;
    case Representation::Choi:
      j = header("choi");
      j["dim"] = c.dim();
      j["matrices"] = Json::array({matrix_to_json(c.choi()->matrix())});
      break;
    case Representation::Superop:
      j = header("superop");
      j["dim"] = c.dim();
      j["matrices"] = Json::array({matrix_to_json(c.superop()->matrix())});
      break;
  }
  return j;
}

ChannelSpec parse_channel_document(const Json& j) {
  const auto type = document_type(j);
  if (type != "kraus" && type != "choi" && type != "superop")
    throw DocumentError("expected a channel document (kraus, choi or superop), got '" + type + "'");
  const auto d = size_field(j, "dim");
  auto ms = matrices_from_json(field(j, "matrices"), "matrices");
  if (type == "kraus") {
    for (const auto& k : ms) require_shape(k, d, d, "Kraus operator");
    return KrausSet(std::move(ms));
  }
  if (ms.size() != 1) throw DocumentError("'" + type + "' carries exactly one matrix");
  require_shape(ms[0], d * d, d * d, type);
  if (type == "choi") return ChoiMatrix(d, std::move(ms[0]));
  return Superoperator(d, std::move(ms[0]));
}

Json matrix_document(const ComplexMatrix& m) {
  Json j = header("matrix");
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["matrix"] = matrix_to_json(m);
  return j;
}

ComplexMatrix parse_matrix_document(const Json& j) {
  if (document_type(j) != "matrix") throw DocumentError("expected a matrix document");
  auto m = matrix_from_json(field(j, "matrix"), "matrix");
  require_shape(m, size_field(j, "rows"), size_field(j, "cols"), "matrix");
  return m;
}

Json joint_state_document(const JointState& tau) {
  Json j = header("joint_state");
  const Json body = joint_body(tau);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

JointState parse_joint_state_document(const Json& j) {
  if (document_type(j) != "joint_state") throw DocumentError("expected a joint_state document");
  return joint_from_body(j, "joint state");
}

Json run_document(const TomographyRun& run) {
  Json j = header("tomography_run");
  j["scheme"] = run.scheme;
  j["dim"] = run.dim;
  if (!run.inputs.empty()) j["inputs"] = matrices_to_json(run.inputs);
  if (run.povm) j["povm"] = matrices_to_json(*run.povm);
  if (run.probabilities) {
    const auto& m = *run.probabilities;
    Json table = Json::array();
    for (std::size_t mu = 0; mu < m.rows(); ++mu) {
      Json row = Json::array();
      for (std::size_t nu = 0; nu < m.cols(); ++nu) row.push_back(m(mu, nu));
      table.push_back(std::move(row));
    }
    j["probabilities"] = std::move(table);
    if (m.shots()) j["shots"] = *m.shots();
  }
  if (run.outputs) j["outputs"] = matrices_to_json(*run.outputs);
  if (run.joint_in) j["joint_in"] = joint_body(*run.joint_in);
  if (run.joint_out) j["joint_out"] = joint_body(*run.joint_out);
  if (run.channel) j["channel"] = channel_document(*run.channel);
  return j;
}

TomographyRun parse_run_document(const Json& j) {
  if (document_type(j) != "tomography_run") throw DocumentError("expected a tomography_run document");
  TomographyRun run;
  run.scheme = string_field(j, "scheme");
  if (run.scheme != "spt" && run.scheme != "aapt" && run.scheme != "eapt")
    throw DocumentError("unknown scheme '" + run.scheme + "'");
  run.dim = size_field(j, "dim");
  const auto d = run.dim;
  if (j.contains("inputs")) {
    run.inputs = matrices_from_json(j.at("inputs"), "inputs");
    for (const auto& rho : run.inputs) require_shape(rho, d, d, "input state");
  }
  if (j.contains("povm")) {
    run.povm = matrices_from_json(j.at("povm"), "povm");
    for (const auto& m : *run.povm) require_shape(m, d, d, "POVM element");
  }
  if (j.contains("probabilities")) {
    const Json& t = j.at("probabilities");
    if (!t.is_array() || t.empty() || !t[0].is_array() || t[0].empty())
      throw DocumentError("'probabilities' must be a non-empty table");
    const std::size_t rows = t.size(), cols = t[0].size();
    std::vector<double> entries;
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != cols)
        throw DocumentError("'probabilities' has rows of unequal length");
      for (const auto& x : row) entries.push_back(number(x, "probabilities"));
    }
    std::optional<std::uint64_t> shots;
    if (j.contains("shots")) {
      if (!j.at("shots").is_number_unsigned()) throw DocumentError("'shots' must be a positive integer");
      shots = j.at("shots").get<std::uint64_t>();
    }
    run.probabilities.emplace(rows, cols, std::move(entries), shots);
  } else if (j.contains("shots")) {
    throw DocumentError("'shots' given without 'probabilities'");
  }
  if (j.contains("outputs")) {
    run.outputs = matrices_from_json(j.at("outputs"), "outputs");
    for (const auto& rho : *run.outputs) require_shape(rho, d, d, "output state");
  }
  if (j.contains("joint_in")) run.joint_in = joint_from_body(j.at("joint_in"), "joint_in");
  if (j.contains("joint_out")) run.joint_out = joint_from_body(j.at("joint_out"), "joint_out");
  if (run.joint_in && run.joint_in->d1() != d) throw DocumentError("joint_in d1 must equal dim");
  if (run.joint_out && run.joint_out->d1() != d) throw DocumentError("joint_out d1 must equal dim");
  if (j.contains("channel")) {
    run.channel = parse_channel_document(j.at("channel"));
    if (run.channel->dim() != d) throw DocumentError("channel dim must equal dim");
  }
  return run;
}

void check_reconstruction_fields(const TomographyRun& run) {
  const bool has_probs = run.povm.has_value() || run.probabilities.has_value();
  const bool has_outputs = run.outputs.has_value();
  const bool has_spt = has_probs || has_outputs || !run.inputs.empty();
  const bool has_joint = run.joint_in.has_value() || run.joint_out.has_value();
  if (run.scheme == "spt") {
    if (has_joint) throw DocumentError("spt run must not carry joint_in/joint_out");
    if (run.inputs.empty()) throw DocumentError("spt run requires 'inputs'");
    if (has_probs && has_outputs)
      throw DocumentError("spt run carries both povm/probabilities and outputs; keep one");
    if (has_outputs) return;
    if (!run.povm || !run.probabilities)
      throw DocumentError("spt run requires either 'outputs' or both 'povm' and 'probabilities'");
    return;
  }
  if (has_spt) throw DocumentError(run.scheme + " run must not carry inputs/povm/probabilities/outputs");
  if (!run.joint_out) throw DocumentError(run.scheme + " run requires 'joint_out'");
  if (run.scheme == "aapt" && !run.joint_in) throw DocumentError("aapt run requires 'joint_in'");
  if (run.scheme == "eapt" && run.joint_in)
    throw DocumentError("eapt run takes no 'joint_in' (the input is the maximally entangled state)");
}

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path == "-") {
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DocumentError("cannot open '" + path + "'");
  os << file.rdbuf();
  return os.str();
}

void write_text(const std::string& path, std::ostream& out, const std::string& text) {
  if (path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DocumentError("cannot write '" + path + "'");
  file << text;
  if (!file) throw DocumentError("failed writing '" + path + "'");
}

}  // namespace vecq::cli
