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

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vecq/channels.hpp"
#include "vecq/matrix.hpp"
#include "vecq/tomography.hpp"

namespace vecq::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

/** Malformed JSON or a document violating its schema. */
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json(std::string_view text);

/**
 * Serializes with every floating-point number printed to 17 significant
 * digits, so parsing the text back yields bit-identical doubles. Arrays of
 * scalars (or of scalar pairs) are kept on one line.
 */
std::string dump_json(const Json& j);

/** Rows of [re, im] pairs. */
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, std::string_view what);

Json channel_document(const ChannelSpec& c);
ChannelSpec parse_channel_document(const Json& j);

/** A bare matrix, as written by `dump swap` and `dump reshuffle`. */
Json matrix_document(const ComplexMatrix& m);
ComplexMatrix parse_matrix_document(const Json& j);

Json joint_state_document(const JointState& tau);
JointState parse_joint_state_document(const Json& j);

/** Data for one tomography experiment; which fields are set depends on the scheme. */
struct TomographyRun {
  std::string scheme;
  std::size_t dim = 0;
  std::vector<ComplexMatrix> inputs;
  std::optional<std::vector<ComplexMatrix>> povm;
  std::optional<ProbabilityMatrix> probabilities;
  std::optional<std::vector<ComplexMatrix>> outputs;
  std::optional<JointState> joint_in;
  std::optional<JointState> joint_out;
  /** Channel that generated the data, if known. */
  std::optional<ChannelSpec> channel;
};

Json run_document(const TomographyRun& run);
TomographyRun parse_run_document(const Json& j);

/**
 * Throws DocumentError unless exactly the fields of one reconstruction path
 * are present: spt with povm + probabilities, spt with outputs, aapt with
 * joint_in + joint_out, or eapt with joint_out alone.
 */
void check_reconstruction_fields(const TomographyRun& run);

/** Type tag of a parsed document after checking format_version. */
std::string document_type(const Json& j);

/** Whole contents of `path`, or of `in` when path is "-". */
std::string read_text(const std::string& path, std::istream& in);
void write_text(const std::string& path, std::ostream& out, const std::string& text);

}  // namespace vecq::cli
