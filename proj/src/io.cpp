// Copyright 2026 The clockham Authors
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

#include "clockham/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clockham/errors.hpp"

namespace clockham {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text, const std::string& what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError(what + ": not valid JSON");
  }
  return doc;
}

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(where + ": unknown field '" + it.key() + "'");
    }
  }
}

int require_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  if (!obj[key].is_number_integer()) {
    throw ParseError(where + ": field '" + key + "' must be an integer");
  }
  return obj[key].get<int>();
}

std::complex<double> parse_complex_pair(const json& entry, const std::string& where) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw ParseError(where + ": entries must be [re, im] number pairs");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

Gate parse_gate(const json& entry, std::size_t position) {
  const std::string where = "gate " + std::to_string(position + 1);
  if (!entry.is_object()) {
    throw ParseError(where + ": must be an object");
  }
  if (!entry.contains("targets") || !entry["targets"].is_array()) {
    throw ParseError(where + ": missing 'targets' array");
  }
  std::vector<int> targets;
  for (const json& t : entry["targets"]) {
    if (!t.is_number_integer()) {
      throw ParseError(where + ": targets must be integers");
    }
    targets.push_back(t.get<int>());
  }

  const bool has_name = entry.contains("name");
  const bool has_matrix = entry.contains("matrix");
  if (has_name == has_matrix) {
    throw ParseError(where + ": needs exactly one of 'name' or 'matrix'");
  }

  try {
    if (has_name) {
      reject_unknown_fields(entry, {"name", "targets"}, where);
      const std::string name = entry["name"].get<std::string>();
      if (name == "I" && targets.size() == 1) {
        return Gate::identity(targets[0]);
      }
      if (name == "X" && targets.size() == 1) {
        return Gate::pauli_x(targets[0]);
      }
      if (name == "H" && targets.size() == 1) {
        return Gate::hadamard(targets[0]);
      }
      if (name == "CNOT" && targets.size() == 2) {
        return Gate::cnot(targets[0], targets[1]);
      }
      if (name == "TOFFOLI" && targets.size() == 3) {
        return Gate::toffoli(targets[0], targets[1], targets[2]);
      }
      if (name == "I" || name == "X" || name == "H" || name == "CNOT" || name == "TOFFOLI") {
        throw ParseError("wrong target count for gate '" + name + "'");
      }
      throw ParseError("unknown gate name '" + name + "'");
    }

    reject_unknown_fields(entry, {"matrix", "targets"}, where);
    const json& mat = entry["matrix"];
    if (!mat.is_array()) {
      throw ParseError("'matrix' must be an array of [re, im] pairs");
    }
    const std::int64_t dim = std::int64_t{1} << targets.size();
    if (static_cast<std::int64_t>(mat.size()) != dim * dim) {
      throw ParseError("'matrix' must list " + std::to_string(dim * dim) +
                       " row-major entries for " + std::to_string(targets.size()) + " targets");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (std::int64_t i = 0; i < dim * dim; ++i) {
      m(i / dim, i % dim) = parse_complex_pair(mat[static_cast<std::size_t>(i)], "'matrix'");
    }
    return Gate::custom(std::move(m), std::move(targets));
  } catch (const ParseError& e) {
    const std::string message = e.what();
    if (message.rfind(where, 0) == 0) {
      throw;
    }
    throw ParseError(where + ": " + message);
  }
}

}  // namespace

Circuit parse_circuit_text(const std::string& text) {
  const json doc = parse_json(text, "circuit");
  if (!doc.is_object()) {
    throw ParseError("circuit: top level must be an object");
  }
  reject_unknown_fields(doc, {"qubits", "input_bits", "gates"}, "circuit");
  const int qubits = require_int(doc, "qubits", "circuit");
  const int input_bits = require_int(doc, "input_bits", "circuit");
  if (!doc.contains("gates") || !doc["gates"].is_array()) {
    throw ParseError("circuit: missing 'gates' array");
  }
  std::vector<Gate> gates;
  gates.reserve(doc["gates"].size());
  for (std::size_t i = 0; i < doc["gates"].size(); ++i) {
    gates.push_back(parse_gate(doc["gates"][i], i));
  }
  return Circuit(qubits, input_bits, std::move(gates));
}

Circuit parse_circuit_file(const std::string& path) {
  return parse_circuit_text(read_file(path));
}

TruthTable parse_truth_table_text(const std::string& text) {
  const json doc = parse_json(text, "table");
  if (!doc.is_object()) {
    throw ParseError("table: top level must be an object");
  }
  reject_unknown_fields(doc, {"arity", "values"}, "table");
  const int arity = require_int(doc, "arity", "table");
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw ParseError("table: missing 'values' array");
  }
  std::vector<std::uint8_t> values;
  for (const json& v : doc["values"]) {
    if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
      throw ParseError("table: values must be 0 or 1");
    }
    values.push_back(static_cast<std::uint8_t>(v.get<int>()));
  }
  return TruthTable(arity, std::move(values));
}

TruthTable parse_truth_table_file(const std::string& path) {
  return parse_truth_table_text(read_file(path));
}

ClockedState parse_state_text(const std::string& text, std::int64_t expected_dimension) {
  const json doc = parse_json(text, "state");
  if (!doc.is_array()) {
    throw ParseError("state: top level must be an array of [re, im] pairs");
  }
  if (static_cast<std::int64_t>(doc.size()) != expected_dimension) {
    throw ParseError("state: has " + std::to_string(doc.size()) + " amplitudes, instance expects " +
                     std::to_string(expected_dimension));
  }
  ClockedState psi(expected_dimension);
  for (std::int64_t i = 0; i < expected_dimension; ++i) {
    psi(i) = parse_complex_pair(doc[static_cast<std::size_t>(i)], "state");
  }
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw ParseError("state: norm " + std::to_string(norm) + " is not 1");
  }
  psi /= norm;
  return psi;
}

ClockedState parse_state_file(const std::string& path, std::int64_t expected_dimension) {
  return parse_state_text(read_file(path), expected_dimension);
}

}  // namespace clockham
