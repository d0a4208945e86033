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

#pragma once

#include <string>

#include "clockham/circuit.hpp"
#include "clockham/hamiltonian.hpp"
#include "clockham/revcomp.hpp"

namespace clockham {

/// Circuit files are JSON objects with fields `qubits`, `input_bits` and
/// `gates`; each gate carries `targets` (1-based) and either `name` (one of
/// I, X, H, CNOT, TOFFOLI) or `matrix` (row-major [re, im] pairs). Parsing
/// is strict: unknown fields are rejected, diagnostics name the first
/// offending field.
Circuit parse_circuit_file(const std::string& path);
Circuit parse_circuit_text(const std::string& text);

/// Truth-table files carry `arity` and `values` (array of 0/1 of length
/// 2^arity).
TruthTable parse_truth_table_file(const std::string& path);
TruthTable parse_truth_table_text(const std::string& text);

/// Proof state files are a JSON array of [re, im] amplitude pairs. The
/// length must match expected_dimension exactly and the norm must be within
/// 1e-6 of 1; the returned vector is renormalized.
ClockedState parse_state_file(const std::string& path, std::int64_t expected_dimension);
ClockedState parse_state_text(const std::string& text, std::int64_t expected_dimension);

}  // namespace clockham
