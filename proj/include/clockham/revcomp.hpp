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

#include <optional>
#include <string>
#include <vector>

#include "clockham/circuit.hpp"
#include "clockham/hamiltonian.hpp"
#include "clockham/spectral.hpp"

namespace clockham {

inline constexpr int kMaxTableArity = 4;

struct TruthTable {
  int arity = 0;
  std::vector<std::uint8_t> values;  // 2^arity entries of 0/1, input bit 1 is the MSB

  TruthTable(int arity_in, std::vector<std::uint8_t> values_in);

  bool value(const std::string& input_bits) const;
  bool value(int row) const { return values[static_cast<std::size_t>(row)] != 0; }
  int rows() const { return 1 << arity; }
  std::string input_of_row(int row) const;
};

/// Wire roles of a compiled circuit. Inputs arrive on wires 1..m; the first
/// input bit is immediately moved to its live wire because wire 1 doubles as
/// the output wire the final measurement reads. live_input_wires[i] is where
/// input bit i+1 sits from then on. Work wires start at |0> and are returned
/// to |0>.
struct WireLayout {
  int output_wire = 1;
  std::vector<int> live_input_wires;
  int scratch_wire = 0;
  std::vector<int> borrow_wires;
  std::string note;
};

struct ReversibleCircuit {
  Circuit circuit;
  WireLayout layout;
};

/// Compiles a truth table into an X/CNOT/TOFFOLI circuit that accepts with
/// probability exactly f(x): minterm flips accumulate f on a scratch wire,
/// one CNOT copies it to the output wire, and the mirrored flips restore the
/// scratch. Tables with more than 2^(m-1) minterms are compiled through
/// their complement plus a final X so the step count stays small.
ReversibleCircuit compile_truth_table(const TruthTable& table);

struct ReversibilityReport {
  bool is_permutation = false;
  std::optional<std::string> witness;  // basis state mapped to a superposition
};

/// Checks that the circuit permutes computational basis states: every basis
/// input maps to a single basis output, injectively.
ReversibilityReport verify_reversibility(const Circuit& circuit);

struct EndToEndInstance {
  ReversibleCircuit compiled;
  CircuitHamiltonian hamiltonian;
  SpectralReport report;
};

/// Compile, build the penalty operator with ancilla checks on, and certify
/// the gap; the verdict is completeness-like exactly when f(x) = 1.
EndToEndInstance end_to_end_instance(const TruthTable& table, const std::string& input_bits,
                                     const GapOptions& opts = {});

}  // namespace clockham
