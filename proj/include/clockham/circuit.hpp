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

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace clockham {

/// Basis-index convention used throughout: qubit 1 is the most significant
/// bit of the basis index, so |x1 x2 ... xS> maps to index
/// sum_i x_i * 2^(S-i). For a multi-target gate, targets[0] is the most
/// significant local bit; CNOT lists (control, target), TOFFOLI lists
/// (control, control, target).

enum class GateKind { Identity, PauliX, Hadamard, Cnot, Toffoli, Custom };

/// Tolerance for the unitarity check on explicit matrices, applied when a
/// gate is built or parsed. Chosen well above simulation round-off so it
/// flags bad input rather than accumulated drift.
inline constexpr double kUnitarityTol = 1e-10;

struct Gate {
  GateKind kind = GateKind::Identity;
  std::vector<int> targets;   // 1-based, distinct
  Eigen::MatrixXcd matrix;    // only populated for Custom

  static Gate identity(int q);
  static Gate pauli_x(int q);
  static Gate hadamard(int q);
  static Gate cnot(int control, int target);
  static Gate toffoli(int control_a, int control_b, int target);

  /// Explicit-matrix gate; throws ParseError if the matrix is not square
  /// with dimension 2^k for k = targets.size(), or not unitary within
  /// kUnitarityTol.
  static Gate custom(Eigen::MatrixXcd m, std::vector<int> targets);

  int arity() const { return static_cast<int>(targets.size()); }

  /// The 2^k x 2^k matrix of this gate in its local basis.
  Eigen::MatrixXcd local_matrix() const;

  Gate adjoint() const;

  std::string name() const;
};

struct Circuit {
  int num_qubits = 0;       // S
  int num_input_bits = 0;   // n, 1 <= n <= S
  std::vector<Gate> gates;  // U_1 ... U_T, T >= 1

  /// Validates qubit counts and every gate's targets; throws ParseError on
  /// violation.
  Circuit(int qubits, int input_bits, std::vector<Gate> gate_list);

  int num_steps() const { return static_cast<int>(gates.size()); }
  std::int64_t dimension() const { return std::int64_t{1} << num_qubits; }
};

/// Unit vector of 2^S complex amplitudes.
using DataState = Eigen::VectorXcd;

/// Applies one gate to a state over num_qubits qubits. Out-of-place; norm
/// is preserved to machine precision.
DataState apply_gate(const DataState& state, const Gate& gate, int num_qubits);

/// |x> tensor |0...0> for the circuit's qubit count; input_bits must have
/// length num_input_bits and consist of '0'/'1'.
DataState start_state(const Circuit& circuit, const std::string& input_bits);

/// The state after the first `step` gates (step = 0 gives the start state).
DataState prefix_state(const Circuit& circuit, const std::string& input_bits, int step);

/// Probability that qubit 1 reads |1> after the full circuit.
double acceptance_probability(const Circuit& circuit, const std::string& input_bits);

/// Dense 2^S x 2^S matrix of a gate embedded in the full register. Built by
/// direct index arithmetic, independently of apply_gate, so the two can
/// cross-check each other.
Eigen::MatrixXcd dense_gate_matrix(const Gate& gate, int num_qubits);

/// Basis index of a bitstring under the qubit-1-is-MSB convention, padding
/// unspecified trailing qubits with 0.
std::int64_t basis_index(const std::string& bits, int num_qubits);

}  // namespace clockham
