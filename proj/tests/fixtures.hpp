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

#include <cmath>

#include "clockham/circuit.hpp"
#include "clockham/revcomp.hpp"

namespace fixtures {

// One-qubit, one-step circuits used throughout the suites.
inline clockham::Circuit circ_x() {
  return clockham::Circuit(1, 1, {clockham::Gate::pauli_x(1)});
}

inline clockham::Circuit circ_id() {
  return clockham::Circuit(1, 1, {clockham::Gate::identity(1)});
}

inline clockham::Circuit circ_h() {
  return clockham::Circuit(1, 1, {clockham::Gate::hadamard(1)});
}

inline clockham::Circuit circ_hh() {
  return clockham::Circuit(1, 1, {clockham::Gate::hadamard(1), clockham::Gate::hadamard(1)});
}

// Compiled three-input AND; 6 qubits, 9 steps.
inline clockham::ReversibleCircuit circ_rev3() {
  return clockham::compile_truth_table(
      clockham::TruthTable(3, {0, 0, 0, 0, 0, 0, 0, 1}));
}

// Rotation by almost a quarter turn: accepts |0> with probability 1 - 1e-4,
// which lands the ground energy inside the forbidden middle zone of the
// promise gap.
inline clockham::Circuit circ_near_flip() {
  const double c = 0.01;
  const double s = std::sqrt(1.0 - c * c);
  Eigen::MatrixXcd m(2, 2);
  m << c, -s, s, c;
  return clockham::Circuit(1, 1, {clockham::Gate::custom(m, {1})});
}

inline clockham::TruthTable table_not1() { return clockham::TruthTable(1, {1, 0}); }
inline clockham::TruthTable table_identity1() { return clockham::TruthTable(1, {0, 1}); }
inline clockham::TruthTable table_and2() { return clockham::TruthTable(2, {0, 0, 0, 1}); }
inline clockham::TruthTable table_or3() {
  return clockham::TruthTable(3, {0, 1, 1, 1, 1, 1, 1, 1});
}
inline clockham::TruthTable table_and3() {
  return clockham::TruthTable(3, {0, 0, 0, 0, 0, 0, 0, 1});
}
inline clockham::TruthTable table_maj3() {
  return clockham::TruthTable(3, {0, 0, 0, 1, 0, 1, 1, 1});
}
inline clockham::TruthTable table_xor3() {
  return clockham::TruthTable(3, {0, 1, 1, 0, 1, 0, 0, 1});
}

}  // namespace fixtures
