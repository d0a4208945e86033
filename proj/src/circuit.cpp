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

#include "clockham/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "clockham/errors.hpp"

namespace clockham {

namespace {

void check_targets(const std::vector<int>& targets, std::size_t expected) {
  if (targets.size() != expected) {
    throw ParseError("gate expects " + std::to_string(expected) + " targets, got " +
                     std::to_string(targets.size()));
  }
  for (int q : targets) {
    if (q < 1) {
      throw ParseError("target index must be >= 1");
    }
  }
  std::set<int> unique(targets.begin(), targets.end());
  if (unique.size() != targets.size()) {
    throw ParseError("gate targets must be distinct");
  }
}

}  // namespace

Gate Gate::identity(int q) {
  Gate g;
  g.kind = GateKind::Identity;
  g.targets = {q};
  check_targets(g.targets, 1);
  return g;
}

Gate Gate::pauli_x(int q) {
  Gate g;
  g.kind = GateKind::PauliX;
  g.targets = {q};
  check_targets(g.targets, 1);
  return g;
}

Gate Gate::hadamard(int q) {
  Gate g;
  g.kind = GateKind::Hadamard;
  g.targets = {q};
  check_targets(g.targets, 1);
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = GateKind::Cnot;
  g.targets = {control, target};
  check_targets(g.targets, 2);
  return g;
}

Gate Gate::toffoli(int control_a, int control_b, int target) {
  Gate g;
  g.kind = GateKind::Toffoli;
  g.targets = {control_a, control_b, target};
  check_targets(g.targets, 3);
  return g;
}

Gate Gate::custom(Eigen::MatrixXcd m, std::vector<int> targets) {
  if (targets.empty() || targets.size() > 3) {
    throw ParseError("explicit-matrix gates act on 1 to 3 targets");
  }
  check_targets(targets, targets.size());
  const std::int64_t dim = std::int64_t{1} << targets.size();
  if (m.rows() != dim || m.cols() != dim) {
    throw ParseError("explicit matrix must be " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " for " + std::to_string(targets.size()) +
                     " targets");
  }
  const double defect =
      (m.adjoint() * m - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > kUnitarityTol) {
    throw ParseError("explicit matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
  Gate g;
  g.kind = GateKind::Custom;
  g.targets = std::move(targets);
  g.matrix = std::move(m);
  return g;
}

Eigen::MatrixXcd Gate::local_matrix() const {
  using cd = std::complex<double>;
  switch (kind) {
    case GateKind::Identity:
      return Eigen::MatrixXcd::Identity(2, 2);
    case GateKind::PauliX: {
      Eigen::MatrixXcd m(2, 2);
      m << cd(0), cd(1), cd(1), cd(0);
      return m;
    }
    case GateKind::Hadamard: {
      const double s = 1.0 / std::sqrt(2.0);
      Eigen::MatrixXcd m(2, 2);
      m << cd(s), cd(s), cd(s), cd(-s);
      return m;
    }
    case GateKind::Cnot: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    }
    case GateKind::Toffoli: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
      m(6, 6) = 0;
      m(7, 7) = 0;
      m(6, 7) = 1;
      m(7, 6) = 1;
      return m;
    }
    case GateKind::Custom:
      return matrix;
  }
  throw std::logic_error("unreachable gate kind");
}

Gate Gate::adjoint() const {
  // The named gates are all self-adjoint real matrices.
  if (kind != GateKind::Custom) {
    return *this;
  }
  Gate g = *this;
  g.matrix = matrix.adjoint();
  return g;
}

std::string Gate::name() const {
  switch (kind) {
    case GateKind::Identity:
      return "I";
    case GateKind::PauliX:
      return "X";
    case GateKind::Hadamard:
      return "H";
    case GateKind::Cnot:
      return "CNOT";
    case GateKind::Toffoli:
      return "TOFFOLI";
    case GateKind::Custom:
      return "custom";
  }
  return "?";
}

Circuit::Circuit(int qubits, int input_bits, std::vector<Gate> gate_list)
    : num_qubits(qubits), num_input_bits(input_bits), gates(std::move(gate_list)) {
  if (num_qubits < 1) {
    throw ParseError("circuit needs at least one qubit");
  }
  if (num_input_bits < 1 || num_input_bits > num_qubits) {
    throw ParseError("input_bits must be in [1, qubits]");
  }
  if (gates.empty()) {
    throw ParseError("circuit needs at least one gate");
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    for (int q : gates[i].targets) {
      if (q < 1 || q > num_qubits) {
        throw ParseError("gate " + std::to_string(i + 1) + ": target " + std::to_string(q) +
                         " outside [1, " + std::to_string(num_qubits) + "]");
      }
    }
  }
}

std::int64_t basis_index(const std::string& bits, int num_qubits) {
  if (static_cast<int>(bits.size()) > num_qubits) {
    throw ParseError("bitstring longer than register");
  }
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw ParseError("bitstring may only contain 0 and 1");
    }
    if (c == '1') {
      idx |= std::int64_t{1} << (num_qubits - 1 - static_cast<int>(i));
    }
  }
  return idx;
}

DataState apply_gate(const DataState& state, const Gate& gate, int num_qubits) {
  const std::int64_t dim = std::int64_t{1} << num_qubits;
  if (state.size() != dim) {
    throw ParseError("state dimension does not match qubit count");
  }
  for (int q : gate.targets) {
    if (q < 1 || q > num_qubits) {
      throw ParseError("gate target " + std::to_string(q) + " outside register");
    }
  }

  const int k = gate.arity();
  const int local_dim = 1 << k;
  const Eigen::MatrixXcd m = gate.local_matrix();

  // Bit position of each target (targets[0] is the local MSB).
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) {
    pos[i] = num_qubits - gate.targets[i];
  }
  std::int64_t target_mask = 0;
  for (int p : pos) {
    target_mask |= std::int64_t{1} << p;
  }
  // Global offset contributed by each local basis pattern.
  std::vector<std::int64_t> offset(local_dim, 0);
  for (int l = 0; l < local_dim; ++l) {
    for (int i = 0; i < k; ++i) {
      if (l & (1 << (k - 1 - i))) {
        offset[l] |= std::int64_t{1} << pos[i];
      }
    }
  }

  DataState out(dim);
  Eigen::VectorXcd in_block(local_dim);
  for (std::int64_t base = 0; base < dim; ++base) {
    if (base & target_mask) {
      continue;  // enumerate indices with all target bits clear
    }
    for (int l = 0; l < local_dim; ++l) {
      in_block(l) = state(base | offset[l]);
    }
    const Eigen::VectorXcd out_block = m * in_block;
    for (int l = 0; l < local_dim; ++l) {
      out(base | offset[l]) = out_block(l);
    }
  }
  return out;
}

DataState start_state(const Circuit& circuit, const std::string& input_bits) {
  if (static_cast<int>(input_bits.size()) != circuit.num_input_bits) {
    throw ParseError("input has " + std::to_string(input_bits.size()) + " bits, circuit expects " +
                     std::to_string(circuit.num_input_bits));
  }
  DataState state = DataState::Zero(circuit.dimension());
  state(basis_index(input_bits, circuit.num_qubits)) = 1.0;
  return state;
}

DataState prefix_state(const Circuit& circuit, const std::string& input_bits, int step) {
  if (step < 0 || step > circuit.num_steps()) {
    throw ParseError("step " + std::to_string(step) + " outside [0, " +
                     std::to_string(circuit.num_steps()) + "]");
  }
  DataState state = start_state(circuit, input_bits);
  for (int t = 0; t < step; ++t) {
    state = apply_gate(state, circuit.gates[t], circuit.num_qubits);
  }
  return state;
}

double acceptance_probability(const Circuit& circuit, const std::string& input_bits) {
  const DataState final_state = prefix_state(circuit, input_bits, circuit.num_steps());
  const std::int64_t msb = std::int64_t{1} << (circuit.num_qubits - 1);
  double p = 0.0;
  for (std::int64_t i = 0; i < final_state.size(); ++i) {
    if (i & msb) {
      p += std::norm(final_state(i));
    }
  }
  return p;
}

Eigen::MatrixXcd dense_gate_matrix(const Gate& gate, int num_qubits) {
  const std::int64_t dim = std::int64_t{1} << num_qubits;
  const int k = gate.arity();
  const Eigen::MatrixXcd m = gate.local_matrix();

  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) {
    pos[i] = num_qubits - gate.targets[i];
  }
  std::int64_t target_mask = 0;
  for (int p : pos) {
    target_mask |= std::int64_t{1} << p;
  }
  auto local_of = [&](std::int64_t idx) {
    int l = 0;
    for (int i = 0; i < k; ++i) {
      if (idx & (std::int64_t{1} << pos[i])) {
        l |= 1 << (k - 1 - i);
      }
    }
    return l;
  };

  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) {
      if ((r & ~target_mask) == (c & ~target_mask)) {
        full(r, c) = m(local_of(r), local_of(c));
      }
    }
  }
  return full;
}

}  // namespace clockham
