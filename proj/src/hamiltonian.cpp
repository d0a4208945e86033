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

#include "clockham/hamiltonian.hpp"

#include <cmath>
#include <complex>

#include "clockham/errors.hpp"

namespace clockham {

namespace {

void check_dimension(const CircuitHamiltonian& h, const ClockedState& psi) {
  if (psi.size() != h.dimension()) {
    throw ParseError("state has dimension " + std::to_string(psi.size()) + ", operator expects " +
                     std::to_string(h.dimension()));
  }
}

// Data-space projector onto qubit q reading bit b, as a diagonal 0/1 matrix.
Eigen::MatrixXcd qubit_projector(int q, int bit, int num_qubits) {
  const std::int64_t dim = std::int64_t{1} << num_qubits;
  const std::int64_t mask = std::int64_t{1} << (num_qubits - q);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    if (((i & mask) != 0) == (bit != 0)) {
      p(i, i) = 1.0;
    }
  }
  return p;
}

}  // namespace

CircuitHamiltonian::CircuitHamiltonian(Circuit circuit, std::string input_bits,
                                       bool include_ancilla_checks)
    : circuit_(std::move(circuit)), input_(std::move(input_bits)),
      ancilla_checks_(include_ancilla_checks) {
  if (static_cast<int>(input_.size()) != circuit_.num_input_bits) {
    throw ParseError("input has " + std::to_string(input_.size()) + " bits, circuit expects " +
                     std::to_string(circuit_.num_input_bits));
  }
  for (char c : input_) {
    if (c != '0' && c != '1') {
      throw ParseError("input may only contain 0 and 1");
    }
  }
  for (int t = 1; t <= circuit_.num_steps(); ++t) {
    terms_.push_back({TermKind::Propagation, t});
  }
  for (int i = 1; i <= circuit_.num_input_bits; ++i) {
    terms_.push_back({TermKind::InputCheck, i});
  }
  if (ancilla_checks_) {
    for (int i = circuit_.num_input_bits + 1; i <= circuit_.num_qubits; ++i) {
      terms_.push_back({TermKind::AncillaCheck, i});
    }
  }
  terms_.push_back({TermKind::OutputCheck, 0});
}

int CircuitHamiltonian::num_input_checks() const {
  return ancilla_checks_ ? circuit_.num_qubits : circuit_.num_input_bits;
}

int CircuitHamiltonian::num_test_slots() const {
  return num_steps() + num_input_checks() + 2;
}

ClockedState apply_term(const CircuitHamiltonian& h, const HamiltonianTerm& term,
                        const ClockedState& psi) {
  check_dimension(h, psi);
  const std::int64_t d = h.data_dimension();
  const int S = h.num_qubits();
  const int T = h.num_steps();
  ClockedState out = ClockedState::Zero(psi.size());

  switch (term.kind) {
    case TermKind::InputCheck:
    case TermKind::AncillaCheck: {
      const int q = term.index;
      // Penalized value: the negation of the input bit, or 1 for ancillas.
      const bool bad_bit = (term.kind == TermKind::InputCheck)
                               ? h.input_bits()[q - 1] == '0'
                               : true;
      const std::int64_t mask = std::int64_t{1} << (S - q);
      for (std::int64_t i = 0; i < d; ++i) {
        if (((i & mask) != 0) == bad_bit) {
          out(i) = psi(i);  // clock block 0
        }
      }
      return out;
    }
    case TermKind::OutputCheck: {
      const std::int64_t msb = std::int64_t{1} << (S - 1);
      const std::int64_t block = static_cast<std::int64_t>(T) * d;
      for (std::int64_t i = 0; i < d; ++i) {
        if ((i & msb) == 0) {
          out(block + i) = psi(block + i);
        }
      }
      return out;
    }
    case TermKind::Propagation: {
      const int t = term.index;
      const Gate& gate = h.circuit().gates[t - 1];
      const Eigen::VectorXcd block_prev = psi.segment((t - 1) * d, d);
      const Eigen::VectorXcd block_curr = psi.segment(t * d, d);
      const Eigen::VectorXcd stepped = apply_gate(block_prev, gate, S);
      const Eigen::VectorXcd unstepped = apply_gate(block_curr, gate.adjoint(), S);
      out.segment((t - 1) * d, d) = 0.5 * (block_prev - unstepped);
      out.segment(t * d, d) = 0.5 * (block_curr - stepped);
      return out;
    }
  }
  throw std::logic_error("unreachable term kind");
}

ClockedState apply_hamiltonian(const CircuitHamiltonian& h, const ClockedState& psi) {
  check_dimension(h, psi);
  ClockedState out = ClockedState::Zero(psi.size());
  for (const HamiltonianTerm& term : h.terms()) {
    out += apply_term(h, term, psi);
  }
  return out;
}

Eigen::MatrixXcd materialize_term(const CircuitHamiltonian& h, const HamiltonianTerm& term) {
  if (h.dimension() > kDenseCap) {
    throw ParseError("dimension " + std::to_string(h.dimension()) + " exceeds the dense cap " +
                     std::to_string(kDenseCap));
  }
  const std::int64_t d = h.data_dimension();
  const int S = h.num_qubits();
  const int T = h.num_steps();
  const std::int64_t dim = h.dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);

  auto place_block = [&](int clock_row, int clock_col, const Eigen::MatrixXcd& data_block) {
    m.block(clock_row * d, clock_col * d, d, d) += data_block;
  };

  switch (term.kind) {
    case TermKind::InputCheck: {
      const int bad_bit = h.input_bits()[term.index - 1] == '0' ? 1 : 0;
      place_block(0, 0, qubit_projector(term.index, bad_bit, S));
      return m;
    }
    case TermKind::AncillaCheck: {
      place_block(0, 0, qubit_projector(term.index, 1, S));
      return m;
    }
    case TermKind::OutputCheck: {
      place_block(T, T, qubit_projector(1, 0, S));
      return m;
    }
    case TermKind::Propagation: {
      const int t = term.index;
      const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d);
      const Eigen::MatrixXcd u = dense_gate_matrix(h.circuit().gates[t - 1], S);
      place_block(t, t, 0.5 * identity);
      place_block(t - 1, t - 1, 0.5 * identity);
      place_block(t, t - 1, -0.5 * u);
      place_block(t - 1, t, -0.5 * u.adjoint());
      return m;
    }
  }
  throw std::logic_error("unreachable term kind");
}

Eigen::MatrixXcd materialize_dense(const CircuitHamiltonian& h) {
  if (h.dimension() > kDenseCap) {
    throw ParseError("dimension " + std::to_string(h.dimension()) + " exceeds the dense cap " +
                     std::to_string(kDenseCap));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(h.dimension(), h.dimension());
  for (const HamiltonianTerm& term : h.terms()) {
    m += materialize_term(h, term);
  }
  return m;
}

ClockedState history_state(const Circuit& circuit, const std::string& input_bits) {
  const std::int64_t d = circuit.dimension();
  const int T = circuit.num_steps();
  ClockedState eta((T + 1) * d);
  const double weight = 1.0 / std::sqrt(static_cast<double>(T + 1));
  DataState state = start_state(circuit, input_bits);
  eta.segment(0, d) = weight * state;
  for (int t = 1; t <= T; ++t) {
    state = apply_gate(state, circuit.gates[t - 1], circuit.num_qubits);
    eta.segment(t * d, d) = weight * state;
  }
  return eta;
}

double energy(const CircuitHamiltonian& h, const ClockedState& psi) {
  check_dimension(h, psi);
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ParseError("state norm " + std::to_string(norm) + " is not 1");
  }
  const std::complex<double> value = psi.dot(apply_hamiltonian(h, psi));
  if (std::abs(value.imag()) > 1e-12) {
    throw ParseError("energy has imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

Eigen::MatrixXcd materialize_rotation(const Circuit& circuit) {
  const std::int64_t d = circuit.dimension();
  const int T = circuit.num_steps();
  const std::int64_t dim = (T + 1) * d;
  if (dim > kDenseCap) {
    throw ParseError("dimension " + std::to_string(dim) + " exceeds the dense cap " +
                     std::to_string(kDenseCap));
  }
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd prefix = Eigen::MatrixXcd::Identity(d, d);
  r.block(0, 0, d, d) = prefix;
  for (int t = 1; t <= T; ++t) {
    prefix = dense_gate_matrix(circuit.gates[t - 1], circuit.num_qubits) * prefix;
    r.block(t * d, t * d, d, d) = prefix;
  }
  return r;
}

std::string term_label(const HamiltonianTerm& term) {
  switch (term.kind) {
    case TermKind::InputCheck:
      return "in(" + std::to_string(term.index) + ")";
    case TermKind::AncillaCheck:
      return "ancilla-in(" + std::to_string(term.index) + ")";
    case TermKind::OutputCheck:
      return "out";
    case TermKind::Propagation:
      return "prop(" + std::to_string(term.index) + ")";
  }
  return "?";
}

}  // namespace clockham
