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

#include <cstdint>
#include <string>
#include <vector>

#include "clockham/circuit.hpp"

namespace clockham {

/// State over the joint data (x) clock space. The clock is an explicit
/// (T+1)-valued coordinate rather than a binary register: with a qudit clock
/// every basis index is a valid (clock, data) pair, so no spurious
/// zero-energy states exist outside the construction. Index layout:
/// clock_value * 2^S + data_basis_index.
using ClockedState = Eigen::VectorXcd;

enum class TermKind {
  InputCheck,    // wrong input bit i at clock 0
  AncillaCheck,  // ancilla qubit i not |0> at clock 0
  OutputCheck,   // output qubit reads |0> at clock T
  Propagation,   // clock step t-1 -> t inconsistent with gate t
};

struct HamiltonianTerm {
  TermKind kind;
  int index;  // qubit i for the checks, step t for propagation, 0 for output
};

/// The assembled penalty operator for one (circuit, input) instance: a sum
/// of projector-like positive semidefinite terms whose kernel is exactly the
/// valid computation histories. Matrix-vector products are evaluated
/// blockwise per clock value; nothing is materialized unless asked.
class CircuitHamiltonian {
 public:
  /// Term order: Propagation(1..T), InputCheck(1..n),
  /// AncillaCheck(n+1..S) when enabled, OutputCheck.
  CircuitHamiltonian(Circuit circuit, std::string input_bits, bool include_ancilla_checks = true);

  const Circuit& circuit() const { return circuit_; }
  const std::string& input_bits() const { return input_; }
  bool include_ancilla_checks() const { return ancilla_checks_; }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }

  int num_qubits() const { return circuit_.num_qubits; }
  int num_steps() const { return circuit_.num_steps(); }
  int num_input_bits() const { return circuit_.num_input_bits; }

  /// K: input-check terms, one per checked qubit (n, or S with ancilla
  /// checks on).
  int num_input_checks() const;

  /// Number of verifier test slots, T + K + 2.
  int num_test_slots() const;

  std::int64_t data_dimension() const { return circuit_.dimension(); }
  std::int64_t dimension() const { return data_dimension() * (num_steps() + 1); }

 private:
  Circuit circuit_;
  std::string input_;
  bool ancilla_checks_;
  std::vector<HamiltonianTerm> terms_;
};

inline CircuitHamiltonian build_hamiltonian(Circuit circuit, std::string input_bits,
                                            bool include_ancilla_checks = true) {
  return CircuitHamiltonian(std::move(circuit), std::move(input_bits), include_ancilla_checks);
}

/// Exact linear action of one term; the result is generally unnormalized.
/// A propagation term touches only clock blocks t-1 and t.
ClockedState apply_term(const CircuitHamiltonian& h, const HamiltonianTerm& term,
                        const ClockedState& psi);

/// Sum of all terms, applied in term-list order (fixed summation order, so
/// results are bitwise reproducible).
ClockedState apply_hamiltonian(const CircuitHamiltonian& h, const ClockedState& psi);

/// Cache of the dense cap shared by materialization and the dense solver.
inline constexpr std::int64_t kDenseCap = 4096;

/// Dense matrix of a single term, assembled from the projector/step
/// definitions by explicit Kronecker products. Deliberately a separate route
/// from apply_term, so the two implementations check each other.
Eigen::MatrixXcd materialize_term(const CircuitHamiltonian& h, const HamiltonianTerm& term);

/// Dense matrix of the full operator; throws if dimension() > kDenseCap.
Eigen::MatrixXcd materialize_dense(const CircuitHamiltonian& h);

/// The uniform superposition over computation steps,
/// (1/sqrt(T+1)) sum_t (U_t...U_1 |start>) (x) |t>_clock.
ClockedState history_state(const Circuit& circuit, const std::string& input_bits);

/// Rayleigh quotient <psi|H|psi> for unit psi. Throws if psi is not
/// normalized or the value has imaginary residue above 1e-12.
double energy(const CircuitHamiltonian& h, const ClockedState& psi);

/// The block-diagonal rotation sum_t (U_t...U_1) (x) |t><t| used by the
/// verifier's propagation test. Dense; subject to the same cap as
/// materialize_dense.
Eigen::MatrixXcd materialize_rotation(const Circuit& circuit);

std::string term_label(const HamiltonianTerm& term);

}  // namespace clockham
