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

#include "clockham/revcomp.hpp"

#include <algorithm>
#include <cmath>

#include "clockham/errors.hpp"

namespace clockham {

namespace {

std::string bits_of_index(std::int64_t idx, int width) {
  std::string out(width, '0');
  for (int i = 0; i < width; ++i) {
    if (idx & (std::int64_t{1} << (width - 1 - i))) {
      out[i] = '1';
    }
  }
  return out;
}

// Multi-controlled flip of `target` with all controls read as 1, lowered to
// TOFFOLIs through a chain of borrow wires for more than two controls.
void emit_controlled_flip(std::vector<Gate>& gates, const std::vector<int>& controls, int target,
                          const std::vector<int>& borrows) {
  const int k = static_cast<int>(controls.size());
  if (k == 1) {
    gates.push_back(Gate::cnot(controls[0], target));
    return;
  }
  if (k == 2) {
    gates.push_back(Gate::toffoli(controls[0], controls[1], target));
    return;
  }
  // AND the controls pairwise into borrows, flip, then unwind the borrows.
  std::vector<Gate> chain;
  chain.push_back(Gate::toffoli(controls[0], controls[1], borrows[0]));
  for (int i = 2; i < k - 1; ++i) {
    chain.push_back(Gate::toffoli(borrows[i - 2], controls[i], borrows[i - 1]));
  }
  for (const Gate& g : chain) {
    gates.push_back(g);
  }
  gates.push_back(Gate::toffoli(borrows[k - 3], controls[k - 1], target));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    gates.push_back(*it);
  }
}

// Is the explicit matrix an exact 0/1 permutation?
bool is_permutation_matrix(const Eigen::MatrixXcd& m) {
  const std::int64_t dim = m.rows();
  for (std::int64_t c = 0; c < dim; ++c) {
    int ones = 0;
    for (std::int64_t r = 0; r < dim; ++r) {
      const std::complex<double> v = m(r, c);
      if (std::abs(v - 1.0) <= 1e-12) {
        ++ones;
      } else if (std::abs(v) > 1e-12) {
        return false;
      }
    }
    if (ones != 1) {
      return false;
    }
  }
  return true;
}

// Image of a basis index under a permutation gate.
std::int64_t permute_index(const Gate& gate, std::int64_t idx, int num_qubits) {
  auto bit_of = [&](int q) { return (idx >> (num_qubits - q)) & 1; };
  auto flip = [&](int q) { idx ^= std::int64_t{1} << (num_qubits - q); };
  switch (gate.kind) {
    case GateKind::Identity:
      return idx;
    case GateKind::PauliX:
      flip(gate.targets[0]);
      return idx;
    case GateKind::Cnot:
      if (bit_of(gate.targets[0])) {
        flip(gate.targets[1]);
      }
      return idx;
    case GateKind::Toffoli:
      if (bit_of(gate.targets[0]) && bit_of(gate.targets[1])) {
        flip(gate.targets[2]);
      }
      return idx;
    case GateKind::Custom: {
      // Column of the local permutation matrix selected by the local bits.
      const int k = gate.arity();
      int local = 0;
      for (int i = 0; i < k; ++i) {
        local |= bit_of(gate.targets[i]) << (k - 1 - i);
      }
      int image = -1;
      for (int r = 0; r < (1 << k); ++r) {
        if (std::abs(gate.matrix(r, local) - 1.0) <= 1e-12) {
          image = r;
          break;
        }
      }
      for (int i = 0; i < k; ++i) {
        const int want = (image >> (k - 1 - i)) & 1;
        if (bit_of(gate.targets[i]) != want) {
          flip(gate.targets[i]);
        }
      }
      return idx;
    }
    default:
      throw ParseError("gate is not a basis permutation");
  }
}

}  // namespace

TruthTable::TruthTable(int arity_in, std::vector<std::uint8_t> values_in)
    : arity(arity_in), values(std::move(values_in)) {
  if (arity < 1 || arity > kMaxTableArity) {
    throw ParseError("table arity must be in [1, " + std::to_string(kMaxTableArity) + "]");
  }
  if (values.size() != static_cast<std::size_t>(1) << arity) {
    throw ParseError("table needs " + std::to_string(1 << arity) + " values, got " +
                     std::to_string(values.size()));
  }
  for (std::uint8_t v : values) {
    if (v > 1) {
      throw ParseError("table values must be 0 or 1");
    }
  }
}

bool TruthTable::value(const std::string& input_bits) const {
  if (static_cast<int>(input_bits.size()) != arity) {
    throw ParseError("input has " + std::to_string(input_bits.size()) + " bits, table expects " +
                     std::to_string(arity));
  }
  return value(static_cast<int>(basis_index(input_bits, arity)));
}

std::string TruthTable::input_of_row(int row) const { return bits_of_index(row, arity); }

ReversibleCircuit compile_truth_table(const TruthTable& table) {
  const int m = table.arity;

  // Compile the sparser of f and its complement.
  int minterm_count = 0;
  for (int row = 0; row < table.rows(); ++row) {
    minterm_count += table.value(row) ? 1 : 0;
  }
  const bool negated = minterm_count > table.rows() / 2;

  // Wires: 1..m receive the input (wire 1 is also the output), then the live
  // wire for input bit 1, the scratch, and the borrow chain.
  const int live_first = m + 1;
  const int scratch = m + 2;
  const int num_borrows = std::max(0, m - 2);
  const int num_qubits = m + 2 + num_borrows;
  std::vector<int> borrows(num_borrows);
  for (int i = 0; i < num_borrows; ++i) {
    borrows[i] = m + 3 + i;
  }
  std::vector<int> live(m);
  live[0] = live_first;
  for (int i = 1; i < m; ++i) {
    live[i] = i + 1;
  }

  std::vector<Gate> gates;
  gates.push_back(Gate::cnot(1, live_first));
  gates.push_back(Gate::cnot(live_first, 1));

  // Minterm flips onto the scratch wire. Negative controls are realized by X
  // conjugation; the polarity is carried from one minterm to the next so
  // shared X gates are emitted once.
  std::vector<Gate> compute;
  std::vector<bool> flipped(m, false);
  for (int row = 0; row < table.rows(); ++row) {
    if (table.value(row) == negated) {
      continue;
    }
    for (int i = 0; i < m; ++i) {
      const bool want_flip = ((row >> (m - 1 - i)) & 1) == 0;
      if (flipped[i] != want_flip) {
        compute.push_back(Gate::pauli_x(live[i]));
        flipped[i] = want_flip;
      }
    }
    emit_controlled_flip(compute, live, scratch, borrows);
  }
  for (int i = 0; i < m; ++i) {
    if (flipped[i]) {
      compute.push_back(Gate::pauli_x(live[i]));
    }
  }

  for (const Gate& g : compute) {
    gates.push_back(g);
  }
  gates.push_back(Gate::cnot(scratch, 1));
  for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
    gates.push_back(*it);
  }
  if (negated) {
    gates.push_back(Gate::pauli_x(1));
  }

  ReversibleCircuit out{Circuit(num_qubits, m, std::move(gates)), WireLayout{}};
  out.layout.output_wire = 1;
  out.layout.live_input_wires = live;
  out.layout.scratch_wire = scratch;
  out.layout.borrow_wires = borrows;
  out.layout.note = "input bit 1 arrives on the output wire and is moved to wire " +
                    std::to_string(live_first) + " before evaluation";
  return out;
}

ReversibilityReport verify_reversibility(const Circuit& circuit) {
  const std::int64_t dim = circuit.dimension();

  bool all_permutation_gates = true;
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::Hadamard ||
        (g.kind == GateKind::Custom && !is_permutation_matrix(g.matrix))) {
      all_permutation_gates = false;
      break;
    }
  }

  ReversibilityReport report;
  std::vector<std::int64_t> image(dim, -1);
  std::vector<bool> hit(dim, false);

  if (all_permutation_gates) {
    for (std::int64_t d = 0; d < dim; ++d) {
      std::int64_t idx = d;
      for (const Gate& g : circuit.gates) {
        idx = permute_index(g, idx, circuit.num_qubits);
      }
      image[d] = idx;
    }
  } else {
    // General route: run each basis state through the statevector simulator
    // and demand a single amplitude-one entry.
    for (std::int64_t d = 0; d < dim; ++d) {
      DataState state = DataState::Zero(dim);
      state(d) = 1.0;
      for (const Gate& g : circuit.gates) {
        state = apply_gate(state, g, circuit.num_qubits);
      }
      std::int64_t where = -1;
      bool basis_like = true;
      for (std::int64_t i = 0; i < dim; ++i) {
        const std::complex<double> v = state(i);
        if (std::abs(v - 1.0) <= 1e-12) {
          if (where != -1) {
            basis_like = false;
            break;
          }
          where = i;
        } else if (std::abs(v) > 1e-12) {
          basis_like = false;
          break;
        }
      }
      if (!basis_like || where == -1) {
        report.is_permutation = false;
        report.witness = bits_of_index(d, circuit.num_qubits);
        return report;
      }
      image[d] = where;
    }
  }

  for (std::int64_t d = 0; d < dim; ++d) {
    if (hit[image[d]]) {
      report.is_permutation = false;
      report.witness = bits_of_index(d, circuit.num_qubits);
      return report;
    }
    hit[image[d]] = true;
  }
  report.is_permutation = true;
  return report;
}

EndToEndInstance end_to_end_instance(const TruthTable& table, const std::string& input_bits,
                                     const GapOptions& opts) {
  if (static_cast<int>(input_bits.size()) != table.arity) {
    throw ParseError("input has " + std::to_string(input_bits.size()) + " bits, table expects " +
                     std::to_string(table.arity));
  }
  ReversibleCircuit compiled = compile_truth_table(table);
  GapOptions gap_opts = opts;
  gap_opts.include_ancilla_checks = true;
  SpectralReport report = gap_report(compiled.circuit, input_bits, gap_opts);
  CircuitHamiltonian h(compiled.circuit, input_bits, true);
  return EndToEndInstance{std::move(compiled), std::move(h), report};
}

}  // namespace clockham
