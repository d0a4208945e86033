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

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

#include "clockham/errors.hpp"
#include "clockham/hamiltonian.hpp"
#include "clockham/rng.hpp"
#include "fixtures.hpp"

using namespace clockham;

namespace {

ClockedState clocked_basis(const CircuitHamiltonian& h, int clock, const std::string& data_bits) {
  ClockedState psi = ClockedState::Zero(h.dimension());
  psi(clock * h.data_dimension() + basis_index(data_bits, h.num_qubits())) = 1.0;
  return psi;
}

ClockedState random_clocked_state(std::int64_t dim, std::mt19937_64& rng) {
  ClockedState psi(dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    psi(i) = std::complex<double>(2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0);
  }
  psi.normalize();
  return psi;
}

}  // namespace

TEST_CASE("term lists follow the declared composition") {
  const CircuitHamiltonian h_id(fixtures::circ_id(), "0", false);
  REQUIRE(h_id.terms().size() == 3);
  CHECK(h_id.terms()[0].kind == TermKind::Propagation);
  CHECK(h_id.terms()[1].kind == TermKind::InputCheck);
  CHECK(h_id.terms()[2].kind == TermKind::OutputCheck);
  CHECK(h_id.num_input_checks() == 1);

  const CircuitHamiltonian h_wide(Circuit(2, 1, {Gate::pauli_x(1)}), "0", true);
  REQUIRE(h_wide.terms().size() == 4);
  CHECK(h_wide.terms()[1].kind == TermKind::InputCheck);
  CHECK(h_wide.terms()[2].kind == TermKind::AncillaCheck);
  CHECK(h_wide.terms()[2].index == 2);
  CHECK(h_wide.num_input_checks() == 2);

  const CircuitHamiltonian h_hh(fixtures::circ_hh(), "0");
  int props = 0;
  for (const HamiltonianTerm& t : h_hh.terms()) {
    props += t.kind == TermKind::Propagation ? 1 : 0;
  }
  CHECK(props == 2);
  CHECK(h_hh.terms().size() == 4);

  CHECK_THROWS_AS(CircuitHamiltonian(fixtures::circ_id(), "00"), ParseError);
}

TEST_CASE("input check penalizes the flipped bit at clock zero") {
  const CircuitHamiltonian h(fixtures::circ_id(), "0");
  const HamiltonianTerm in1{TermKind::InputCheck, 1};

  const ClockedState bad = clocked_basis(h, 0, "1");
  CHECK((apply_term(h, in1, bad) - bad).norm() < 1e-15);

  const ClockedState good = clocked_basis(h, 0, "0");
  CHECK(apply_term(h, in1, good).norm() < 1e-15);

  // Same penalty applied at a later clock is zero.
  const ClockedState later = clocked_basis(h, 1, "1");
  CHECK(apply_term(h, in1, later).norm() < 1e-15);
}

TEST_CASE("output check does not penalize an accepting output") {
  const CircuitHamiltonian h(fixtures::circ_id(), "0");
  const HamiltonianTerm out{TermKind::OutputCheck, 0};
  CHECK(apply_term(h, out, clocked_basis(h, 1, "1")).norm() < 1e-15);
  const ClockedState rejecting = clocked_basis(h, 1, "0");
  CHECK((apply_term(h, out, rejecting) - rejecting).norm() < 1e-15);
}

TEST_CASE("propagation term annihilates a consistent two-step superposition") {
  const CircuitHamiltonian h(fixtures::circ_x(), "0");
  const ClockedState pair =
      (clocked_basis(h, 0, "0") + clocked_basis(h, 1, "1")) / std::sqrt(2.0);
  CHECK(apply_term(h, {TermKind::Propagation, 1}, pair).norm() < 1e-14);
}

TEST_CASE("full operator action on clocked basis states") {
  const CircuitHamiltonian h(fixtures::circ_id(), "0");
  const ClockedState out = apply_hamiltonian(h, clocked_basis(h, 0, "0"));
  ClockedState expected =
      0.5 * clocked_basis(h, 0, "0") - 0.5 * clocked_basis(h, 1, "0");
  CHECK((out - expected).norm() < 1e-14);

  const ClockedState zero = ClockedState::Zero(h.dimension());
  CHECK(apply_hamiltonian(h, zero).norm() == 0.0);

  CHECK_THROWS_AS(apply_hamiltonian(h, ClockedState::Zero(3)), ParseError);
}

TEST_CASE("materialized operator for the identity fixture") {
  const CircuitHamiltonian h(fixtures::circ_id(), "0");
  const Eigen::MatrixXcd m = materialize_dense(h);
  REQUIRE(m.rows() == 4);

  // Data-|0> sector in clock order 0,1.
  CHECK(m(0, 0).real() == doctest::Approx(0.5));
  CHECK(m(0, 2).real() == doctest::Approx(-0.5));
  CHECK(m(2, 0).real() == doctest::Approx(-0.5));
  CHECK(m(2, 2).real() == doctest::Approx(1.5));
  // Data-|1> sector.
  CHECK(m(1, 1).real() == doctest::Approx(1.5));
  CHECK(m(3, 3).real() == doctest::Approx(0.5));

  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("materialized and blockwise routes agree on all basis vectors") {
  const std::vector<CircuitHamiltonian> instances = {
      CircuitHamiltonian(fixtures::circ_x(), "0"),
      CircuitHamiltonian(fixtures::circ_id(), "0"),
      CircuitHamiltonian(fixtures::circ_hh(), "0"),
      CircuitHamiltonian(fixtures::circ_rev3().circuit, "110"),
  };
  for (const CircuitHamiltonian& h : instances) {
    const Eigen::MatrixXcd m = materialize_dense(h);
    for (std::int64_t col = 0; col < h.dimension(); ++col) {
      ClockedState e = ClockedState::Zero(h.dimension());
      e(col) = 1.0;
      CHECK((apply_hamiltonian(h, e) - m.col(col)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("materialization refuses oversized instances") {
  // 12 data qubits and one step give dimension 8192.
  std::vector<Gate> gates = {Gate::pauli_x(1)};
  const CircuitHamiltonian h(Circuit(12, 1, gates), "0");
  CHECK(h.dimension() == 8192);
  CHECK_THROWS_AS(materialize_dense(h), ParseError);
}

TEST_CASE("history states of the fixtures") {
  const ClockedState eta_id = history_state(fixtures::circ_id(), "1");
  const CircuitHamiltonian h_id(fixtures::circ_id(), "1");
  ClockedState expected =
      (clocked_basis(h_id, 0, "1") + clocked_basis(h_id, 1, "1")) / std::sqrt(2.0);
  CHECK((eta_id - expected).norm() < 1e-14);

  const ClockedState eta_x = history_state(fixtures::circ_x(), "0");
  const CircuitHamiltonian h_x(fixtures::circ_x(), "0");
  expected = (clocked_basis(h_x, 0, "0") + clocked_basis(h_x, 1, "1")) / std::sqrt(2.0);
  CHECK((eta_x - expected).norm() < 1e-14);

  const ClockedState eta_hh = history_state(fixtures::circ_hh(), "0");
  const CircuitHamiltonian h_hh(fixtures::circ_hh(), "0");
  expected = (clocked_basis(h_hh, 0, "0") +
              (clocked_basis(h_hh, 1, "0") + clocked_basis(h_hh, 1, "1")) / std::sqrt(2.0) +
              clocked_basis(h_hh, 2, "0")) /
             std::sqrt(3.0);
  CHECK((eta_hh - expected).norm() < 1e-14);
  CHECK(std::abs(eta_hh.norm() - 1.0) < 1e-12);
}

TEST_CASE("accepting history state is annihilated term by term") {
  const CircuitHamiltonian h(fixtures::circ_x(), "0");
  const ClockedState eta = history_state(fixtures::circ_x(), "0");
  for (const HamiltonianTerm& term : h.terms()) {
    CHECK(apply_term(h, term, eta).norm() < 1e-13);
  }
  CHECK(apply_hamiltonian(h, eta).norm() < 1e-12);
  CHECK((materialize_dense(h) * eta).norm() < 1e-12);
  CHECK(energy(h, eta) <= 1e-12);
}

TEST_CASE("energy values on clocked basis states") {
  const CircuitHamiltonian h(fixtures::circ_id(), "0");
  CHECK(energy(h, clocked_basis(h, 0, "0")) == doctest::Approx(0.5));
  CHECK(energy(h, clocked_basis(h, 1, "0")) == doctest::Approx(1.5));
  CHECK_THROWS_AS(energy(h, 2.0 * clocked_basis(h, 0, "0")), ParseError);
}

TEST_CASE("energy is invariant under a global phase") {
  const CircuitHamiltonian h(fixtures::circ_hh(), "0");
  std::mt19937_64 rng = derive_stream(7, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ClockedState psi = random_clocked_state(h.dimension(), rng);
    const std::complex<double> phase = std::polar(1.0, 6.28 * uniform_unit(rng));
    CHECK(energy(h, psi) == doctest::Approx(energy(h, phase * psi)).epsilon(1e-12));
  }
}

TEST_CASE("hermitian action over random state pairs") {
  const CircuitHamiltonian h(fixtures::circ_hh(), "0");
  std::mt19937_64 rng = derive_stream(8, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ClockedState phi = random_clocked_state(h.dimension(), rng);
    const ClockedState psi = random_clocked_state(h.dimension(), rng);
    const std::complex<double> left = phi.dot(apply_hamiltonian(h, psi));
    const std::complex<double> right = psi.dot(apply_hamiltonian(h, phi));
    CHECK(std::abs(left - std::conj(right)) < 1e-12);
  }
}

TEST_CASE("every term is PSD and propagation terms are projectors") {
  const std::vector<CircuitHamiltonian> instances = {
      CircuitHamiltonian(fixtures::circ_x(), "0"),
      CircuitHamiltonian(fixtures::circ_hh(), "0"),
      CircuitHamiltonian(fixtures::circ_rev3().circuit, "011"),
  };
  for (const CircuitHamiltonian& h : instances) {
    for (const HamiltonianTerm& term : h.terms()) {
      const Eigen::MatrixXcd m = materialize_term(h, term);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
      CHECK(solver.eigenvalues().minCoeff() >= -1e-12);
      if (term.kind == TermKind::Propagation) {
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
          const double v = solver.eigenvalues()(i);
          CHECK(std::min(std::abs(v), std::abs(v - 1.0)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("prefix rotation conjugates propagation terms onto clock differences") {
  const std::vector<std::pair<Circuit, std::string>> instances = {
      {fixtures::circ_x(), "0"},
      {fixtures::circ_hh(), "0"},
      {fixtures::circ_rev3().circuit, "111"},
  };
  for (const auto& [circuit, input] : instances) {
    const CircuitHamiltonian h(circuit, input);
    const Eigen::MatrixXcd r = materialize_rotation(circuit);
    const std::int64_t d = h.data_dimension();
    const std::int64_t dim = h.dimension();

    CHECK((r.adjoint() * r - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);

    for (int t = 1; t <= h.num_steps(); ++t) {
      const Eigen::MatrixXcd conjugated =
          r.adjoint() * materialize_term(h, {TermKind::Propagation, t}) * r;
      Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(dim, dim);
      const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d);
      expected.block(t * d, t * d, d, d) = 0.5 * identity;
      expected.block((t - 1) * d, (t - 1) * d, d, d) = 0.5 * identity;
      expected.block(t * d, (t - 1) * d, d, d) = -0.5 * identity;
      expected.block((t - 1) * d, t * d, d, d) = -0.5 * identity;
      CHECK((conjugated - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}
