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

#include <cmath>

#include "clockham/errors.hpp"
#include "clockham/spectral.hpp"
#include "fixtures.hpp"

using namespace clockham;

TEST_CASE("dense floor of the identity fixture has a closed form") {
  const CircuitHamiltonian h(fixtures::circ_id(), "0");
  const EigenPair pair = min_eigenvalue_dense(h);
  CHECK(pair.value == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0).epsilon(1e-12));
  CHECK(std::abs(pair.vector.norm() - 1.0) < 1e-12);
  CHECK((apply_hamiltonian(h, pair.vector) - pair.value * pair.vector).norm() < 1e-10);
  CHECK(energy(h, pair.vector) == doctest::Approx(pair.value).epsilon(1e-9));
}

TEST_CASE("dense floor vanishes on an accepting instance") {
  const EigenPair pair = min_eigenvalue_dense(CircuitHamiltonian(fixtures::circ_x(), "0"));
  CHECK(pair.value >= -1e-10);
  CHECK(pair.value <= 1e-9);
}

TEST_CASE("propagation terms alone annihilate every history state") {
  // With the input and output checks removed, the history state of any
  // start is a zero mode.
  const Circuit circuit = fixtures::circ_id();
  const CircuitHamiltonian h(circuit, "0");
  for (const std::string input : {"0", "1"}) {
    const ClockedState eta = history_state(circuit, input);
    ClockedState accumulated = ClockedState::Zero(h.dimension());
    for (const HamiltonianTerm& term : h.terms()) {
      if (term.kind == TermKind::Propagation) {
        accumulated += apply_term(h, term, eta);
      }
    }
    CHECK(accumulated.norm() < 1e-13);
  }
}

TEST_CASE("iterative solver matches the dense oracle") {
  IterativeOptions opts;
  opts.tol = 1e-8;

  const CircuitHamiltonian rejecting(fixtures::circ_id(), "0");
  const EigenPair dense = min_eigenvalue_dense(rejecting);
  const EigenPair lanczos = min_eigenvalue_iterative(rejecting, opts);
  CHECK(std::abs(dense.value - lanczos.value) < 1e-8);
  CHECK(lanczos.iterations > 0);

  const CircuitHamiltonian accepting(fixtures::circ_x(), "0");
  CHECK(min_eigenvalue_iterative(accepting, opts).value <= 1e-8);

  const CircuitHamiltonian rev3(fixtures::circ_rev3().circuit, "110");
  const EigenPair rev3_dense = min_eigenvalue_dense(rev3);
  const EigenPair rev3_lanczos = min_eigenvalue_iterative(rev3, opts);
  CHECK(std::abs(rev3_dense.value - rev3_lanczos.value) < 1e-8);
  CHECK((apply_hamiltonian(rev3, rev3_lanczos.vector) -
         rev3_lanczos.value * rev3_lanczos.vector)
            .norm() <= opts.tol);
}

TEST_CASE("iterative solver is deterministic for a fixed seed") {
  const CircuitHamiltonian h(fixtures::circ_hh(), "0");
  IterativeOptions opts;
  opts.seed = 99;
  const EigenPair a = min_eigenvalue_iterative(h, opts);
  const EigenPair b = min_eigenvalue_iterative(h, opts);
  CHECK(a.value == b.value);
  CHECK(a.iterations == b.iterations);
  CHECK((a.vector - b.vector).norm() == 0.0);
}

TEST_CASE("iterative solver reports non-convergence") {
  const CircuitHamiltonian h(fixtures::circ_rev3().circuit, "110");
  IterativeOptions opts;
  opts.tol = 1e-12;
  opts.max_iterations = 2;
  CHECK_THROWS_AS(min_eigenvalue_iterative(h, opts), SolverError);
  CHECK_THROWS_AS(min_eigenvalue_iterative(h, IterativeOptions{.tol = -1.0}), ParseError);
}

TEST_CASE("gap reports for the fixtures") {
  const SpectralReport report_x = gap_report(fixtures::circ_x(), "0");
  CHECK(report_x.verdict == GapVerdict::CompletenessLike);
  CHECK(report_x.bound == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(report_x.lambda_min <= 1e-9);
  CHECK(report_x.num_steps == 1);

  const SpectralReport report_id = gap_report(fixtures::circ_id(), "0");
  CHECK(report_id.verdict == GapVerdict::SoundnessLike);
  CHECK(report_id.lambda_min == doctest::Approx(0.29289321881345254).epsilon(1e-12));

  const SpectralReport report_hh = gap_report(fixtures::circ_hh(), "0");
  CHECK(report_hh.bound == doctest::Approx(1.0 / 54.0).epsilon(1e-15));
  CHECK(report_hh.verdict == GapVerdict::SoundnessLike);
  CHECK(report_hh.lambda_min >= report_hh.bound - 1e-9);
}

TEST_CASE("an instance with fractional acceptance lands in the forbidden zone") {
  const SpectralReport report = gap_report(fixtures::circ_near_flip(), "0");
  CHECK(report.verdict == GapVerdict::Violation);
  CHECK(report.lambda_min > kZeroTol);
  CHECK(report.lambda_min < report.bound);
}

TEST_CASE("dense and iterative paths can be forced") {
  GapOptions opts;
  opts.method = GapOptions::Method::Iterative;
  const SpectralReport iterative = gap_report(fixtures::circ_id(), "0", opts);
  CHECK(iterative.method == SolveMethod::Iterative);
  CHECK(iterative.iterations > 0);
  CHECK(iterative.residual <= 1e-8);

  opts.method = GapOptions::Method::Dense;
  const SpectralReport dense = gap_report(fixtures::circ_id(), "0", opts);
  CHECK(dense.method == SolveMethod::Dense);
  CHECK(std::abs(dense.lambda_min - iterative.lambda_min) < 1e-7);
}

TEST_CASE("floor is nonnegative across random instances") {
  std::vector<std::pair<Circuit, std::string>> instances = {
      {fixtures::circ_h(), "0"},   {fixtures::circ_h(), "1"},
      {fixtures::circ_hh(), "1"},  {fixtures::circ_near_flip(), "1"},
      {fixtures::circ_x(), "1"},
  };
  for (const auto& [circuit, input] : instances) {
    CHECK(min_eigenvalue_dense(CircuitHamiltonian(circuit, input)).value >= -1e-10);
  }
}

TEST_CASE("without ancilla penalties a junk start voids the gap") {
  // The compiled AND circuit on a rejecting input: flipping the scratch
  // wire at clock zero steers the output to accept, and only the ancilla
  // checks rule that history out.
  const Circuit circuit = fixtures::circ_rev3().circuit;
  const std::string input = "011";

  const SpectralReport checked = gap_report(circuit, input);
  CHECK(checked.verdict == GapVerdict::SoundnessLike);

  GapOptions literal;
  literal.include_ancilla_checks = false;
  const SpectralReport unchecked = gap_report(circuit, input, literal);
  CHECK(unchecked.lambda_min <= 1e-9);
}
