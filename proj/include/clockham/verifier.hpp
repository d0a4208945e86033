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
#include <random>
#include <string>
#include <vector>

#include "clockham/hamiltonian.hpp"

namespace clockham {

/// One round of the verification protocol: draw a test slot y uniformly
/// from [1, M] with M = T + K + 2, perform the matching measurement on the
/// proof state, reject on a hit. Slot y = 1 is a null propagation test that
/// always accepts (the step-0 propagation operator does not exist), which
/// keeps the exact law Pr[reject] = <psi|H|psi> / M.

enum class SlotKind { NullPropagation, Propagation, InputCheck, OutputCheck };

struct TestSlot {
  int y = 0;
  SlotKind kind = SlotKind::NullPropagation;
  int index = 0;  // step t for propagation, checked qubit i for input checks
};

/// The bijection from [1, M] onto {null} + Prop(1..T) + InputCheck(1..K) +
/// {output}.
TestSlot resolve_slot(int y, int num_steps, int num_input_checks);

TestSlot sample_slot(std::mt19937_64& rng, int num_steps, int num_input_checks);

enum class Outcome { Accept, Reject };

struct VerifierTranscript {
  std::uint64_t seed = 0;
  int y = 0;
  TestSlot slot;
  Outcome outcome = Outcome::Accept;
  std::string note;
};

/// P_t^dagger applied to clock block t of psi: the block content of the
/// conjugated proof R^dagger psi, computed gate by gate.
Eigen::VectorXcd rotated_block(const Circuit& circuit, const ClockedState& psi, int t);

/// Hit probability of the rotated clock-difference measurement for step t;
/// equals <psi|H_prop^t|psi> exactly in exact arithmetic.
double propagation_reject_probability(const Circuit& circuit, const ClockedState& psi, int t);

/// Hit probability of the standard-basis projector for an input or output
/// check slot.
double projective_reject_probability(const CircuitHamiltonian& h, const TestSlot& slot,
                                     const ClockedState& psi);

/// Single projective measurement: one uniform variate thresholded against
/// the hit probability.
Outcome projective_test(const CircuitHamiltonian& h, const TestSlot& slot, const ClockedState& psi,
                        std::mt19937_64& rng);

/// Rotated propagation measurement for step t (applies the prefix rotation,
/// then measures the clock against (|t> - |t-1>)/sqrt(2)).
Outcome propagation_test(const Circuit& circuit, int t, const ClockedState& psi,
                         std::mt19937_64& rng);

/// The exact rejection law of one protocol round, <psi|H|psi> / (T+K+2).
double rejection_probability_exact(const CircuitHamiltonian& h, const ClockedState& psi);

/// One protocol round from a fresh stream seeded by `seed`.
VerifierTranscript run_verifier(const CircuitHamiltonian& h, const ClockedState& psi,
                                std::uint64_t seed);

struct SlotTally {
  int y = 0;
  std::string label;
  std::int64_t draws = 0;
  std::int64_t rejections = 0;
};

struct MonteCarloResult {
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t rejections = 0;
  double reject_rate = 0.0;
  double standard_error = 0.0;       // sqrt(p(1-p)/samples) at the empirical rate
  double exact_probability = 0.0;    // rejection_probability_exact
  std::string transcript_digest;     // order-sensitive FNV-1a over (y, outcome)
  std::vector<SlotTally> slot_histogram;
};

/// Seeded batch of protocol rounds. Shot i draws from a stream derived from
/// (seed, i), so the result is reproducible bit for bit and independent of
/// evaluation order.
MonteCarloResult monte_carlo(const CircuitHamiltonian& h, const ClockedState& psi,
                             std::int64_t samples, std::uint64_t seed);

std::string slot_label(const CircuitHamiltonian& h, const TestSlot& slot);

}  // namespace clockham
