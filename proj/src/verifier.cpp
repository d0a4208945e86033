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

#include "clockham/verifier.hpp"

#include <cmath>
#include <sstream>

#include "clockham/errors.hpp"
#include "clockham/rng.hpp"

namespace clockham {

namespace {

void check_proof(const CircuitHamiltonian& h, const ClockedState& psi) {
  if (psi.size() != h.dimension()) {
    throw ParseError("proof has dimension " + std::to_string(psi.size()) + ", instance expects " +
                     std::to_string(h.dimension()));
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw ParseError("proof state is not normalized");
  }
}

std::string format_probability(double p) {
  std::ostringstream out;
  out.precision(12);
  out << p;
  return out.str();
}

// Per-slot rejection probabilities, computed once so that shot loops only
// need two RNG draws and a comparison per round.
struct ShotContext {
  int slots = 0;
  std::vector<double> reject_probability;  // indexed by y, entry 0 unused
};

ShotContext make_context(const CircuitHamiltonian& h, const ClockedState& psi) {
  ShotContext ctx;
  ctx.slots = h.num_test_slots();
  ctx.reject_probability.assign(ctx.slots + 1, 0.0);
  for (int y = 2; y <= ctx.slots; ++y) {
    const TestSlot slot = resolve_slot(y, h.num_steps(), h.num_input_checks());
    ctx.reject_probability[y] =
        slot.kind == SlotKind::Propagation
            ? propagation_reject_probability(h.circuit(), psi, slot.index)
            : projective_reject_probability(h, slot, psi);
  }
  return ctx;
}

struct ShotResult {
  int y = 0;
  bool reject = false;
};

// One round against precomputed slot probabilities. Draw order (slot, then
// one variate for non-null slots) matches the test functions exactly.
ShotResult run_shot(const ShotContext& ctx, std::mt19937_64& rng) {
  ShotResult shot;
  shot.y = uniform_index(rng, ctx.slots);
  if (shot.y == 1) {
    return shot;  // null propagation slot, nothing measured
  }
  shot.reject = uniform_unit(rng) < ctx.reject_probability[shot.y];
  return shot;
}

std::uint64_t fnv1a_update(std::uint64_t hash, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    hash ^= (value >> (8 * i)) & 0xffULL;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

TestSlot resolve_slot(int y, int num_steps, int num_input_checks) {
  const int slots = num_steps + num_input_checks + 2;
  if (y < 1 || y > slots) {
    throw ParseError("slot " + std::to_string(y) + " outside [1, " + std::to_string(slots) + "]");
  }
  TestSlot slot;
  slot.y = y;
  if (y == 1) {
    slot.kind = SlotKind::NullPropagation;
    slot.index = 0;
  } else if (y <= num_steps + 1) {
    slot.kind = SlotKind::Propagation;
    slot.index = y - 1;
  } else if (y <= num_steps + num_input_checks + 1) {
    slot.kind = SlotKind::InputCheck;
    slot.index = y - num_steps - 1;
  } else {
    slot.kind = SlotKind::OutputCheck;
    slot.index = 0;
  }
  return slot;
}

TestSlot sample_slot(std::mt19937_64& rng, int num_steps, int num_input_checks) {
  const int slots = num_steps + num_input_checks + 2;
  return resolve_slot(uniform_index(rng, slots), num_steps, num_input_checks);
}

Eigen::VectorXcd rotated_block(const Circuit& circuit, const ClockedState& psi, int t) {
  const std::int64_t d = circuit.dimension();
  Eigen::VectorXcd block = psi.segment(t * d, d);
  // (U_t ... U_1)^dagger = U_1^dagger ... U_t^dagger, applied right to left.
  for (int step = t; step >= 1; --step) {
    block = apply_gate(block, circuit.gates[step - 1].adjoint(), circuit.num_qubits);
  }
  return block;
}

double propagation_reject_probability(const Circuit& circuit, const ClockedState& psi, int t) {
  if (t < 1 || t > circuit.num_steps()) {
    throw ParseError("propagation step " + std::to_string(t) + " outside [1, " +
                     std::to_string(circuit.num_steps()) + "]");
  }
  const Eigen::VectorXcd current = rotated_block(circuit, psi, t);
  const Eigen::VectorXcd previous = rotated_block(circuit, psi, t - 1);
  return 0.5 * (current - previous).squaredNorm();
}

double projective_reject_probability(const CircuitHamiltonian& h, const TestSlot& slot,
                                     const ClockedState& psi) {
  const std::int64_t d = h.data_dimension();
  const int S = h.num_qubits();
  switch (slot.kind) {
    case SlotKind::InputCheck: {
      const int q = slot.index;
      if (q < 1 || q > h.num_input_checks()) {
        throw ParseError("input-check slot index " + std::to_string(q) + " outside [1, " +
                         std::to_string(h.num_input_checks()) + "]");
      }
      const bool bad_bit = q <= h.num_input_bits() ? h.input_bits()[q - 1] == '0' : true;
      const std::int64_t mask = std::int64_t{1} << (S - q);
      double p = 0.0;
      for (std::int64_t i = 0; i < d; ++i) {
        if (((i & mask) != 0) == bad_bit) {
          p += std::norm(psi(i));
        }
      }
      return p;
    }
    case SlotKind::OutputCheck: {
      const std::int64_t msb = std::int64_t{1} << (S - 1);
      const std::int64_t block = static_cast<std::int64_t>(h.num_steps()) * d;
      double p = 0.0;
      for (std::int64_t i = 0; i < d; ++i) {
        if ((i & msb) == 0) {
          p += std::norm(psi(block + i));
        }
      }
      return p;
    }
    default:
      throw ParseError("slot is not a projective test");
  }
}

Outcome projective_test(const CircuitHamiltonian& h, const TestSlot& slot, const ClockedState& psi,
                        std::mt19937_64& rng) {
  const double p = projective_reject_probability(h, slot, psi);
  return uniform_unit(rng) < p ? Outcome::Reject : Outcome::Accept;
}

Outcome propagation_test(const Circuit& circuit, int t, const ClockedState& psi,
                         std::mt19937_64& rng) {
  const double p = propagation_reject_probability(circuit, psi, t);
  return uniform_unit(rng) < p ? Outcome::Reject : Outcome::Accept;
}

double rejection_probability_exact(const CircuitHamiltonian& h, const ClockedState& psi) {
  return energy(h, psi) / static_cast<double>(h.num_test_slots());
}

std::string slot_label(const CircuitHamiltonian& h, const TestSlot& slot) {
  switch (slot.kind) {
    case SlotKind::NullPropagation:
      return "null-prop";
    case SlotKind::Propagation:
      return "prop(" + std::to_string(slot.index) + ")";
    case SlotKind::InputCheck:
      return slot.index <= h.num_input_bits() ? "in(" + std::to_string(slot.index) + ")"
                                              : "ancilla-in(" + std::to_string(slot.index) + ")";
    case SlotKind::OutputCheck:
      return "out";
  }
  return "?";
}

VerifierTranscript run_verifier(const CircuitHamiltonian& h, const ClockedState& psi,
                                std::uint64_t seed) {
  check_proof(h, psi);
  const ShotContext ctx = make_context(h, psi);
  std::mt19937_64 rng = derive_stream(seed, 0);
  const ShotResult shot = run_shot(ctx, rng);

  VerifierTranscript transcript;
  transcript.seed = seed;
  transcript.y = shot.y;
  transcript.slot = resolve_slot(shot.y, h.num_steps(), h.num_input_checks());
  transcript.outcome = shot.reject ? Outcome::Reject : Outcome::Accept;
  if (transcript.slot.kind == SlotKind::NullPropagation) {
    transcript.note = "null propagation slot accepts unconditionally";
  } else {
    transcript.note = "slot " + slot_label(h, transcript.slot) + ": hit probability " +
                      format_probability(ctx.reject_probability[shot.y]) +
                      (shot.reject ? ", measured hit" : ", measured miss");
  }
  return transcript;
}

MonteCarloResult monte_carlo(const CircuitHamiltonian& h, const ClockedState& psi,
                             std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw ParseError("samples must be >= 1");
  }
  check_proof(h, psi);
  const ShotContext ctx = make_context(h, psi);

  MonteCarloResult result;
  result.samples = samples;
  result.seed = seed;
  result.exact_probability = rejection_probability_exact(h, psi);
  result.slot_histogram.resize(ctx.slots);
  for (int y = 1; y <= ctx.slots; ++y) {
    result.slot_histogram[y - 1].y = y;
    result.slot_histogram[y - 1].label =
        slot_label(h, resolve_slot(y, h.num_steps(), h.num_input_checks()));
  }

  std::uint64_t digest = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
  for (std::int64_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng = derive_stream(seed, static_cast<std::uint64_t>(i));
    const ShotResult shot = run_shot(ctx, rng);
    SlotTally& tally = result.slot_histogram[shot.y - 1];
    ++tally.draws;
    if (shot.reject) {
      ++tally.rejections;
      ++result.rejections;
    }
    digest = fnv1a_update(digest, static_cast<std::uint64_t>(shot.y), 4);
    digest = fnv1a_update(digest, shot.reject ? 1 : 0, 1);
  }

  result.reject_rate = static_cast<double>(result.rejections) / static_cast<double>(samples);
  result.standard_error =
      std::sqrt(result.reject_rate * (1.0 - result.reject_rate) / static_cast<double>(samples));
  std::ostringstream hex;
  hex << "fnv1a:" << std::hex << digest;
  result.transcript_digest = hex.str();
  return result;
}

}  // namespace clockham
