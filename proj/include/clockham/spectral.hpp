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

#include "clockham/hamiltonian.hpp"

namespace clockham {

enum class SolveMethod { Dense, Iterative };
enum class GapVerdict { CompletenessLike, SoundnessLike, Violation };

/// Certified spectral floor, 1/(2(T+1)^3): rejecting instances must sit at
/// or above it, accepting instances at zero.
inline double soundness_bound(int num_steps) {
  const double tp1 = static_cast<double>(num_steps) + 1.0;
  return 1.0 / (2.0 * tp1 * tp1 * tp1);
}

/// Ground eigenvalues below this are classified as "exactly zero". The
/// smallest bound at desk scale (T <= 32) is above 1.3e-5, so the two
/// regimes cannot blur.
inline constexpr double kZeroTol = 1e-9;

struct SpectralReport {
  double lambda_min = 0.0;
  SolveMethod method = SolveMethod::Dense;
  int iterations = 0;      // matrix-vector products; 0 for the dense path
  double residual = 0.0;   // ||H v - lambda v|| for the returned pair
  double bound = 0.0;      // soundness_bound(T)
  GapVerdict verdict = GapVerdict::Violation;
  int num_qubits = 0;
  int num_steps = 0;
  int num_input_bits = 0;
  std::int64_t dimension = 0;
};

struct EigenPair {
  double value = 0.0;
  ClockedState vector;
  int iterations = 0;
};

/// Full Hermitian diagonalization of the materialized operator; dimension
/// must be within kDenseCap. Returns the smallest eigenvalue with a unit
/// eigenvector (any vector in the ground space when degenerate).
EigenPair min_eigenvalue_dense(const CircuitHamiltonian& h);

struct IterativeOptions {
  double tol = 1e-8;          // absolute residual ||Hv - lambda v||
  int max_iterations = 5000;  // matvec budget
  std::uint64_t seed = 1;     // start-vector stream
};

/// Lanczos with full reorthogonalization, driven purely through
/// apply_hamiltonian. Deterministic for a fixed seed. Throws SolverError if
/// the residual does not reach tol within the budget.
EigenPair min_eigenvalue_iterative(const CircuitHamiltonian& h,
                                   const IterativeOptions& opts = {});

struct GapOptions {
  // Auto picks dense when the dimension fits the cap, iterative otherwise.
  enum class Method { Auto, Dense, Iterative };
  Method method = Method::Auto;
  bool include_ancilla_checks = true;
  IterativeOptions iterative;
};

/// Builds the instance, extracts the smallest eigenvalue, and classifies it
/// against the promise gap.
SpectralReport gap_report(const Circuit& circuit, const std::string& input_bits,
                          const GapOptions& opts = {});

/// Classification shared by gap_report and its callers: completeness-like
/// when lambda_min <= kZeroTol, soundness-like when it clears the bound
/// (with 1e-9 numerical slack), violation in the forbidden middle zone.
GapVerdict classify_gap(double lambda_min, double bound);

std::string to_string(SolveMethod method);
std::string to_string(GapVerdict verdict);

}  // namespace clockham
