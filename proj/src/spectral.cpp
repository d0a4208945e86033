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

#include "clockham/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "clockham/errors.hpp"
#include "clockham/rng.hpp"

#ifdef CLOCKHAM_HAVE_LAPACKE
#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#endif

namespace clockham {

namespace {

ClockedState random_unit_vector(std::int64_t dim, std::mt19937_64& rng) {
  ClockedState v(dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    v(i) = std::complex<double>(2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0);
  }
  v.normalize();
  return v;
}

// Smallest eigenpair of the symmetric tridiagonal matrix given by diagonal
// alpha and off-diagonal beta.
void smallest_tridiagonal_pair(const std::vector<double>& alpha, const std::vector<double>& beta,
                               double& value, Eigen::VectorXd& vec) {
  const int k = static_cast<int>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    t(i, i) = alpha[i];
    if (i + 1 < k) {
      t(i, i + 1) = beta[i];
      t(i + 1, i) = beta[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  value = solver.eigenvalues()(0);
  vec = solver.eigenvectors().col(0);
}

}  // namespace

EigenPair min_eigenvalue_dense(const CircuitHamiltonian& h) {
  Eigen::MatrixXcd m = materialize_dense(h);
  const std::int64_t dim = m.rows();

  EigenPair pair;
#ifdef CLOCKHAM_HAVE_LAPACKE
  std::vector<double> eigenvalues(dim);
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(dim), m.data(),
                     static_cast<lapack_int>(dim), eigenvalues.data());
  if (info != 0) {
    throw SolverError("dense Hermitian diagonalization failed (zheevd info " +
                      std::to_string(info) + ")");
  }
  pair.value = eigenvalues[0];
  pair.vector = m.col(0);
#else
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw SolverError("dense Hermitian diagonalization failed");
  }
  pair.value = solver.eigenvalues()(0);
  pair.vector = solver.eigenvectors().col(0);
#endif
  if (pair.value < -1e-10) {
    throw SolverError("smallest eigenvalue " + std::to_string(pair.value) +
                      " is negative beyond tolerance; operator should be PSD");
  }
  pair.vector.normalize();
  pair.iterations = 0;
  return pair;
}

EigenPair min_eigenvalue_iterative(const CircuitHamiltonian& h, const IterativeOptions& opts) {
  if (opts.tol <= 0.0) {
    throw ParseError("iterative tolerance must be positive");
  }
  const std::int64_t dim = h.dimension();
  std::uint64_t restart_counter = 0;
  std::mt19937_64 rng = derive_stream(opts.seed, restart_counter++);

  std::vector<ClockedState> basis;  // kept for full reorthogonalization
  basis.reserve(std::min<std::int64_t>(dim, opts.max_iterations));
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples basis[j] and basis[j+1]

  ClockedState v = random_unit_vector(dim, rng);
  basis.push_back(v);

  int matvecs = 0;
  double theta = 0.0;
  Eigen::VectorXd ritz;

  auto finish = [&](double candidate_value, const Eigen::VectorXd& weights) -> EigenPair {
    ClockedState y = ClockedState::Zero(dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      y += weights(static_cast<Eigen::Index>(i)) * basis[i];
    }
    y.normalize();
    const double residual = (apply_hamiltonian(h, y) - candidate_value * y).norm();
    if (residual > opts.tol) {
      throw SolverError("Lanczos did not converge: residual " + std::to_string(residual) +
                        " above tolerance " + std::to_string(opts.tol) + " after " +
                        std::to_string(matvecs) + " iterations");
    }
    EigenPair pair;
    pair.value = candidate_value;
    pair.vector = std::move(y);
    pair.iterations = matvecs;
    return pair;
  };

  while (matvecs < opts.max_iterations) {
    ClockedState w = apply_hamiltonian(h, v);
    ++matvecs;
    if (!beta.empty() && beta.back() != 0.0) {
      w -= beta.back() * basis[basis.size() - 2];
    }
    const double a = std::real(v.dot(w));
    alpha.push_back(a);
    w -= a * v;
    // Full reorthogonalization, twice over, removes ghost copies of
    // converged Ritz values at these dimensions.
    for (int pass = 0; pass < 2; ++pass) {
      for (const ClockedState& u : basis) {
        w -= u.dot(w) * u;
      }
    }
    const double b = w.norm();

    smallest_tridiagonal_pair(alpha, beta, theta, ritz);
    const double estimate = b * std::abs(ritz(ritz.size() - 1));
    if (estimate <= 0.5 * opts.tol || static_cast<std::int64_t>(basis.size()) == dim) {
      // Cheap bound looks converged (or the space is exhausted); confirm
      // with the true residual.
      try {
        return finish(theta, ritz);
      } catch (const SolverError&) {
        if (static_cast<std::int64_t>(basis.size()) == dim) {
          throw;
        }
        // keep iterating
      }
    }

    if (b < 1e-13) {
      // Invariant subspace found without convergence: extend with a fresh
      // direction orthogonal to everything seen so far.
      if (static_cast<std::int64_t>(basis.size()) >= dim) {
        return finish(theta, ritz);
      }
      std::mt19937_64 restart_rng = derive_stream(opts.seed, restart_counter++);
      ClockedState fresh = random_unit_vector(dim, restart_rng);
      for (int pass = 0; pass < 2; ++pass) {
        for (const ClockedState& u : basis) {
          fresh -= u.dot(fresh) * u;
        }
      }
      fresh.normalize();
      beta.push_back(0.0);
      basis.push_back(fresh);
      v = fresh;
    } else {
      w /= b;
      beta.push_back(b);
      basis.push_back(w);
      v = w;
    }
  }

  smallest_tridiagonal_pair(alpha, beta, theta, ritz);
  return finish(theta, ritz);  // throws with the final residual if unconverged
}

GapVerdict classify_gap(double lambda_min, double bound) {
  if (lambda_min <= kZeroTol) {
    return GapVerdict::CompletenessLike;
  }
  if (lambda_min >= bound - 1e-9) {
    return GapVerdict::SoundnessLike;
  }
  return GapVerdict::Violation;
}

SpectralReport gap_report(const Circuit& circuit, const std::string& input_bits,
                          const GapOptions& opts) {
  const CircuitHamiltonian h(circuit, input_bits, opts.include_ancilla_checks);

  const bool dense = opts.method == GapOptions::Method::Dense ||
                     (opts.method == GapOptions::Method::Auto && h.dimension() <= kDenseCap);
  const EigenPair pair = dense ? min_eigenvalue_dense(h) : min_eigenvalue_iterative(h, opts.iterative);

  SpectralReport report;
  report.lambda_min = pair.value;
  report.method = dense ? SolveMethod::Dense : SolveMethod::Iterative;
  report.iterations = pair.iterations;
  report.residual = (apply_hamiltonian(h, pair.vector) - pair.value * pair.vector).norm();
  report.bound = soundness_bound(h.num_steps());
  report.verdict = classify_gap(report.lambda_min, report.bound);
  report.num_qubits = h.num_qubits();
  report.num_steps = h.num_steps();
  report.num_input_bits = h.num_input_bits();
  report.dimension = h.dimension();
  return report;
}

std::string to_string(SolveMethod method) {
  return method == SolveMethod::Dense ? "dense" : "iterative";
}

std::string to_string(GapVerdict verdict) {
  switch (verdict) {
    case GapVerdict::CompletenessLike:
      return "completeness_like";
    case GapVerdict::SoundnessLike:
      return "soundness_like";
    case GapVerdict::Violation:
      return "violation";
  }
  return "?";
}

}  // namespace clockham
