// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Noise-constrained l1 minimization: min ||z||_1 subject to ||Az - y||_2
// <= eta, solved by a Chambolle-Pock primal-dual splitting on the complex
// problem. The l1 norm is the sum of complex moduli, so the primal prox is
// magnitude soft-thresholding (phases are preserved); the dual prox is the
// conjugate of the feasibility-ball indicator. The problem is normalized by
// ||A|| internally, which keeps the step sizes fixed and makes the iterate
// path invariant under positive rescaling of (A, y, eta).
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "common.hpp"

namespace parcs {

struct SolverConfig {
  double eta = 0.0;
  int max_iterations = 20000;
  double primal_tol = 1e-7;
  double feasibility_tol = 1e-7;
  std::string algorithm_note = "chambolle-pock primal-dual, unit steps on the ||A||-normalized problem";
};

struct RecoveryResult {
  Vec x_hat;
  int iterations = 0;
  double final_feasibility_gap = 0.0;
  double objective = 0.0;
  bool converged = false;
};

namespace detail {

// Largest singular value by power iteration on A*A. The start vector is a
// fixed ramp so results are deterministic; the 1.001 headroom keeps the
// step-size product strictly inside the convergence region.
inline double operator_norm_estimate(const Mat& a) {
  const int n = static_cast<int>(a.cols());
  Vec v(n);
  for (int j = 0; j < n; ++j) v[j] = Complex(1.0 + 0.25 * (j % 3), 0.0);
  v /= v.norm();
  double value = 0.0;
  for (int iteration = 0; iteration < 500; ++iteration) {
    Vec w = a.adjoint() * (a * v);
    const double norm = w.norm();
    if (norm <= 0.0) return 0.0;
    const double next = std::sqrt(norm);
    w /= norm;
    const bool settled = std::abs(next - value) <= 1e-12 * next;
    value = next;
    v = w;
    if (settled) break;
  }
  return value;
}

inline double l1_norm(const Vec& z) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) total += std::abs(z[i]);
  return total;
}

// prox of tau ||.||_1 with complex moduli: shrink the magnitude, keep the phase.
inline void soft_threshold(Vec& z, double tau) {
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double magnitude = std::abs(z[i]);
    z[i] = magnitude <= tau ? Complex(0.0, 0.0) : z[i] * (1.0 - tau / magnitude);
  }
}

}  // namespace detail

inline RecoveryResult solve_bpdn(const Mat& a, const Vec& y, const SolverConfig& cfg) {
  require(y.size() == a.rows(), "measurement length does not match matrix rows");
  require(cfg.eta >= 0.0, "noise budget must be nonnegative");
  require(cfg.max_iterations >= 1, "need at least one iteration");
  require(cfg.primal_tol > 0.0 && cfg.feasibility_tol > 0.0, "tolerances must be positive");
  const int n = static_cast<int>(a.cols());
  const int m = static_cast<int>(a.rows());

  RecoveryResult result;
  const double operator_norm = detail::operator_norm_estimate(a) * 1.001;
  if (operator_norm <= 1e-300) {
    // A vanishes: z = 0 is optimal whenever y itself is within budget.
    result.x_hat = Vec::Zero(n);
    result.final_feasibility_gap = std::max(0.0, y.norm() - cfg.eta);
    result.objective = 0.0;
    result.converged = result.final_feasibility_gap <= cfg.feasibility_tol;
    return result;
  }

  // Normalized problem: ||(A/L) z - y/L|| <= eta/L with unit steps.
  const double inv_norm = 1.0 / operator_norm;
  const Mat a_hat = a * inv_norm;
  const Vec y_hat = y * inv_norm;
  const double eta_hat = cfg.eta * inv_norm;
  const double tau = 1.0;
  const double sigma = 1.0;

  Vec z = Vec::Zero(n);
  Vec dual = Vec::Zero(m);
  Vec image = Vec::Zero(m);
  Vec image_prev = Vec::Zero(m);

  Vec best = Vec::Zero(n);
  double best_objective = std::numeric_limits<double>::infinity();
  bool best_feasible = false;
  int streak = 0;
  bool converged = false;
  int iterations = 0;

  for (int k = 0; k < cfg.max_iterations; ++k) {
    ++iterations;
    // Dual ascent against the extrapolated image 2*Az_k - Az_{k-1}.
    Vec shifted = dual + sigma * (2.0 * image - image_prev) - sigma * y_hat;
    if (eta_hat > 0.0) {
      const double norm = shifted.norm();
      const double scale = norm > 0.0 ? std::max(0.0, 1.0 - sigma * eta_hat / norm) : 0.0;
      shifted *= scale;
    }
    dual = shifted;
    Vec z_next = z - tau * (a_hat.adjoint() * dual);
    detail::soft_threshold(z_next, tau);
    image_prev = image;
    image = a_hat * z_next;

    const double gap = std::max(0.0, (image - y_hat).norm() - eta_hat) * operator_norm;
    const double change = (z_next - z).norm();
    const double scale = std::max(1.0, z_next.norm());
    z = z_next;

    if (gap <= cfg.feasibility_tol) {
      const double objective = detail::l1_norm(z);
      if (!best_feasible || objective < best_objective) {
        best_feasible = true;
        best = z;
        best_objective = objective;
      }
      if (change <= cfg.primal_tol * scale) {
        ++streak;
        if (streak >= 2) {
          converged = true;
          break;
        }
      } else {
        streak = 0;
      }
    } else {
      streak = 0;
    }
  }

  if (best_feasible) {
    result.x_hat = best;
    result.objective = best_objective;
  } else {
    result.x_hat = z;
    result.objective = detail::l1_norm(z);
  }
  // Reported gap is measured on the caller's (A, y, eta), not the scaled copy.
  result.final_feasibility_gap = std::max(0.0, (a * result.x_hat - y).norm() - cfg.eta);
  result.iterations = iterations;
  result.converged = converged;
  return result;
}

// ||x - x_hat|| / ||x||, with the zero-signal guard ||x_hat||.
inline double relative_error(const Vec& x, const Vec& x_hat) {
  require(x.size() == x_hat.size(), "vectors must have equal length");
  const double reference = x.norm();
  if (reference == 0.0) return x_hat.norm();
  return (x - x_hat).norm() / reference;
}

inline bool success(const Vec& x, const Vec& x_hat, double tol) {
  require(tol > 0.0, "success tolerance must be positive");
  return relative_error(x, x_hat) < tol;
}

// l1 tail: the sum of the N - s smallest magnitudes.
inline double sigma_s(const Vec& x, int s) {
  require(s >= 0, "sparsity must be nonnegative");
  const int n = static_cast<int>(x.size());
  if (s >= n) return 0.0;
  std::vector<double> magnitudes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) magnitudes[static_cast<std::size_t>(i)] = std::abs(x[i]);
  std::sort(magnitudes.begin(), magnitudes.end());
  double tail = 0.0;
  for (int i = 0; i < n - s; ++i) tail += magnitudes[static_cast<std::size_t>(i)];
  return tail;
}

}  // namespace parcs
