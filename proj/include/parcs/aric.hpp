// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Empirical asymmetric restricted isometry constants. The exhaustive path
// enumerates column subsets in lexicographic order (chunked by combinatorial
// unranking so parallel runs stay deterministic); the sampled path tracks
// running extremes of the Rayleigh quotient over random sparse vectors, so
// its alpha only ever over-estimates and its beta only ever under-estimates
// the exact constants.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "common.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace parcs {

enum class AricMethod { Exhaustive, Sampled };

struct AricEstimate {
  int s = 0;
  double alpha_s = 0.0;
  double beta_s = 0.0;
  AricMethod method = AricMethod::Exhaustive;
  std::uint64_t supports_checked = 0;
};

inline constexpr std::uint64_t kExhaustiveSubsetGuard = 1000000;

namespace detail {

// binom(n, k), capped so the guard comparison cannot overflow.
inline std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: result * (n - k + i) is divisible by i.
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (result > cap) return cap + 1;
  }
  return result;
}

// Subset of the given lexicographic rank among all s-subsets of {0..n-1}.
inline std::vector<int> unrank_subset(int n, int s, std::uint64_t rank) {
  std::vector<int> subset(static_cast<std::size_t>(s));
  int base = 0;
  for (int k = 0; k < s; ++k) {
    for (int v = base;; ++v) {
      const std::uint64_t with_v =
          binomial_capped(n - 1 - v, s - 1 - k, std::numeric_limits<std::uint64_t>::max() / 2);
      if (rank < with_v) {
        subset[static_cast<std::size_t>(k)] = v;
        base = v + 1;
        break;
      }
      rank -= with_v;
    }
  }
  return subset;
}

inline bool next_subset(std::vector<int>& subset, int n) {
  const int s = static_cast<int>(subset.size());
  for (int i = s - 1; i >= 0; --i) {
    if (subset[static_cast<std::size_t>(i)] < n - s + i) {
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j) {
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

inline std::pair<double, double> subset_extremes(const Mat& a, const std::vector<int>& subset) {
  const int s = static_cast<int>(subset.size());
  Mat columns(a.rows(), s);
  for (int k = 0; k < s; ++k) columns.col(k) = a.col(subset[static_cast<std::size_t>(k)]);
  Eigen::JacobiSVD<Mat> svd(columns);
  const auto& sv = svd.singularValues();
  const double top = sv[0];
  // Rank-deficient shapes have implicit zero singular values.
  const double bottom = s > a.rows() ? 0.0 : sv[sv.size() - 1];
  return {bottom * bottom, top * top};
}

}  // namespace detail

// Exact constants of Definition-2.3 type: extremes of the squared singular
// values over every s-column submatrix.
inline AricEstimate aric_exhaustive(const Mat& a, int s, int threads = 1) {
  const int n = static_cast<int>(a.cols());
  require(s >= 1 && s <= n, "sparsity order must satisfy 1 <= s <= N");
  const std::uint64_t total = detail::binomial_capped(n, s, kExhaustiveSubsetGuard);
  require(total <= kExhaustiveSubsetGuard,
          "too many column subsets for exhaustive enumeration; use the sampled estimator");

  const int worker_hint = threads == 0 ? default_thread_count() : threads;
  const std::uint64_t chunks =
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(std::max(worker_hint, 1)));
  std::vector<double> chunk_alpha(chunks, 0.0);
  std::vector<double> chunk_beta(chunks, 0.0);
  parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t chunk) {
    const std::uint64_t begin = total * chunk / chunks;
    const std::uint64_t end = total * (chunk + 1) / chunks;
    if (begin >= end) return;
    std::vector<int> subset = detail::unrank_subset(n, s, begin);
    double local_alpha = std::numeric_limits<double>::infinity();
    double local_beta = 0.0;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const auto [low, high] = detail::subset_extremes(a, subset);
      local_alpha = std::min(local_alpha, low);
      local_beta = std::max(local_beta, high);
      if (rank + 1 < end) detail::next_subset(subset, n);
    }
    chunk_alpha[chunk] = local_alpha;
    chunk_beta[chunk] = local_beta;
  });
  AricEstimate estimate;
  estimate.s = s;
  estimate.method = AricMethod::Exhaustive;
  estimate.supports_checked = total;
  estimate.alpha_s = *std::min_element(chunk_alpha.begin(), chunk_alpha.end());
  estimate.beta_s = *std::max_element(chunk_beta.begin(), chunk_beta.end());
  return estimate;
}

// Running extremes of ||A x||^2 / ||x||^2 over random s-sparse x with
// uniform support and Gaussian coefficients. Extending the trial count with
// the same seed only tightens the reported interval.
inline AricEstimate aric_sampled(const Mat& a, int s, std::uint64_t trials, std::uint64_t seed) {
  const int n = static_cast<int>(a.cols());
  require(s >= 1 && s <= n, "sparsity order must satisfy 1 <= s <= N");
  require(trials >= 1, "need at least one trial");
  RandomStream stream(seed);
  std::vector<int> indices(static_cast<std::size_t>(n));
  std::iota(indices.begin(), indices.end(), 0);
  Mat columns(a.rows(), s);
  Vec coeff(s);
  double alpha = std::numeric_limits<double>::infinity();
  double beta = 0.0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (int k = 0; k < s; ++k) {
      const auto j = k + static_cast<int>(stream.uniform_below(static_cast<std::uint64_t>(n - k)));
      std::swap(indices[static_cast<std::size_t>(k)], indices[static_cast<std::size_t>(j)]);
    }
    std::sort(indices.begin(), indices.begin() + s);
    for (int k = 0; k < s; ++k) {
      columns.col(k) = a.col(indices[static_cast<std::size_t>(k)]);
      coeff[k] = Complex(stream.gaussian(), stream.gaussian());
    }
    const double quotient = (columns * coeff).squaredNorm() / coeff.squaredNorm();
    alpha = std::min(alpha, quotient);
    beta = std::max(beta, quotient);
  }
  AricEstimate estimate;
  estimate.s = s;
  estimate.method = AricMethod::Sampled;
  estimate.supports_checked = trials;
  estimate.alpha_s = alpha;
  estimate.beta_s = beta;
  return estimate;
}

// Stable recovery threshold: beta_{2s}/alpha_{2s} < (sqrt(2)+1)/(sqrt(2)-1).
inline double recovery_ratio_threshold() {
  return (std::sqrt(2.0) + 1.0) / (std::sqrt(2.0) - 1.0);
}

inline bool recovery_sufficient(const AricEstimate& estimate) {
  require(estimate.alpha_s >= 0.0 && estimate.beta_s >= estimate.alpha_s,
          "malformed ARIC estimate");
  if (estimate.alpha_s == 0.0) return false;
  return estimate.beta_s / estimate.alpha_s < recovery_ratio_threshold();
}

// Rescaling that symmetrizes the ARIP bounds; reported for diagnostics only.
inline double symmetric_scaling(const AricEstimate& estimate) {
  return std::sqrt(2.0 / (estimate.alpha_s + estimate.beta_s));
}

}  // namespace parcs
