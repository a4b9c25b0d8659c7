// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Sensor-profile sets: C matrices H_1..H_C describing what each sensor sees,
// with the joint near-isometry extremes (alpha, beta) of the Gram average
// C^-1 sum H_c* H_c computed eagerly so downstream constants can divide by
// sqrt(alpha) safely. Diagonal and circulant sets never materialize their
// matrices unless explicitly requested.
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "rng.hpp"
#include "transforms.hpp"

namespace parcs {

enum class ProfileStructure { Diagonal, Circulant, Dense };

class ProfileSet {
 public:
  int sensor_count() const { return static_cast<int>(count_); }
  int dimension() const { return n_; }
  ProfileStructure structure() const { return structure_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::string& family() const { return family_; }

  const std::vector<Vec>& diagonals() const {
    require(structure_ == ProfileStructure::Diagonal, "diagonals: set is not diagonal");
    return vectors_;
  }

  const std::vector<Vec>& eigenvalues() const {
    require(structure_ == ProfileStructure::Circulant, "eigenvalues: set is not circulant");
    return vectors_;
  }

  const std::vector<Mat>& dense_matrices() const {
    require(structure_ == ProfileStructure::Dense, "dense_matrices: set is not dense");
    return matrices_;
  }

  // Diagonal and circulant profiles commute with their adjoint.
  bool is_normal() const { return structure_ != ProfileStructure::Dense; }

  // Materialize H_c. Circulant profiles expand via their first column.
  Mat matrix(int c) const {
    check_sensor(c);
    switch (structure_) {
      case ProfileStructure::Diagonal: {
        Mat h = Mat::Zero(n_, n_);
        h.diagonal() = vectors_[static_cast<std::size_t>(c)];
        return h;
      }
      case ProfileStructure::Circulant: {
        const Vec col = circulant_first_column(c);
        Mat h(n_, n_);
        for (int r = 0; r < n_; ++r) {
          for (int j = 0; j < n_; ++j) h(r, j) = col[(r - j + n_) % n_];
        }
        return h;
      }
      case ProfileStructure::Dense:
        return matrices_[static_cast<std::size_t>(c)];
    }
    throw RuntimeFailure("matrix: unreachable structure");
  }

  // H_c x along the fast path for the set's structure.
  Vec apply(int c, const Vec& x) const {
    check_sensor(c);
    require(x.size() == n_, "apply: vector length does not match profile dimension");
    switch (structure_) {
      case ProfileStructure::Diagonal:
        return vectors_[static_cast<std::size_t>(c)].cwiseProduct(x);
      case ProfileStructure::Circulant:
        return unitary_idft(
            Vec(vectors_[static_cast<std::size_t>(c)].cwiseProduct(unitary_dft(x))));
      case ProfileStructure::Dense:
        return matrices_[static_cast<std::size_t>(c)] * x;
    }
    throw RuntimeFailure("apply: unreachable structure");
  }

  static ProfileSet diagonal(std::vector<Vec> h, std::string family = "custom-diagonal",
                             std::optional<std::pair<double, double>> exact_bounds = {}) {
    return ProfileSet(ProfileStructure::Diagonal, std::move(h), {}, std::move(family),
                      exact_bounds);
  }

  static ProfileSet circulant(std::vector<Vec> eigenvalues,
                              std::string family = "custom-circulant") {
    return ProfileSet(ProfileStructure::Circulant, std::move(eigenvalues), {},
                      std::move(family), {});
  }

  static ProfileSet dense(std::vector<Mat> h, std::string family = "custom-dense") {
    return ProfileSet(ProfileStructure::Dense, {}, std::move(h), std::move(family), {});
  }

 private:
  ProfileSet(ProfileStructure structure, std::vector<Vec> vectors, std::vector<Mat> matrices,
             std::string family, std::optional<std::pair<double, double>> exact_bounds)
      : structure_(structure),
        vectors_(std::move(vectors)),
        matrices_(std::move(matrices)),
        family_(std::move(family)) {
    if (structure_ == ProfileStructure::Dense) {
      require(!matrices_.empty(), "profile set needs at least one sensor");
      count_ = matrices_.size();
      n_ = static_cast<int>(matrices_.front().rows());
      for (const auto& m : matrices_) {
        require(m.rows() == n_ && m.cols() == n_, "profiles must be square and equally sized");
      }
    } else {
      require(!vectors_.empty(), "profile set needs at least one sensor");
      count_ = vectors_.size();
      n_ = static_cast<int>(vectors_.front().size());
      require(n_ >= 1, "profile dimension must be positive");
      for (const auto& v : vectors_) {
        require(v.size() == n_, "profiles must share one dimension");
      }
    }
    if (exact_bounds) {
      alpha_ = exact_bounds->first;
      beta_ = exact_bounds->second;
    } else {
      compute_bounds();
    }
    require(alpha_ > 1e-14, "singular Gram average: joint near-isometry needs alpha > 0");
  }

  void compute_bounds() {
    if (structure_ == ProfileStructure::Dense) {
      Mat gram = Mat::Zero(n_, n_);
      for (const auto& m : matrices_) gram += m.adjoint() * m;
      gram /= static_cast<double>(count_);
      gram = (0.5 * (gram + Mat(gram.adjoint()))).eval();
      Eigen::SelfAdjointEigenSolver<Mat> solver(gram, Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success) {
        throw RuntimeFailure("eigendecomposition of the Gram average failed");
      }
      alpha_ = solver.eigenvalues().minCoeff();
      beta_ = solver.eigenvalues().maxCoeff();
      return;
    }
    // Diagonal and circulant Gram averages are diagonal in the right basis,
    // so the extremes are entrywise min/max of C^-1 sum |h_c|^2.
    RealVec total = RealVec::Zero(n_);
    for (const auto& v : vectors_) total += v.cwiseAbs2().real();
    total /= static_cast<double>(count_);
    alpha_ = total.minCoeff();
    beta_ = total.maxCoeff();
  }

  Vec circulant_first_column(int c) const {
    // H = F* diag(lambda) F has first column IDFT(lambda)/n.
    auto a = detail::to_std(vectors_[static_cast<std::size_t>(c)]);
    detail::dft_any(a, +1);
    Vec col = detail::from_std(a);
    return col / static_cast<double>(n_);
  }

  void check_sensor(int c) const {
    require(c >= 0 && c < sensor_count(), "sensor index out of range");
  }

  ProfileStructure structure_;
  std::vector<Vec> vectors_;
  std::vector<Mat> matrices_;
  std::string family_;
  std::size_t count_ = 0;
  int n_ = 0;
  double alpha_ = 0;
  double beta_ = 0;
};

// Extreme eigenvalues (alpha, beta) of the Gram average C^-1 sum H_c* H_c.
inline std::pair<double, double> joint_near_isometry(const ProfileSet& p) {
  return {p.alpha(), p.beta()};
}

// Non-overlapping profiles: H_c = sqrt(C) * P_{I_c} on equal index blocks.
inline ProfileSet perfectly_partitioned(int sensors, int n) {
  require(sensors >= 1 && n >= 1, "perfectly_partitioned: need C >= 1 and n >= 1");
  require(n % sensors == 0, "perfectly_partitioned: C must divide n");
  const int width = n / sensors;
  const double value = std::sqrt(static_cast<double>(sensors));
  std::vector<Vec> h(static_cast<std::size_t>(sensors), Vec::Zero(n));
  for (int c = 0; c < sensors; ++c) {
    for (int i = c * width; i < (c + 1) * width; ++i) {
      h[static_cast<std::size_t>(c)][i] = Complex(value, 0);
    }
  }
  return ProfileSet::diagonal(std::move(h), "partitioned", std::pair{1.0, 1.0});
}

// Overlapping bumps: half-overlapped sine windows (a raised-cosine partition
// of unity) times the block phase ramp, renormalized pointwise so the Gram
// average is exactly the identity.
inline ProfileSet banded_cosine(int sensors, int n) {
  require(sensors >= 2, "banded_cosine: need at least two sensors");
  require(n % sensors == 0, "banded_cosine: C must divide n");
  const int width = n / sensors;
  const int window = 2 * width;
  const double scale = std::sqrt(static_cast<double>(sensors));
  std::vector<Vec> h(static_cast<std::size_t>(sensors), Vec::Zero(n));
  for (int c = 0; c < sensors; ++c) {
    const int start = c * width - width / 2;
    for (int t = 0; t < window; ++t) {
      const int i = ((start + t) % n + n) % n;
      const double magnitude = std::sin(std::numbers::pi * t / window);
      const double theta = c * 2.0 * std::numbers::pi / sensors +
                           (i + 1) * 2.0 * std::numbers::pi / (static_cast<double>(n) * sensors);
      h[static_cast<std::size_t>(c)][i] = scale * magnitude * unit_phase(theta);
    }
  }
  RealVec total = RealVec::Zero(n);
  for (const auto& v : h) total += v.cwiseAbs2().real();
  total /= static_cast<double>(sensors);
  for (auto& v : h) {
    for (int i = 0; i < n; ++i) v[i] /= std::sqrt(total[i]);
  }
  return ProfileSet::diagonal(std::move(h), "banded");
}

// Dense-support unimodular profiles: i.i.d. uniform phases on every entry.
inline ProfileSet globally_spread(int sensors, int n, std::uint64_t seed) {
  require(sensors >= 1 && n >= 1, "globally_spread: need C >= 1 and n >= 1");
  std::vector<Vec> h(static_cast<std::size_t>(sensors), Vec(n));
  for (int c = 0; c < sensors; ++c) {
    RandomStream stream(derive_seed(seed, static_cast<std::uint64_t>(c)));
    for (int i = 0; i < n; ++i) {
      h[static_cast<std::size_t>(c)][i] = unit_phase(stream.uniform_phase());
    }
  }
  return ProfileSet::diagonal(std::move(h), "global", std::pair{1.0, 1.0});
}

// Independent Rademacher diagonals.
inline ProfileSet rademacher_diagonal(int sensors, int n, std::uint64_t seed) {
  require(sensors >= 1 && n >= 1, "rademacher_diagonal: need C >= 1 and n >= 1");
  std::vector<Vec> h(static_cast<std::size_t>(sensors), Vec(n));
  for (int c = 0; c < sensors; ++c) {
    RandomStream stream(derive_seed(seed, static_cast<std::uint64_t>(c)));
    for (int i = 0; i < n; ++i) {
      h[static_cast<std::size_t>(c)][i] = Complex(stream.rademacher(), 0);
    }
  }
  return ProfileSet::diagonal(std::move(h), "rademacher", std::pair{1.0, 1.0});
}

// Circulant profiles H_c = F* diag(lambda_c) F from explicit eigenvalues.
inline ProfileSet circulant_from_eigs(std::vector<Vec> eigenvalues,
                                      std::string family = "custom-circulant") {
  return ProfileSet::circulant(std::move(eigenvalues), std::move(family));
}

// Largest number of sensors whose supports intersect a single sensor's
// support; entries count as nonzero above 1e-12 in modulus.
inline int overlap_degree(const ProfileSet& p) {
  require(p.structure() == ProfileStructure::Diagonal,
          "overlap_degree: defined for diagonal profile sets");
  const auto& h = p.diagonals();
  const int sensors = p.sensor_count();
  const int n = p.dimension();
  std::vector<std::vector<bool>> support(static_cast<std::size_t>(sensors),
                                         std::vector<bool>(static_cast<std::size_t>(n)));
  for (int c = 0; c < sensors; ++c) {
    for (int i = 0; i < n; ++i) {
      support[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] =
          std::abs(h[static_cast<std::size_t>(c)][i]) > 1e-12;
    }
  }
  int q = 0;
  for (int c = 0; c < sensors; ++c) {
    int overlaps = 0;
    for (int d = 0; d < sensors; ++d) {
      bool meets = false;
      for (int i = 0; i < n && !meets; ++i) {
        meets = support[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] &&
                support[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
      }
      overlaps += meets ? 1 : 0;
    }
    q = std::max(q, overlaps);
  }
  return q;
}

// CLI-facing factory; `circulant` moves the family's construction into the
// eigenvalue domain (profiles become H_c = F* diag(lambda_c) F).
inline ProfileSet make_profile_set(const std::string& family, int sensors, int n,
                                   std::uint64_t seed, bool circulant = false) {
  ProfileSet base = [&] {
    if (family == "partitioned") return perfectly_partitioned(sensors, n);
    if (family == "banded") return banded_cosine(sensors, n);
    if (family == "global") return globally_spread(sensors, n, seed);
    if (family == "rademacher") return rademacher_diagonal(sensors, n, seed);
    throw InvalidInput("unknown profile family: " + family);
  }();
  if (!circulant) return base;
  return circulant_from_eigs(base.diagonals(), base.family());
}

}  // namespace parcs
