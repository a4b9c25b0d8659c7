// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "helpers.hpp"
#include "parcs/profiles.hpp"
#include "parcs/rng.hpp"

using namespace parcs;

namespace {

// Independent check of the Gram extremes: stack the profiles and take
// squared singular values of the C n-by-n blocks over sqrt(C).
std::pair<double, double> gram_extremes_by_svd(const ProfileSet& p) {
  const int n = p.dimension();
  const int sensors = p.sensor_count();
  Mat stacked(static_cast<Eigen::Index>(sensors) * n, n);
  for (int c = 0; c < sensors; ++c) {
    stacked.middleRows(static_cast<Eigen::Index>(c) * n, n) = p.matrix(c);
  }
  stacked /= std::sqrt(static_cast<double>(sensors));
  Eigen::JacobiSVD<Mat> svd(stacked);
  const auto& sv = svd.singularValues();
  return {sv.minCoeff() * sv.minCoeff(), sv.maxCoeff() * sv.maxCoeff()};
}

}  // namespace

TEST_CASE("perfectly partitioned blocks carry sqrt(C) on disjoint supports") {
  const ProfileSet p = perfectly_partitioned(4, 8);
  REQUIRE(p.sensor_count() == 4);
  REQUIRE(p.dimension() == 8);
  REQUIRE(p.structure() == ProfileStructure::Diagonal);
  REQUIRE(p.alpha() == 1.0);
  REQUIRE(p.beta() == 1.0);
  const auto& h = p.diagonals();
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < 8; ++i) {
      const Complex expected = (i / 2 == c) ? Complex(2.0, 0.0) : Complex(0.0, 0.0);
      REQUIRE(h[static_cast<std::size_t>(c)][i] == expected);
    }
  }
  REQUIRE(overlap_degree(p) == 1);
}

TEST_CASE("single sensor partition is the identity profile") {
  const ProfileSet p = perfectly_partitioned(1, 8);
  const auto& h = p.diagonals();
  for (int i = 0; i < 8; ++i) REQUIRE(h[0][i] == Complex(1.0, 0.0));
  REQUIRE(p.alpha() == 1.0);
  REQUIRE(p.beta() == 1.0);
}

TEST_CASE("partitioned profiles require C to divide n") {
  REQUIRE_THROWS_AS(perfectly_partitioned(3, 8), InvalidInput);
  REQUIRE_THROWS_AS(banded_cosine(3, 8), InvalidInput);
}

TEST_CASE("banded cosine windows tile the line with overlap degree 3") {
  const ProfileSet p4 = banded_cosine(4, 256);
  const ProfileSet p8 = banded_cosine(8, 256);
  REQUIRE(overlap_degree(p4) == 3);
  REQUIRE(overlap_degree(p8) == 3);
  for (const ProfileSet* p : {&p4, &p8}) {
    REQUIRE(p->alpha() >= 1.0 - 1e-10);
    REQUIRE(p->beta() <= 1.0 + 1e-10);
  }
}

TEST_CASE("banded cosine windows have compact support") {
  const ProfileSet p = banded_cosine(2, 8);
  const auto& h = p.diagonals();
  for (int c = 0; c < 2; ++c) {
    int nonzero = 0;
    for (int i = 0; i < 8; ++i) {
      if (std::abs(h[static_cast<std::size_t>(c)][i]) > 1e-12) ++nonzero;
    }
    REQUIRE(nonzero == 7);
  }
  REQUIRE_THROWS_AS(banded_cosine(1, 8), InvalidInput);
}

TEST_CASE("globally spread profiles are unimodular with exact unit bounds") {
  const ProfileSet p = globally_spread(4, 64, 17);
  REQUIRE(p.alpha() == 1.0);
  REQUIRE(p.beta() == 1.0);
  const auto& h = p.diagonals();
  for (const auto& v : h) {
    for (int i = 0; i < 64; ++i) REQUIRE(std::abs(v[i]) == 1.0);
  }
  const ProfileSet again = globally_spread(4, 64, 17);
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < 64; ++i) {
      REQUIRE(h[static_cast<std::size_t>(c)][i] == again.diagonals()[static_cast<std::size_t>(c)][i]);
    }
  }
  const ProfileSet other = globally_spread(4, 64, 18);
  bool differs = false;
  for (int i = 0; i < 64 && !differs; ++i) differs = h[0][i] != other.diagonals()[0][i];
  REQUIRE(differs);
}

TEST_CASE("rademacher diagonals are exactly plus or minus one") {
  const ProfileSet p = rademacher_diagonal(3, 32, 5);
  REQUIRE(p.alpha() == 1.0);
  REQUIRE(p.beta() == 1.0);
  bool saw_minus = false;
  for (const auto& v : p.diagonals()) {
    for (int i = 0; i < 32; ++i) {
      REQUIRE((v[i] == Complex(1.0, 0.0) || v[i] == Complex(-1.0, 0.0)));
      saw_minus = saw_minus || v[i] == Complex(-1.0, 0.0);
    }
  }
  REQUIRE(saw_minus);
}

TEST_CASE("circulant profiles expand to cyclic shift matrices") {
  RandomStream stream(99);
  std::vector<Vec> eigs(3, Vec(16));
  for (auto& v : eigs) {
    for (int i = 0; i < 16; ++i) v[i] = Complex(stream.gaussian(), stream.gaussian()) + Complex(3.0, 0.0);
  }
  const ProfileSet p = circulant_from_eigs(eigs);
  REQUIRE(p.structure() == ProfileStructure::Circulant);
  for (int c = 0; c < 3; ++c) {
    const Mat h = p.matrix(c);
    for (int r = 0; r < 16; ++r) {
      for (int j = 0; j < 16; ++j) {
        REQUIRE(std::abs(h(r, j) - h((r + 1) % 16, (j + 1) % 16)) < 1e-10);
      }
    }
    RandomStream vector_stream(7 + static_cast<std::uint64_t>(c));
    const Vec x = parcs::test::random_complex_vector(16, vector_stream);
    const Vec fast = p.apply(c, x);
    const Vec direct = h * x;
    REQUIRE((fast - direct).norm() < 1e-10 * direct.norm());
  }
}

TEST_CASE("circulant profiles with unit eigenvalues act as the identity") {
  std::vector<Vec> eigs(2, Vec::Constant(8, Complex(1.0, 0.0)));
  const ProfileSet p = circulant_from_eigs(eigs);
  const Mat h = p.matrix(0);
  REQUIRE((h - Mat::Identity(8, 8)).norm() < 1e-12);
  REQUIRE(p.alpha() == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(p.beta() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("a jointly dark frequency makes the Gram average singular") {
  Vec eig = Vec::Constant(8, Complex(1.0, 0.0));
  eig[3] = Complex(0.0, 0.0);
  REQUIRE_THROWS_AS(circulant_from_eigs({eig}), InvalidInput);
}

TEST_CASE("joint near-isometry matches a stacked singular value oracle") {
  const ProfileSet scaled = ProfileSet::dense({Mat(2.0 * Mat::Identity(6, 6))});
  const auto [a2, b2] = joint_near_isometry(scaled);
  REQUIRE(a2 == Catch::Approx(4.0).margin(1e-12));
  REQUIRE(b2 == Catch::Approx(4.0).margin(1e-12));

  std::vector<Mat> blocks;
  RandomStream block_stream(41);
  for (int c = 0; c < 3; ++c) {
    blocks.push_back(Mat::Identity(10, 10) +
                     0.3 * parcs::test::random_complex_matrix(10, 10, block_stream));
  }
  const ProfileSet p = ProfileSet::dense(blocks);
  const auto [alpha, beta] = joint_near_isometry(p);
  const auto [alpha_svd, beta_svd] = gram_extremes_by_svd(p);
  REQUIRE(alpha == Catch::Approx(alpha_svd).margin(1e-10));
  REQUIRE(beta == Catch::Approx(beta_svd).margin(1e-10));
  REQUIRE(!p.is_normal());
}

TEST_CASE("overlap degree counts every sensor for dense supports") {
  const ProfileSet p = globally_spread(5, 20, 3);
  REQUIRE(overlap_degree(p) == 5);
  REQUIRE_THROWS_AS(overlap_degree(circulant_from_eigs({Vec::Constant(4, Complex(1.0, 0.0))})),
                    InvalidInput);
}

TEST_CASE("profile factory dispatches families and circulant structure") {
  const ProfileSet diag = make_profile_set("global", 3, 12, 7);
  REQUIRE(diag.structure() == ProfileStructure::Diagonal);
  REQUIRE(diag.family() == "global");
  const ProfileSet circ = make_profile_set("global", 3, 12, 7, true);
  REQUIRE(circ.structure() == ProfileStructure::Circulant);
  REQUIRE(circ.family() == "global");
  REQUIRE(circ.eigenvalues()[0][0] == diag.diagonals()[0][0]);
  REQUIRE_THROWS_AS(make_profile_set("mystery", 2, 8, 1), InvalidInput);
}

TEST_CASE("structure accessors reject mismatched queries") {
  const ProfileSet diag = perfectly_partitioned(2, 8);
  REQUIRE_THROWS_AS(diag.eigenvalues(), InvalidInput);
  REQUIRE_THROWS_AS(diag.dense_matrices(), InvalidInput);
  REQUIRE_THROWS_AS(diag.apply(2, Vec::Zero(8)), InvalidInput);
  REQUIRE_THROWS_AS(diag.apply(0, Vec::Zero(7)), InvalidInput);
  REQUIRE_THROWS_AS(ProfileSet::dense({Mat::Zero(3, 4)}), InvalidInput);
}
