// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors

#include <catch_amalgamated.hpp>

#include <parcs/transforms.hpp>

#include "helpers.hpp"

using namespace parcs;

namespace {

const BasisKind kAllKinds[] = {BasisKind::Canonical, BasisKind::Fourier, BasisKind::Cosine,
                               BasisKind::HaarWavelet};

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("canonical basis is the exact identity") {
  const auto u = build_basis(BasisKind::Canonical, 8);
  const Mat diff = u.matrix() - Mat::Identity(8, 8);
  CHECK(max_abs(diff) == 0.0);
}

TEST_CASE("fourier entries all have squared modulus 1/n") {
  const auto u = build_basis(BasisKind::Fourier, 256);
  const Mat& m = u.matrix();
  double lo = 1e300, hi = 0;
  for (int j = 0; j < 256; ++j) {
    for (int i = 0; i < 256; ++i) {
      const double v = std::norm(m(i, j));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  CHECK(hi == Catch::Approx(1.0 / 256).epsilon(1e-12));
  CHECK(lo == Catch::Approx(1.0 / 256).epsilon(1e-12));
}

TEST_CASE("unitarity of every kind") {
  for (const auto kind : kAllKinds) {
    const int n = 256;
    const auto u = build_basis(kind, n);
    const Mat gram = u.matrix().adjoint() * u.matrix();
    INFO("kind " << to_string(kind));
    CHECK(max_abs(gram - Mat::Identity(n, n)) < 1e-10);
  }
  for (const int n : {12, 37}) {
    for (const auto kind : {BasisKind::Fourier, BasisKind::Cosine}) {
      const auto u = build_basis(kind, n);
      const Mat gram = u.matrix().adjoint() * u.matrix();
      INFO("kind " << to_string(kind) << " n " << n);
      CHECK(max_abs(gram - Mat::Identity(n, n)) < 1e-10);
    }
  }
}

TEST_CASE("apply preserves the canonical vector and norms") {
  RandomStream stream(derive_seed(11, 1));
  const Vec x = test::random_complex_vector(64, stream);
  const auto canon = build_basis(BasisKind::Canonical, 64);
  CHECK((canon.apply(x) - x).norm() == 0.0);

  for (const auto kind : kAllKinds) {
    for (const int n : {32, 64}) {
      const auto u = build_basis(kind, n);
      for (int rep = 0; rep < 100; ++rep) {
        const Vec z = test::random_complex_vector(n, stream);
        const double dev = std::abs(u.apply(z).norm() - z.norm()) / z.norm();
        REQUIRE(dev < 1e-10);
      }
    }
  }
  for (const auto kind : {BasisKind::Fourier, BasisKind::Cosine}) {
    const auto u = build_basis(kind, 37);
    for (int rep = 0; rep < 100; ++rep) {
      const Vec z = test::random_complex_vector(37, stream);
      REQUIRE(std::abs(u.apply(z).norm() - z.norm()) / z.norm() < 1e-10);
    }
  }
}

TEST_CASE("adjoint round trip") {
  RandomStream stream(derive_seed(11, 2));
  for (const auto kind : kAllKinds) {
    const int n = 64;
    const auto u = build_basis(kind, n);
    const Vec x = test::random_complex_vector(n, stream);
    const Vec back = u.apply_adjoint(u.apply(x));
    INFO("kind " << to_string(kind));
    CHECK((back - x).norm() / x.norm() < 1e-10);
  }
}

TEST_CASE("fourier first column has constant modulus") {
  const int n = 64;
  const auto u = build_basis(BasisKind::Fourier, n);
  Vec e = Vec::Zero(n);
  e[0] = Complex(1, 0);
  const Vec col = u.apply(e);
  for (int i = 0; i < n; ++i) {
    REQUIRE(std::abs(col[i]) == Catch::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-12));
  }
}

TEST_CASE("materialized matrix agrees with the fast apply path") {
  RandomStream stream(derive_seed(11, 3));
  struct Case {
    BasisKind kind;
    int n;
  };
  const Case cases[] = {{BasisKind::Canonical, 64}, {BasisKind::Fourier, 64},
                        {BasisKind::Fourier, 48},   {BasisKind::Cosine, 64},
                        {BasisKind::Cosine, 20},    {BasisKind::HaarWavelet, 64}};
  for (const auto& c : cases) {
    const auto u = build_basis(c.kind, c.n);
    for (int rep = 0; rep < 20; ++rep) {
      const Vec x = test::random_complex_vector(c.n, stream);
      const Vec via_matrix = u.matrix() * x;
      const Vec via_fast = u.apply(x);
      INFO("kind " << to_string(c.kind) << " n " << c.n);
      REQUIRE((via_matrix - via_fast).norm() / via_matrix.norm() < 1e-10);
      const Vec adj_matrix = u.matrix().adjoint() * x;
      const Vec adj_fast = u.apply_adjoint(x);
      REQUIRE((adj_matrix - adj_fast).norm() / adj_matrix.norm() < 1e-10);
    }
  }
}

TEST_CASE("haar synthesis spreads the coarse scaling function") {
  const int n = 256;
  const auto u = build_basis(BasisKind::HaarWavelet, n);
  CHECK(u.wavelet_levels() == 4);
  Vec e = Vec::Zero(n);
  e[0] = Complex(1, 0);
  const Vec col = u.apply(e);
  // 4 stages turn one coarse coefficient into 16 samples of height 1/4.
  for (int i = 0; i < 16; ++i) REQUIRE(std::abs(col[i] - Complex(0.25, 0)) < 1e-12);
  for (int i = 16; i < n; ++i) REQUIRE(col[i] == Complex(0, 0));
}

TEST_CASE("dimension validation") {
  CHECK_THROWS_AS(build_basis(BasisKind::Fourier, 1), InvalidInput);
  CHECK_THROWS_AS(build_basis(BasisKind::HaarWavelet, 48), InvalidInput);
  CHECK_THROWS_AS(build_basis(BasisKind::HaarWavelet, 16), InvalidInput);
  const auto u = build_basis(BasisKind::Fourier, 8);
  CHECK_THROWS_AS(u.apply(Vec::Zero(7)), InvalidInput);
  CHECK_THROWS_AS(u.apply_adjoint(Vec::Zero(9)), InvalidInput);
}

TEST_CASE("basis kind round trips through names") {
  for (const auto kind : kAllKinds) {
    CHECK(basis_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(basis_kind_from_string("walsh"), InvalidInput);
}
