// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Measurement-ensemble assembly for the four sampling architectures. Every
// assembler is a pure function of its inputs and the master seed; sensor c
// always draws from the stream derive_seed(seed, c), which is what makes the
// cross-mode equivalences (varied == distinct at equal counts, identical ==
// distinct at C = 1, block-diagonal == distinct with partitioned profiles)
// hold bitwise.
#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "profiles.hpp"
#include "rng.hpp"
#include "transforms.hpp"

namespace parcs {

enum class MeasurementMode { Distinct, DistinctVaried, Identical, BlockDiagonal };
enum class EntryDist { Gaussian, Rademacher };

inline std::string to_string(MeasurementMode mode) {
  switch (mode) {
    case MeasurementMode::Distinct: return "distinct";
    case MeasurementMode::DistinctVaried: return "distinct-varied";
    case MeasurementMode::Identical: return "identical";
    case MeasurementMode::BlockDiagonal: return "block-diagonal";
  }
  throw InvalidInput("unknown measurement mode");
}

inline MeasurementMode measurement_mode_from_string(const std::string& name) {
  if (name == "distinct") return MeasurementMode::Distinct;
  if (name == "distinct-varied") return MeasurementMode::DistinctVaried;
  if (name == "identical") return MeasurementMode::Identical;
  if (name == "block-diagonal") return MeasurementMode::BlockDiagonal;
  throw InvalidInput("unknown measurement mode: " + name);
}

inline std::string to_string(EntryDist dist) {
  switch (dist) {
    case EntryDist::Gaussian: return "gaussian";
    case EntryDist::Rademacher: return "rademacher";
  }
  throw InvalidInput("unknown entry distribution");
}

inline EntryDist entry_dist_from_string(const std::string& name) {
  if (name == "gaussian") return EntryDist::Gaussian;
  if (name == "rademacher") return EntryDist::Rademacher;
  throw InvalidInput("unknown entry distribution: " + name);
}

struct MeasurementEnsemble {
  Mat matrix;
  MeasurementMode mode = MeasurementMode::Distinct;
  std::vector<int> row_counts;
  std::uint64_t seed = 0;
  EntryDist entry_dist = EntryDist::Gaussian;
  std::string profile_ref;
  std::string basis_ref;

  int sensor_count() const { return static_cast<int>(row_counts.size()); }
  int total_rows() const { return static_cast<int>(matrix.rows()); }
  int signal_dimension() const { return static_cast<int>(matrix.cols()); }
};

// i.i.d. zero-mean unit-variance entries, filled row-major.
inline RealMat subgaussian_matrix(int rows, int cols, EntryDist dist, std::uint64_t seed) {
  require(rows >= 0 && cols >= 0, "matrix shape must be nonnegative");
  RealMat a(rows, cols);
  RandomStream stream(seed);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      a(r, c) = dist == EntryDist::Gaussian ? stream.gaussian()
                                            : static_cast<double>(stream.rademacher());
    }
  }
  return a;
}

namespace detail {

inline std::string basis_ref_of(const UnitaryBasis& basis) {
  return to_string(basis.kind()) + ":" + std::to_string(basis.size());
}

inline Mat sensor_times_basis(const ProfileSet& p, const UnitaryBasis& basis, int c) {
  const Mat& u = basis.matrix();
  const int n = p.dimension();
  Mat hu(n, n);
  for (int j = 0; j < n; ++j) hu.col(j) = p.apply(c, u.col(j));
  return hu;
}

}  // namespace detail

// Stacks sensor blocks, block c scaled by (C m_c)^{-1/2}, so the blocks'
// expected squared norms average to the joint isometry normalization.
inline MeasurementEnsemble assemble_distinct_varied(const ProfileSet& p, const UnitaryBasis& basis,
                                                    const std::vector<int>& row_counts,
                                                    EntryDist dist, std::uint64_t seed) {
  const int sensors = p.sensor_count();
  require(p.dimension() == basis.size(), "profile dimension does not match basis dimension");
  require(static_cast<int>(row_counts.size()) == sensors,
          "need one row count per sensor");
  int total = 0;
  for (int m_c : row_counts) {
    require(m_c >= 1, "every sensor needs at least one row");
    total += m_c;
  }
  MeasurementEnsemble ensemble;
  ensemble.matrix = Mat(total, p.dimension());
  ensemble.mode = MeasurementMode::DistinctVaried;
  ensemble.row_counts = row_counts;
  ensemble.seed = seed;
  ensemble.entry_dist = dist;
  ensemble.profile_ref = p.family();
  ensemble.basis_ref = detail::basis_ref_of(basis);
  int row = 0;
  for (int c = 0; c < sensors; ++c) {
    const int m_c = row_counts[static_cast<std::size_t>(c)];
    const RealMat tilde =
        subgaussian_matrix(m_c, p.dimension(), dist, derive_seed(seed, static_cast<std::uint64_t>(c)));
    const Mat hu = detail::sensor_times_basis(p, basis, c);
    const double scale = 1.0 / std::sqrt(static_cast<double>(sensors) * m_c);
    ensemble.matrix.middleRows(row, m_c) = (tilde.cast<Complex>() * hu) * scale;
    row += m_c;
  }
  return ensemble;
}

// A = m^{-1/2} stack(A~_c H_c U) with independent A~_c; C must divide m.
inline MeasurementEnsemble assemble_distinct(const ProfileSet& p, const UnitaryBasis& basis, int m,
                                             EntryDist dist, std::uint64_t seed) {
  const int sensors = p.sensor_count();
  require(m >= 1, "need at least one row");
  require(m % sensors == 0, "sensor count must divide the row count");
  // C * (m/C) == m exactly, so the varied scaling (C m_c)^{-1/2} equals
  // m^{-1/2} bitwise and the two assemblers coincide at equal counts.
  std::vector<int> counts(static_cast<std::size_t>(sensors), m / sensors);
  MeasurementEnsemble ensemble = assemble_distinct_varied(p, basis, counts, dist, seed);
  ensemble.mode = MeasurementMode::Distinct;
  return ensemble;
}

// One shared A~ of shape (m/C) x N reused in every sensor block.
inline MeasurementEnsemble assemble_identical(const ProfileSet& p, const UnitaryBasis& basis, int m,
                                              EntryDist dist, std::uint64_t seed) {
  const int sensors = p.sensor_count();
  require(p.dimension() == basis.size(), "profile dimension does not match basis dimension");
  require(m >= 1, "need at least one row");
  require(m % sensors == 0, "sensor count must divide the row count");
  const int m_c = m / sensors;
  // The shared draw uses sensor stream 0 so C = 1 coincides with distinct.
  const RealMat tilde = subgaussian_matrix(m_c, p.dimension(), dist, derive_seed(seed, 0));
  MeasurementEnsemble ensemble;
  ensemble.matrix = Mat(m, p.dimension());
  ensemble.mode = MeasurementMode::Identical;
  ensemble.row_counts.assign(static_cast<std::size_t>(sensors), m_c);
  ensemble.seed = seed;
  ensemble.entry_dist = dist;
  ensemble.profile_ref = p.family();
  ensemble.basis_ref = detail::basis_ref_of(basis);
  const double scale = 1.0 / std::sqrt(static_cast<double>(sensors) * m_c);
  for (int c = 0; c < sensors; ++c) {
    const Mat hu = detail::sensor_times_basis(p, basis, c);
    ensemble.matrix.middleRows(c * m_c, m_c) = (tilde.cast<Complex>() * hu) * scale;
  }
  return ensemble;
}

// A = sqrt(C/m) blkdiag(Phi_1..Phi_C) U. Assembled as distinct sampling with
// perfectly partitioned profiles, which is the same matrix: sqrt(C) P_{I_c}
// restricts A~_c to its block columns and the scalings agree exactly.
inline MeasurementEnsemble assemble_block_diagonal(const UnitaryBasis& basis, int sensors, int m,
                                                   EntryDist dist, std::uint64_t seed) {
  const int n = basis.size();
  require(sensors >= 1, "need at least one sensor");
  require(n % sensors == 0, "sensor count must divide the signal dimension");
  require(m >= 1, "need at least one row");
  require(m % sensors == 0, "sensor count must divide the row count");
  MeasurementEnsemble ensemble =
      assemble_distinct(perfectly_partitioned(sensors, n), basis, m, dist, seed);
  ensemble.mode = MeasurementMode::BlockDiagonal;
  ensemble.profile_ref = "block-diagonal";
  return ensemble;
}

// Binary container: little-endian header (magic, mode, dist, rows, cols,
// sensors, seed), row counts, the two reference strings, then the matrix as
// row-major (re, im) float64 pairs.
namespace detail {

inline constexpr std::uint32_t kEnsembleMagic = 0x31454150u;  // "PAE1"

template <typename T>
void write_pod(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw RuntimeFailure("ensemble file truncated");
  return value;
}

inline void write_string(std::ostream& out, const std::string& s) {
  write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::istream& in) {
  const auto length = read_pod<std::uint32_t>(in);
  require(length <= (1u << 20), "unreasonable string length in ensemble file");
  std::string s(length, '\0');
  in.read(s.data(), static_cast<std::streamsize>(length));
  if (!in) throw RuntimeFailure("ensemble file truncated");
  return s;
}

}  // namespace detail

inline void save_ensemble(const MeasurementEnsemble& ensemble, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeFailure("cannot open ensemble file for writing: " + path);
  detail::write_pod(out, detail::kEnsembleMagic);
  detail::write_pod(out, static_cast<std::uint32_t>(ensemble.mode));
  detail::write_pod(out, static_cast<std::uint32_t>(ensemble.entry_dist));
  detail::write_pod(out, static_cast<std::uint32_t>(ensemble.matrix.rows()));
  detail::write_pod(out, static_cast<std::uint32_t>(ensemble.matrix.cols()));
  detail::write_pod(out, static_cast<std::uint32_t>(ensemble.row_counts.size()));
  detail::write_pod(out, ensemble.seed);
  for (int m_c : ensemble.row_counts) detail::write_pod(out, static_cast<std::uint32_t>(m_c));
  detail::write_string(out, ensemble.profile_ref);
  detail::write_string(out, ensemble.basis_ref);
  for (Eigen::Index r = 0; r < ensemble.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < ensemble.matrix.cols(); ++c) {
      detail::write_pod(out, ensemble.matrix(r, c).real());
      detail::write_pod(out, ensemble.matrix(r, c).imag());
    }
  }
  if (!out) throw RuntimeFailure("failed writing ensemble file: " + path);
}

inline MeasurementEnsemble load_ensemble(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeFailure("cannot open ensemble file: " + path);
  const auto magic = detail::read_pod<std::uint32_t>(in);
  require(magic == detail::kEnsembleMagic, "not an ensemble file: " + path);
  MeasurementEnsemble ensemble;
  const auto mode = detail::read_pod<std::uint32_t>(in);
  require(mode <= 3, "corrupt ensemble mode");
  ensemble.mode = static_cast<MeasurementMode>(mode);
  const auto dist = detail::read_pod<std::uint32_t>(in);
  require(dist <= 1, "corrupt entry distribution");
  ensemble.entry_dist = static_cast<EntryDist>(dist);
  const auto rows = detail::read_pod<std::uint32_t>(in);
  const auto cols = detail::read_pod<std::uint32_t>(in);
  const auto sensors = detail::read_pod<std::uint32_t>(in);
  require(rows <= (1u << 24) && cols <= (1u << 24) && sensors <= (1u << 16),
          "unreasonable ensemble dimensions");
  ensemble.seed = detail::read_pod<std::uint64_t>(in);
  ensemble.row_counts.resize(sensors);
  for (auto& m_c : ensemble.row_counts) {
    m_c = static_cast<int>(detail::read_pod<std::uint32_t>(in));
  }
  ensemble.profile_ref = detail::read_string(in);
  ensemble.basis_ref = detail::read_string(in);
  ensemble.matrix = Mat(rows, cols);
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const double re = detail::read_pod<double>(in);
      const double im = detail::read_pod<double>(in);
      ensemble.matrix(r, c) = Complex(re, im);
    }
  }
  return ensemble;
}

}  // namespace parcs
