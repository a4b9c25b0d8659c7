// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Phase-transition experiment protocol. A grid over the undersampling axis
// x = m/(C N) and the sparsity axis y = s/N is filled with empirical success
// fractions of noiseless l1 recovery; per-column transition ordinates mark
// where the success probability crosses one half. All randomness flows from
// the master seed through per-cell derived streams, so any thread count and
// any re-run produce bitwise identical grids.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "common.hpp"
#include "measurement.hpp"
#include "parallel.hpp"
#include "profiles.hpp"
#include "recovery.hpp"
#include "rng.hpp"
#include "transforms.hpp"

namespace parcs {

struct ExperimentConfig {
  int n = 128;
  int grid_rows = 50;  // sparsity axis s/N
  int grid_cols = 50;  // undersampling axis m/(C N)
  int trials = 20;
  double tol = 1e-3;
  std::vector<int> sensor_counts{1};
  std::string family = "global";
  bool circulant = false;
  BasisKind basis = BasisKind::Fourier;
  MeasurementMode mode = MeasurementMode::Distinct;
  EntryDist entry_dist = EntryDist::Gaussian;
  // Fresh ensembles per trial match the empirical-probability reading; with
  // the flag off, one ensemble per cell is reused and only signals vary.
  bool refresh_ensembles = true;
  std::uint64_t seed = 0;
  SolverConfig solver;  // eta is forced to zero by the noiseless protocol
};

struct PhaseGrid {
  int sensor_count = 1;
  int rows = 0;
  int cols = 0;
  std::vector<double> success_fraction;  // row-major [iy][ix], each k/trials
  std::vector<double> transition_curve;  // per column, s/N ordinate or NaN
  ExperimentConfig config;

  double at(int iy, int ix) const {
    return success_fraction[static_cast<std::size_t>(iy) * static_cast<std::size_t>(cols) +
                            static_cast<std::size_t>(ix)];
  }
  double axis_x(int ix) const { return static_cast<double>(ix + 1) / cols; }
  double axis_y(int iy) const { return static_cast<double>(iy + 1) / rows; }
};

// Row count for a cell: round toward the target, then snap up to the next
// multiple of C so the assemblers' divisibility precondition always holds.
inline int snapped_row_count(double cell_x, int sensors, int n) {
  const long target = std::lround(cell_x * static_cast<double>(sensors) * n);
  const long at_least_one = std::max(1L, target);
  const long snapped = ((at_least_one + sensors - 1) / sensors) * sensors;
  return static_cast<int>(std::min<long>(snapped, static_cast<long>(sensors) * n));
}

inline int snapped_sparsity(double cell_y, int n) {
  const long target = std::lround(cell_y * static_cast<double>(n));
  return static_cast<int>(std::min<long>(std::max(1L, target), n));
}

// s support positions drawn uniformly without replacement; nonzero values
// drawn uniformly on the unit circle.
inline Vec random_sparse_signal(int n, int s, std::uint64_t seed) {
  require(n >= 1, "need a positive dimension");
  require(s >= 1 && s <= n, "sparsity must lie in [1, n]");
  RandomStream stream(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  Vec x = Vec::Zero(n);
  for (int k = 0; k < s; ++k) {
    const int pick = k + static_cast<int>(stream.uniform_below(static_cast<std::uint64_t>(n - k)));
    std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(pick)]);
    x[order[static_cast<std::size_t>(k)]] = unit_phase(stream.uniform_phase());
  }
  return x;
}

// Largest s/N whose cell meets the one-half success rule, scanning from small
// s upward; NaN marks a column that never reaches one half.
inline std::vector<double> transition_curve(const PhaseGrid& grid) {
  std::vector<double> curve(static_cast<std::size_t>(grid.cols),
                            std::numeric_limits<double>::quiet_NaN());
  for (int ix = 0; ix < grid.cols; ++ix) {
    for (int iy = 0; iy < grid.rows; ++iy) {
      if (grid.at(iy, ix) >= 0.5) curve[static_cast<std::size_t>(ix)] = grid.axis_y(iy);
    }
  }
  return curve;
}

namespace detail {

inline void validate_experiment(const ExperimentConfig& cfg, int sensors) {
  require(cfg.n >= 1, "signal dimension must be positive");
  require(cfg.grid_rows >= 1 && cfg.grid_cols >= 1, "grid resolution must be positive");
  require(cfg.trials >= 1, "need at least one trial");
  require(cfg.tol > 0.0, "success tolerance must be positive");
  require(sensors >= 1, "need at least one sensor");
  require(cfg.mode == MeasurementMode::Distinct || cfg.mode == MeasurementMode::Identical,
          "phase grids support distinct or identical sampling");
  // Probe the family/basis combination up front so configuration errors
  // surface before any parallel work starts.
  make_profile_set(cfg.family, sensors, cfg.n, derive_seed(cfg.seed, 0), cfg.circulant);
  build_basis(cfg.basis, cfg.n);
}

inline MeasurementEnsemble cell_ensemble(const ExperimentConfig& cfg, const UnitaryBasis& basis,
                                         int sensors, int m, int ix, int iy, int trial) {
  const ProfileSet profile = make_profile_set(
      cfg.family, sensors, cfg.n, derive_seed(cfg.seed, sensors, ix, iy, trial, 2), cfg.circulant);
  const std::uint64_t draw_seed = derive_seed(cfg.seed, sensors, ix, iy, trial, 0);
  if (cfg.mode == MeasurementMode::Identical) {
    return assemble_identical(profile, basis, m, cfg.entry_dist, draw_seed);
  }
  return assemble_distinct(profile, basis, m, cfg.entry_dist, draw_seed);
}

}  // namespace detail

inline PhaseGrid run_phase_grid(const ExperimentConfig& cfg, int sensors, unsigned threads = 1) {
  detail::validate_experiment(cfg, sensors);
  const UnitaryBasis basis = build_basis(cfg.basis, cfg.n);
  SolverConfig solver = cfg.solver;
  solver.eta = 0.0;

  PhaseGrid grid;
  grid.sensor_count = sensors;
  grid.rows = cfg.grid_rows;
  grid.cols = cfg.grid_cols;
  grid.config = cfg;
  grid.success_fraction.assign(
      static_cast<std::size_t>(cfg.grid_rows) * static_cast<std::size_t>(cfg.grid_cols), 0.0);

  const std::size_t cells = grid.success_fraction.size();
  parallel_for(cells, threads, [&](std::size_t cell) {
    const int ix = static_cast<int>(cell % static_cast<std::size_t>(cfg.grid_cols));
    const int iy = static_cast<int>(cell / static_cast<std::size_t>(cfg.grid_cols));
    const int m = snapped_row_count(grid.axis_x(ix), sensors, cfg.n);
    const int s = snapped_sparsity(grid.axis_y(iy), cfg.n);
    MeasurementEnsemble fixed;
    if (!cfg.refresh_ensembles) {
      fixed = detail::cell_ensemble(cfg, basis, sensors, m, ix, iy, 0);
    }
    int successes = 0;
    MeasurementEnsemble scratch;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      if (cfg.refresh_ensembles) {
        scratch = detail::cell_ensemble(cfg, basis, sensors, m, ix, iy, trial);
      }
      const MeasurementEnsemble& ensemble = cfg.refresh_ensembles ? scratch : fixed;
      const Vec x = random_sparse_signal(cfg.n, s, derive_seed(cfg.seed, sensors, ix, iy, trial, 1));
      const Vec y = ensemble.matrix * x;
      const RecoveryResult result = solve_bpdn(ensemble.matrix, y, solver);
      if (success(x, result.x_hat, cfg.tol)) ++successes;
    }
    grid.success_fraction[cell] = static_cast<double>(successes) / cfg.trials;
  });

  grid.transition_curve = transition_curve(grid);
  return grid;
}

inline std::vector<PhaseGrid> run_all_grids(const ExperimentConfig& cfg, unsigned threads = 1) {
  require(!cfg.sensor_counts.empty(), "need at least one sensor count");
  std::vector<PhaseGrid> grids;
  grids.reserve(cfg.sensor_counts.size());
  for (int sensors : cfg.sensor_counts) grids.push_back(run_phase_grid(cfg, sensors, threads));
  return grids;
}

}  // namespace parcs
