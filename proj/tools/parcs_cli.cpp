// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// parcs command-line tool. Subcommands: constants-sweep, phase-transition,
// aric-check, recover, report. Every run appends a [run] block to
// manifest.txt inside its --out directory; feeding that manifest back via
// --config reproduces the run's outputs bitwise (command-line flags still
// override individual keys). Plots are rebuilt from the emitted CSV files,
// never from in-memory state.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "parcs/aric.hpp"
#include "parcs/constants.hpp"
#include "parcs/experiments.hpp"
#include "parcs/measurement.hpp"
#include "parcs/profiles.hpp"
#include "parcs/recovery.hpp"
#include "parcs/rng.hpp"
#include "parcs/svg.hpp"
#include "parcs/textio.hpp"
#include "parcs/transforms.hpp"

namespace {

namespace fs = std::filesystem;
using parcs::InvalidInput;

int parse_int(const std::string& text) {
  try {
    std::size_t pos = 0;
    const long long value = std::stoll(text, &pos);
    if (pos != text.size()) throw InvalidInput("trailing characters in integer: " + text);
    if (value < INT32_MIN || value > INT32_MAX) throw InvalidInput("integer out of range: " + text);
    return static_cast<int>(value);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("not an integer: " + text);
  }
}

std::uint64_t parse_u64(const std::string& text) {
  try {
    std::size_t pos = 0;
    const std::uint64_t value = std::stoull(text, &pos);
    if (pos != text.size()) throw InvalidInput("trailing characters in integer: " + text);
    return value;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("not an unsigned integer: " + text);
  }
}

double parse_double(const std::string& text) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size()) throw InvalidInput("trailing characters in number: " + text);
    return value;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("not a number: " + text);
  }
}

bool parse_bool(const std::string& text) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  throw InvalidInput("not a boolean: " + text);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t comma = text.find(',', begin);
    const std::string item =
        text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    if (item.empty()) throw InvalidInput("empty element in list: " + text);
    values.push_back(parse_int(item));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (values.empty()) throw InvalidInput("empty list");
  return values;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// One configurable parameter: its manifest key, the CLI option that may have
// set it, and how to parse/print it. Config values fill only parameters the
// command line left untouched.
struct Bound {
  std::string key;
  CLI::Option* option = nullptr;
  std::function<void(const std::string&)> apply;
  std::function<std::string()> render;
};

class OptionSet {
 public:
  void bind(std::string key, CLI::Option* option, std::function<void(const std::string&)> apply,
            std::function<std::string()> render) {
    items_.push_back({std::move(key), option, std::move(apply), std::move(render)});
  }

  void merge_config(const std::map<std::string, std::string>& config) {
    for (auto& item : items_) {
      if (item.option != nullptr && item.option->count() > 0) continue;
      const auto found = config.find(item.key);
      if (found == config.end()) continue;
      item.apply(found->second);
      from_config_.insert(item.key);
    }
  }

  bool provided(const std::string& key) const {
    if (from_config_.count(key)) return true;
    for (const auto& item : items_) {
      if (item.key == key) return item.option != nullptr && item.option->count() > 0;
    }
    return false;
  }

  std::vector<std::pair<std::string, std::string>> render_all() const {
    std::vector<std::pair<std::string, std::string>> entries;
    entries.reserve(items_.size());
    for (const auto& item : items_) entries.emplace_back(item.key, item.render());
    return entries;
  }

 private:
  std::vector<Bound> items_;
  std::set<std::string> from_config_;
};

void bind_int(OptionSet& set, CLI::App* app, const std::string& flag, const std::string& key,
              int& var, const std::string& help) {
  CLI::Option* option = app->add_option(flag, var, help);
  set.bind(
      key, option, [&var](const std::string& text) { var = parse_int(text); },
      [&var] { return std::to_string(var); });
}

void bind_u64(OptionSet& set, CLI::App* app, const std::string& flag, const std::string& key,
              std::uint64_t& var, const std::string& help) {
  CLI::Option* option = app->add_option(flag, var, help);
  set.bind(
      key, option, [&var](const std::string& text) { var = parse_u64(text); },
      [&var] { return std::to_string(var); });
}

void bind_double(OptionSet& set, CLI::App* app, const std::string& flag, const std::string& key,
                 double& var, const std::string& help) {
  CLI::Option* option = app->add_option(flag, var, help);
  set.bind(
      key, option, [&var](const std::string& text) { var = parse_double(text); },
      [&var] { return parcs::format_g17(var); });
}

void bind_string(OptionSet& set, CLI::App* app, const std::string& flag, const std::string& key,
                 std::string& var, const std::string& help) {
  CLI::Option* option = app->add_option(flag, var, help);
  set.bind(
      key, option, [&var](const std::string& text) { var = text; }, [&var] { return var; });
}

void bind_flag(OptionSet& set, CLI::App* app, const std::string& flag, const std::string& key,
               bool& var, const std::string& help) {
  CLI::Option* option = app->add_flag(flag, var, help);
  set.bind(
      key, option, [&var](const std::string& text) { var = parse_bool(text); },
      [&var] { return var ? std::string("1") : std::string("0"); });
}

void bind_int_list(OptionSet& set, CLI::App* app, const std::string& flag, const std::string& key,
                   std::vector<int>& var, const std::string& help) {
  CLI::Option* option = app->add_option(flag, var, help)->delimiter(',');
  set.bind(
      key, option, [&var](const std::string& text) { var = parse_int_list(text); },
      [&var] { return join_ints(var); });
}

// Collects output files and their digests so the manifest can certify the
// exact bytes this run produced.
struct RunWriter {
  fs::path out_dir;
  std::vector<std::pair<std::string, std::string>> digests;

  void write(const std::string& name, const std::string& bytes) {
    parcs::write_text_file(out_dir / name, bytes);
    digests.emplace_back(name, parcs::fnv1a64_hex(bytes));
    std::printf("wrote %s (%zu bytes)\n", (out_dir / name).string().c_str(), bytes.size());
  }

  std::string read(const std::string& name) const {
    return parcs::read_text_file(out_dir / name);
  }
};

void finish_run(const std::string& subcommand, const OptionSet& options, RunWriter& writer,
                double wall_seconds) {
  std::vector<std::pair<std::string, std::string>> entries;
  entries.emplace_back("subcommand", subcommand);
  for (auto& entry : options.render_all()) entries.push_back(std::move(entry));
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("version", parcs::kVersion);
  meta.emplace_back("wall_clock_seconds", parcs::format_g17(wall_seconds));
  for (const auto& [name, digest] : writer.digests) meta.emplace_back("digest." + name, digest);
  parcs::append_manifest(writer.out_dir / "manifest.txt", entries, meta);
}

double csv_field(const std::string& text) { return std::strtod(text.c_str(), nullptr); }

std::string constants_plot(const parcs::CsvTable& table) {
  if (table.header.size() < 7) throw parcs::RuntimeFailure("constants CSV is malformed");
  std::vector<parcs::PlotSeries> series(4);
  for (std::size_t k = 0; k < 4; ++k) series[k].name = table.header[3 + k];
  for (const auto& row : table.rows) {
    if (row.size() < 7) throw parcs::RuntimeFailure("constants CSV row is malformed");
    for (std::size_t k = 0; k < 4; ++k) {
      series[k].x.push_back(csv_field(row[0]));
      series[k].y.push_back(csv_field(row[3 + k]));
    }
  }
  return parcs::svg_line_chart("condition constants vs sensor count", "C", "squared constant",
                               series);
}

std::string grid_plot(const parcs::CsvTable& table, const std::string& title) {
  std::set<std::string> distinct_x;
  for (const auto& row : table.rows) {
    if (row.size() < 3) throw parcs::RuntimeFailure("grid CSV row is malformed");
    distinct_x.insert(row[0]);
  }
  const int cols = static_cast<int>(distinct_x.size());
  if (cols == 0 || table.rows.size() % static_cast<std::size_t>(cols) != 0) {
    throw parcs::RuntimeFailure("grid CSV shape is malformed");
  }
  const int rows = static_cast<int>(table.rows.size()) / cols;
  std::vector<double> values;
  values.reserve(table.rows.size());
  for (const auto& row : table.rows) values.push_back(csv_field(row[2]));
  return parcs::svg_heatmap(title, rows, cols, values, "m/(CN)", "s/N");
}

std::string curves_plot(const std::vector<std::pair<std::string, parcs::CsvTable>>& tables) {
  std::vector<parcs::PlotSeries> series;
  for (const auto& [label, table] : tables) {
    parcs::PlotSeries s;
    s.name = label;
    for (const auto& row : table.rows) {
      if (row.size() < 2) throw parcs::RuntimeFailure("curve CSV row is malformed");
      s.x.push_back(csv_field(row[0]));
      s.y.push_back(csv_field(row[1]));
    }
    series.push_back(std::move(s));
  }
  return parcs::svg_line_chart("empirical phase transition", "m/(CN)", "s/N", series);
}

struct CommonOptions {
  std::string out = "out";
  std::string config;
  int threads = 0;
  std::uint64_t seed = 0;
  bool plot = false;
};

void bind_common(OptionSet& set, CLI::App* app, CommonOptions& common, bool with_seed,
                 bool with_plot) {
  bind_string(set, app, "--out", "out", common.out, "output directory (all files go here)");
  app->add_option("--config", common.config,
                  "key=value file or manifest; flags override its entries");
  bind_int(set, app, "--threads", "threads", common.threads,
           "worker cap, 0 = all available cores");
  if (with_seed) bind_u64(set, app, "--seed", "seed", common.seed, "master random seed");
  if (with_plot) bind_flag(set, app, "--plot", "plot", common.plot, "emit SVG plots from the CSVs");
}

void apply_config(OptionSet& set, const CommonOptions& common) {
  if (common.config.empty()) return;
  set.merge_config(parcs::parse_key_values(parcs::read_text_file(common.config)));
}

RunWriter make_writer(const CommonOptions& common) {
  fs::create_directories(common.out);
  return RunWriter{fs::path(common.out), {}};
}

unsigned worker_count(const CommonOptions& common) {
  if (common.threads < 0) throw InvalidInput("--threads must be nonnegative");
  return static_cast<unsigned>(common.threads);
}

void require_seed(const OptionSet& set) {
  if (!set.provided("seed")) throw InvalidInput("--seed is required for this subcommand");
}

// ---------------------------------------------------------------- subcommands

struct ConstantsOptions {
  CommonOptions common;
  int n = 256;
  std::vector<int> sensor_counts;
  std::string family;
  std::string basis;
  bool circulant = false;
};

int run_constants_sweep(OptionSet& set, ConstantsOptions& opt) {
  apply_config(set, opt.common);
  require_seed(set);
  if (!set.provided("family")) throw InvalidInput("--family is required");
  if (!set.provided("basis")) throw InvalidInput("--basis is required");
  if (!set.provided("C")) throw InvalidInput("--C is required");
  const auto start = std::chrono::steady_clock::now();
  RunWriter writer = make_writer(opt.common);
  const parcs::UnitaryBasis basis = parcs::build_basis(parcs::basis_kind_from_string(opt.basis),
                                                       opt.n);
  parcs::CsvTable table;
  table.header = {"C",      "basis",          "family",       "gamma_distinct2",
                  "gamma_identical2", "xi_distinct2", "xi_identical2"};
  for (int sensors : opt.sensor_counts) {
    const parcs::ProfileSet profile = parcs::make_profile_set(
        opt.family, sensors, opt.n, parcs::derive_seed(opt.common.seed, sensors), opt.circulant);
    const double gd = parcs::gamma_distinct(profile, basis, worker_count(opt.common));
    const double gi = parcs::gamma_identical(profile, basis, worker_count(opt.common));
    const double xd = parcs::xi_distinct(profile);
    const double xi = parcs::xi_identical(profile);
    table.rows.push_back({std::to_string(sensors), opt.basis, opt.family,
                          parcs::format_g17(gd * gd), parcs::format_g17(gi * gi),
                          parcs::format_g17(xd * xd), parcs::format_g17(xi * xi)});
  }
  writer.write("constants.csv", table.to_string());
  if (opt.common.plot) {
    writer.write("constants.svg", constants_plot(parcs::parse_csv(writer.read("constants.csv"))));
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
  finish_run("constants-sweep", set, writer, wall);
  return 0;
}

struct PhaseOptions {
  CommonOptions common;
  int n = 128;
  int grid = 50;
  int trials = 20;
  double tol = 1e-3;
  std::vector<int> sensor_counts{1};
  std::string family = "global";
  std::string basis = "fourier";
  std::string mode = "distinct";
  std::string dist = "gaussian";
  bool circulant = false;
  bool fixed_ensembles = false;
  int max_iterations = 3000;
  double solver_tol = 1e-6;
};

int run_phase_transition(OptionSet& set, PhaseOptions& opt) {
  apply_config(set, opt.common);
  require_seed(set);
  const auto start = std::chrono::steady_clock::now();
  RunWriter writer = make_writer(opt.common);

  parcs::ExperimentConfig cfg;
  cfg.n = opt.n;
  cfg.grid_rows = opt.grid;
  cfg.grid_cols = opt.grid;
  cfg.trials = opt.trials;
  cfg.tol = opt.tol;
  cfg.sensor_counts = opt.sensor_counts;
  cfg.family = opt.family;
  cfg.circulant = opt.circulant;
  cfg.basis = parcs::basis_kind_from_string(opt.basis);
  cfg.mode = parcs::measurement_mode_from_string(opt.mode);
  cfg.entry_dist = parcs::entry_dist_from_string(opt.dist);
  cfg.refresh_ensembles = !opt.fixed_ensembles;
  cfg.seed = opt.common.seed;
  cfg.solver.max_iterations = opt.max_iterations;
  cfg.solver.primal_tol = opt.solver_tol;
  cfg.solver.feasibility_tol = opt.solver_tol;

  const std::vector<parcs::PhaseGrid> grids = parcs::run_all_grids(cfg, worker_count(opt.common));

  for (const parcs::PhaseGrid& grid : grids) {
    parcs::CsvTable cells;
    cells.header = {"cell_x", "cell_y", "success_fraction"};
    for (int iy = 0; iy < grid.rows; ++iy) {
      for (int ix = 0; ix < grid.cols; ++ix) {
        cells.rows.push_back({parcs::format_g17(grid.axis_x(ix)),
                              parcs::format_g17(grid.axis_y(iy)),
                              parcs::format_g17(grid.at(iy, ix))});
      }
    }
    parcs::CsvTable curve;
    curve.header = {"cell_x", "transition"};
    for (int ix = 0; ix < grid.cols; ++ix) {
      curve.rows.push_back({parcs::format_g17(grid.axis_x(ix)),
                            parcs::format_g17(grid.transition_curve[ix])});
    }
    const std::string tag = "C" + std::to_string(grid.sensor_count);
    writer.write("grid_" + tag + ".csv", cells.to_string());
    writer.write("curve_" + tag + ".csv", curve.to_string());
  }

  // Config echo sidecar for provenance.
  std::string echo;
  echo += "subcommand=phase-transition\n";
  for (const auto& [key, value] : set.render_all()) echo += key + '=' + value + '\n';
  writer.write("phase_config.txt", echo);

  if (opt.common.plot) {
    std::vector<std::pair<std::string, parcs::CsvTable>> curves;
    for (const parcs::PhaseGrid& grid : grids) {
      const std::string tag = "C" + std::to_string(grid.sensor_count);
      writer.write("phase_" + tag + ".svg",
                   grid_plot(parcs::parse_csv(writer.read("grid_" + tag + ".csv")),
                             "success fraction, C=" + std::to_string(grid.sensor_count)));
      curves.emplace_back(tag, parcs::parse_csv(writer.read("curve_" + tag + ".csv")));
    }
    writer.write("curves.svg", curves_plot(curves));
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
  finish_run("phase-transition", set, writer, wall);
  return 0;
}

struct AricOptions {
  CommonOptions common;
  int n = 16;
  int m = 8;
  int sensors = 1;
  std::string family = "partitioned";
  std::string basis = "canonical";
  std::string mode = "distinct";
  std::string dist = "gaussian";
  std::string method = "both";
  std::vector<int> sparsities{1, 2};
  int trials = 100000;
};

int run_aric_check(OptionSet& set, AricOptions& opt) {
  apply_config(set, opt.common);
  require_seed(set);
  if (opt.method != "exhaustive" && opt.method != "sampled" && opt.method != "both") {
    throw InvalidInput("--method must be exhaustive, sampled, or both");
  }
  const auto start = std::chrono::steady_clock::now();
  RunWriter writer = make_writer(opt.common);

  const parcs::UnitaryBasis basis = parcs::build_basis(parcs::basis_kind_from_string(opt.basis),
                                                       opt.n);
  const parcs::ProfileSet profile = parcs::make_profile_set(
      opt.family, opt.sensors, opt.n, parcs::derive_seed(opt.common.seed, 0));
  const parcs::MeasurementMode mode = parcs::measurement_mode_from_string(opt.mode);
  const parcs::EntryDist dist = parcs::entry_dist_from_string(opt.dist);
  const std::uint64_t draw_seed = parcs::derive_seed(opt.common.seed, 1);
  const parcs::MeasurementEnsemble ensemble =
      mode == parcs::MeasurementMode::Identical
          ? parcs::assemble_identical(profile, basis, opt.m, dist, draw_seed)
          : parcs::assemble_distinct(profile, basis, opt.m, dist, draw_seed);

  parcs::CsvTable table;
  table.header = {"s",      "method", "alpha_s",    "beta_s",
                  "checked", "ratio",  "sufficient", "symmetric_scale"};
  auto add_row = [&table](const parcs::AricEstimate& estimate) {
    const double ratio = estimate.alpha_s > 0.0
                             ? estimate.beta_s / estimate.alpha_s
                             : std::numeric_limits<double>::infinity();
    table.rows.push_back({std::to_string(estimate.s),
                          estimate.method == parcs::AricMethod::Exhaustive ? "exhaustive"
                                                                           : "sampled",
                          parcs::format_g17(estimate.alpha_s), parcs::format_g17(estimate.beta_s),
                          std::to_string(estimate.supports_checked), parcs::format_g17(ratio),
                          parcs::recovery_sufficient(estimate) ? "1" : "0",
                          parcs::format_g17(parcs::symmetric_scaling(estimate))});
  };
  for (int s : opt.sparsities) {
    if (opt.method != "sampled") {
      add_row(parcs::aric_exhaustive(ensemble.matrix, s, worker_count(opt.common)));
    }
    if (opt.method != "exhaustive") {
      add_row(parcs::aric_sampled(ensemble.matrix, s, opt.trials,
                                  parcs::derive_seed(opt.common.seed, 2, s)));
    }
  }
  writer.write("aric.csv", table.to_string());

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
  finish_run("aric-check", set, writer, wall);
  return 0;
}

struct RecoverOptions {
  CommonOptions common;
  int n = 64;
  int m = 32;
  int sensors = 1;
  int sparsity = 4;
  std::string family = "global";
  std::string basis = "fourier";
  std::string mode = "distinct";
  std::string dist = "gaussian";
  double noise = 0.0;
  double eta = 0.0;
  int max_iterations = 20000;
};

int run_recover(OptionSet& set, RecoverOptions& opt) {
  apply_config(set, opt.common);
  require_seed(set);
  const auto start = std::chrono::steady_clock::now();
  RunWriter writer = make_writer(opt.common);

  const parcs::UnitaryBasis basis = parcs::build_basis(parcs::basis_kind_from_string(opt.basis),
                                                       opt.n);
  const parcs::ProfileSet profile = parcs::make_profile_set(
      opt.family, opt.sensors, opt.n, parcs::derive_seed(opt.common.seed, 0));
  const parcs::MeasurementMode mode = parcs::measurement_mode_from_string(opt.mode);
  const parcs::EntryDist dist = parcs::entry_dist_from_string(opt.dist);
  const parcs::MeasurementEnsemble ensemble =
      mode == parcs::MeasurementMode::Identical
          ? parcs::assemble_identical(profile, basis, opt.m, dist,
                                      parcs::derive_seed(opt.common.seed, 1))
          : parcs::assemble_distinct(profile, basis, opt.m, dist,
                                     parcs::derive_seed(opt.common.seed, 1));

  const parcs::Vec x = parcs::random_sparse_signal(opt.n, opt.sparsity,
                                                   parcs::derive_seed(opt.common.seed, 2));
  parcs::Vec y = ensemble.matrix * x;
  if (opt.noise < 0.0) throw InvalidInput("--noise must be nonnegative");
  if (opt.noise > 0.0) {
    parcs::RandomStream stream(parcs::derive_seed(opt.common.seed, 3));
    parcs::Vec e(opt.m);
    for (int i = 0; i < opt.m; ++i) e[i] = parcs::Complex(stream.gaussian(), stream.gaussian());
    e *= opt.noise / e.norm();
    y += e;
  }

  parcs::SolverConfig solver;
  solver.eta = set.provided("eta") ? opt.eta : opt.noise;
  solver.max_iterations = opt.max_iterations;
  const parcs::RecoveryResult result = parcs::solve_bpdn(ensemble.matrix, y, solver);

  parcs::CsvTable summary;
  summary.header = {"n",     "m",        "C",          "s",          "family",
                    "basis", "mode",     "noise",      "eta",        "relative_error",
                    "objective", "iterations", "converged", "feasibility_gap"};
  summary.rows.push_back({std::to_string(opt.n), std::to_string(opt.m),
                          std::to_string(opt.sensors), std::to_string(opt.sparsity), opt.family,
                          opt.basis, opt.mode, parcs::format_g17(opt.noise),
                          parcs::format_g17(solver.eta),
                          parcs::format_g17(parcs::relative_error(x, result.x_hat)),
                          parcs::format_g17(result.objective), std::to_string(result.iterations),
                          result.converged ? "1" : "0",
                          parcs::format_g17(result.final_feasibility_gap)});
  writer.write("recover.csv", summary.to_string());

  parcs::CsvTable solution;
  solution.header = {"index", "truth_re", "truth_im", "estimate_re", "estimate_im"};
  for (int i = 0; i < opt.n; ++i) {
    solution.rows.push_back({std::to_string(i), parcs::format_g17(x[i].real()),
                             parcs::format_g17(x[i].imag()),
                             parcs::format_g17(result.x_hat[i].real()),
                             parcs::format_g17(result.x_hat[i].imag())});
  }
  writer.write("solution.csv", solution.to_string());

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
  finish_run("recover", set, writer, wall);
  return 0;
}

int run_report(OptionSet& set, CommonOptions& common) {
  apply_config(set, common);
  const auto start = std::chrono::steady_clock::now();
  RunWriter writer = make_writer(common);

  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(writer.out_dir)) {
    if (entry.is_regular_file()) names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());

  std::vector<std::pair<std::string, parcs::CsvTable>> curves;
  for (const std::string& name : names) {
    if (name == "constants.csv") {
      writer.write("constants.svg", constants_plot(parcs::parse_csv(writer.read(name))));
    } else if (name.rfind("grid_", 0) == 0 && name.size() > 9 &&
               name.substr(name.size() - 4) == ".csv") {
      const std::string tag = name.substr(5, name.size() - 9);
      writer.write("phase_" + tag + ".svg",
                   grid_plot(parcs::parse_csv(writer.read(name)), "success fraction, " + tag));
    } else if (name.rfind("curve_", 0) == 0 && name.size() > 10 &&
               name.substr(name.size() - 4) == ".csv") {
      const std::string tag = name.substr(6, name.size() - 10);
      curves.emplace_back(tag, parcs::parse_csv(writer.read(name)));
    }
  }
  if (!curves.empty()) writer.write("curves.svg", curves_plot(curves));
  if (writer.digests.empty()) {
    std::printf("no plottable CSV files found in %s\n", writer.out_dir.string().c_str());
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
  finish_run("report", set, writer, wall);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel-acquisition compressed sensing toolkit"};
  app.require_subcommand(1);

  ConstantsOptions constants_opt;
  OptionSet constants_set;
  CLI::App* constants_cmd =
      app.add_subcommand("constants-sweep", "compute condition constants across sensor counts");
  bind_int(constants_set, constants_cmd, "--n", "n", constants_opt.n, "signal dimension");
  bind_int_list(constants_set, constants_cmd, "--C", "C", constants_opt.sensor_counts,
                "sensor counts, comma separated");
  bind_string(constants_set, constants_cmd, "--family", "family", constants_opt.family,
              "profile family: partitioned, banded, global, rademacher");
  bind_string(constants_set, constants_cmd, "--basis", "basis", constants_opt.basis,
              "sparsity basis: canonical, fourier, cosine, haar");
  bind_flag(constants_set, constants_cmd, "--circulant", "circulant", constants_opt.circulant,
            "use the circulant variant of the family");
  bind_common(constants_set, constants_cmd, constants_opt.common, true, true);

  PhaseOptions phase_opt;
  OptionSet phase_set;
  CLI::App* phase_cmd =
      app.add_subcommand("phase-transition", "run the empirical phase-transition grid");
  bind_int(phase_set, phase_cmd, "--n", "n", phase_opt.n, "signal dimension");
  bind_int(phase_set, phase_cmd, "--grid", "grid", phase_opt.grid, "grid resolution per axis");
  bind_int(phase_set, phase_cmd, "--trials", "trials", phase_opt.trials, "trials per cell");
  bind_double(phase_set, phase_cmd, "--tol", "tol", phase_opt.tol,
              "relative-error success threshold");
  bind_int_list(phase_set, phase_cmd, "--C", "C", phase_opt.sensor_counts,
                "sensor counts, comma separated");
  bind_string(phase_set, phase_cmd, "--family", "family", phase_opt.family, "profile family");
  bind_string(phase_set, phase_cmd, "--basis", "basis", phase_opt.basis, "sparsity basis");
  bind_string(phase_set, phase_cmd, "--mode", "mode", phase_opt.mode,
              "sampling mode: distinct or identical");
  bind_string(phase_set, phase_cmd, "--dist", "dist", phase_opt.dist,
              "measurement entries: gaussian or rademacher");
  bind_flag(phase_set, phase_cmd, "--circulant", "circulant", phase_opt.circulant,
            "use the circulant variant of the family");
  bind_flag(phase_set, phase_cmd, "--fixed-ensembles", "fixed-ensembles",
            phase_opt.fixed_ensembles, "reuse one ensemble per cell instead of per trial");
  bind_int(phase_set, phase_cmd, "--max-iter", "max-iter", phase_opt.max_iterations,
           "solver iteration cap per cell");
  bind_double(phase_set, phase_cmd, "--solver-tol", "solver-tol", phase_opt.solver_tol,
              "solver primal and feasibility tolerance");
  bind_common(phase_set, phase_cmd, phase_opt.common, true, true);

  AricOptions aric_opt;
  OptionSet aric_set;
  CLI::App* aric_cmd =
      app.add_subcommand("aric-check", "estimate restricted-isometry constants of an ensemble");
  bind_int(aric_set, aric_cmd, "--n", "n", aric_opt.n, "signal dimension");
  bind_int(aric_set, aric_cmd, "--m", "m", aric_opt.m, "total measurement rows");
  bind_int(aric_set, aric_cmd, "--C", "C", aric_opt.sensors, "sensor count");
  bind_string(aric_set, aric_cmd, "--family", "family", aric_opt.family, "profile family");
  bind_string(aric_set, aric_cmd, "--basis", "basis", aric_opt.basis, "sparsity basis");
  bind_string(aric_set, aric_cmd, "--mode", "mode", aric_opt.mode,
              "sampling mode: distinct or identical");
  bind_string(aric_set, aric_cmd, "--dist", "dist", aric_opt.dist,
              "measurement entries: gaussian or rademacher");
  bind_string(aric_set, aric_cmd, "--method", "method", aric_opt.method,
              "exhaustive, sampled, or both");
  bind_int_list(aric_set, aric_cmd, "--s", "s", aric_opt.sparsities,
                "sparsity levels, comma separated");
  bind_int(aric_set, aric_cmd, "--trials", "trials", aric_opt.trials,
           "sampled-method trial count");
  bind_common(aric_set, aric_cmd, aric_opt.common, true, false);

  RecoverOptions recover_opt;
  OptionSet recover_set;
  CLI::App* recover_cmd = app.add_subcommand("recover", "solve one noisy recovery instance");
  bind_int(recover_set, recover_cmd, "--n", "n", recover_opt.n, "signal dimension");
  bind_int(recover_set, recover_cmd, "--m", "m", recover_opt.m, "total measurement rows");
  bind_int(recover_set, recover_cmd, "--C", "C", recover_opt.sensors, "sensor count");
  bind_int(recover_set, recover_cmd, "--s", "s", recover_opt.sparsity, "signal sparsity");
  bind_string(recover_set, recover_cmd, "--family", "family", recover_opt.family,
              "profile family");
  bind_string(recover_set, recover_cmd, "--basis", "basis", recover_opt.basis, "sparsity basis");
  bind_string(recover_set, recover_cmd, "--mode", "mode", recover_opt.mode,
              "sampling mode: distinct or identical");
  bind_string(recover_set, recover_cmd, "--dist", "dist", recover_opt.dist,
              "measurement entries: gaussian or rademacher");
  bind_double(recover_set, recover_cmd, "--noise", "noise", recover_opt.noise,
              "norm of the injected noise");
  bind_double(recover_set, recover_cmd, "--eta", "eta", recover_opt.eta,
              "solver noise budget (defaults to --noise)");
  bind_int(recover_set, recover_cmd, "--max-iter", "max-iter", recover_opt.max_iterations,
           "solver iteration cap");
  bind_common(recover_set, recover_cmd, recover_opt.common, true, false);

  CommonOptions report_opt;
  OptionSet report_set;
  CLI::App* report_cmd =
      app.add_subcommand("report", "regenerate SVG plots from the CSVs in --out");
  bind_common(report_set, report_cmd, report_opt, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::fprintf(stderr, "%s\nrun with --help for usage\n", error.what());
    return 1;
  }

  try {
    if (app.got_subcommand(constants_cmd)) return run_constants_sweep(constants_set, constants_opt);
    if (app.got_subcommand(phase_cmd)) return run_phase_transition(phase_set, phase_opt);
    if (app.got_subcommand(aric_cmd)) return run_aric_check(aric_set, aric_opt);
    if (app.got_subcommand(recover_cmd)) return run_recover(recover_set, recover_opt);
    if (app.got_subcommand(report_cmd)) return run_report(report_set, report_opt);
    std::fprintf(stderr, "no subcommand selected\n");
    return 1;
  } catch (const parcs::ResourceLimit& error) {
    std::fprintf(stderr, "resource limit: %s\n", error.what());
    return 1;
  } catch (const InvalidInput& error) {
    std::fprintf(stderr, "invalid input: %s\n", error.what());
    return 1;
  } catch (const parcs::RuntimeFailure& error) {
    std::fprintf(stderr, "runtime failure: %s\n", error.what());
    return 2;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "unexpected error: %s\n", error.what());
    return 2;
  }
}
