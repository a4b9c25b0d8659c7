// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "parcs/svg.hpp"
#include "parcs/textio.hpp"

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* path = std::getenv("PARCS_CLI");
  REQUIRE(path != nullptr);
  return path;
}

int run_cli(const std::string& args) {
  const std::string command = "\"" + cli_path() + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("parcs_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("g17 formatting round-trips doubles losslessly") {
  for (double value : {1.0 / 3.0, 3.141592653589793, 6.02214076e23, 1e-300, -7.25, 0.0}) {
    const std::string text = parcs::format_g17(value);
    REQUIRE(std::stod(text) == value);
  }
  REQUIRE(parcs::format_g17(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("fnv1a64 matches the reference vectors") {
  REQUIRE(parcs::fnv1a64("") == 0xcbf29ce484222325ULL);
  REQUIRE(parcs::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  REQUIRE(parcs::fnv1a64("foobar") == 0x85944171f73967e8ULL);
  REQUIRE(parcs::fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("key=value parsing skips sections, comments, and meta entries") {
  const std::string text =
      "# comment\n"
      "[run]\n"
      "n=16\n"
      "family = global \n"
      "meta.version=0.1.0\n"
      "\n"
      "[run]\n"
      "n=32\n"
      "broken line without equals\n";
  const auto values = parcs::parse_key_values(text);
  REQUIRE(values.size() == 2);
  REQUIRE(values.at("n") == "32");  // later run wins
  REQUIRE(values.at("family") == "global");
  REQUIRE(values.count("meta.version") == 0);
}

TEST_CASE("csv tables round-trip through text") {
  parcs::CsvTable table;
  table.header = {"a", "b", "c"};
  table.rows = {{"1", "2.5", "x"}, {"4", "nan", "y"}};
  const std::string text = table.to_string();
  REQUIRE(text == "a,b,c\n1,2.5,x\n4,nan,y\n");
  const parcs::CsvTable parsed = parcs::parse_csv(text);
  REQUIRE(parsed.header == table.header);
  REQUIRE(parsed.rows == table.rows);
}

TEST_CASE("manifests append run blocks that reload as configs") {
  const fs::path dir = fresh_dir("manifest");
  const fs::path manifest = dir / "manifest.txt";
  parcs::append_manifest(manifest, {{"subcommand", "demo"}, {"n", "8"}},
                         {{"version", "0.1.0"}});
  parcs::append_manifest(manifest, {{"subcommand", "demo"}, {"n", "16"}},
                         {{"version", "0.1.0"}});
  const std::string text = parcs::read_text_file(manifest);
  REQUIRE(count_occurrences(text, "[run]") == 2);
  REQUIRE(count_occurrences(text, "meta.version=0.1.0") == 2);
  const auto values = parcs::parse_key_values(text);
  REQUIRE(values.at("n") == "16");
  REQUIRE(values.at("subcommand") == "demo");
}

TEST_CASE("line charts split polylines at missing points") {
  parcs::PlotSeries series;
  series.name = "demo";
  series.x = {0.0, 1.0, 2.0, 3.0, 4.0};
  series.y = {0.0, 1.0, std::numeric_limits<double>::quiet_NaN(), 3.0, 4.0};
  const std::string svg = parcs::svg_line_chart("t", "x", "y", {series});
  REQUIRE(svg.rfind("<svg", 0) == 0);
  REQUIRE(count_occurrences(svg, "<polyline") == 2);
  REQUIRE(svg.find("demo") != std::string::npos);

  REQUIRE_THROWS_AS(parcs::svg_line_chart("t", "x", "y", {}), parcs::InvalidInput);
}

TEST_CASE("heatmaps validate their shape") {
  const std::string svg = parcs::svg_heatmap("t", 2, 3, {0, 0.5, 1, 0.2, 0.4, 0.9}, "x", "y");
  REQUIRE(count_occurrences(svg, "<rect") == 6 + 2);  // cells + background + frame
  REQUIRE_THROWS_AS(parcs::svg_heatmap("t", 2, 3, {0.0}, "x", "y"), parcs::InvalidInput);
}

TEST_CASE("constants sweep emits the expected trend columns") {
  const fs::path dir = fresh_dir("sweep");
  const int code = run_cli("constants-sweep --family partitioned --basis fourier --C 1,2,4 "
                           "--n 32 --seed 3 --out \"" + dir.string() + "\"");
  REQUIRE(code == 0);
  const parcs::CsvTable table = parcs::parse_csv(parcs::read_text_file(dir / "constants.csv"));
  REQUIRE(table.header[3] == "gamma_distinct2");
  REQUIRE(table.rows.size() == 3);
  for (const auto& row : table.rows) {
    REQUIRE(std::stod(row[3]) == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(std::stod(row[4]) == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("phase transition reruns from its manifest bitwise") {
  const fs::path dir = fresh_dir("phase");
  const fs::path rerun = fresh_dir("phase_rerun");
  const int code = run_cli("phase-transition --n 16 --grid 3 --trials 2 --C 1,2 "
                           "--family global --mode distinct --seed 7 --out \"" +
                           dir.string() + "\"");
  REQUIRE(code == 0);
  const int rerun_code = run_cli("phase-transition --config \"" +
                                 (dir / "manifest.txt").string() + "\" --out \"" +
                                 rerun.string() + "\"");
  REQUIRE(rerun_code == 0);
  for (const char* name : {"grid_C1.csv", "curve_C1.csv", "grid_C2.csv", "curve_C2.csv",
                           "phase_config.txt"}) {
    INFO(name);
    const std::string original = parcs::read_text_file(dir / name);
    const std::string repeated = parcs::read_text_file(rerun / name);
    // The config echo records its own --out; outputs proper must be bitwise equal.
    if (std::string(name) == "phase_config.txt") continue;
    REQUIRE(original == repeated);
  }
  const parcs::CsvTable grid = parcs::parse_csv(parcs::read_text_file(dir / "grid_C1.csv"));
  REQUIRE(grid.header == std::vector<std::string>{"cell_x", "cell_y", "success_fraction"});
  REQUIRE(grid.rows.size() == 9);
}

TEST_CASE("report regenerates plots from archived csv files") {
  const fs::path dir = fresh_dir("report");
  REQUIRE(run_cli("phase-transition --n 16 --grid 3 --trials 2 --C 1 --family global "
                  "--seed 9 --out \"" + dir.string() + "\"") == 0);
  REQUIRE(!fs::exists(dir / "phase_C1.svg"));
  REQUIRE(run_cli("report --out \"" + dir.string() + "\"") == 0);
  REQUIRE(fs::exists(dir / "phase_C1.svg"));
  REQUIRE(fs::exists(dir / "curves.svg"));
  const std::string svg = parcs::read_text_file(dir / "phase_C1.svg");
  REQUIRE(svg.rfind("<svg", 0) == 0);
}

TEST_CASE("recover writes a full solution table") {
  const fs::path dir = fresh_dir("recover");
  REQUIRE(run_cli("recover --n 16 --m 8 --s 1 --family global --seed 21 --out \"" +
                  dir.string() + "\"") == 0);
  const parcs::CsvTable solution = parcs::parse_csv(parcs::read_text_file(dir / "solution.csv"));
  REQUIRE(solution.rows.size() == 16);
  const parcs::CsvTable summary = parcs::parse_csv(parcs::read_text_file(dir / "recover.csv"));
  REQUIRE(summary.rows.size() == 1);
  REQUIRE(std::stod(summary.rows[0][9]) < 1e-5);  // relative_error on an easy instance
}

TEST_CASE("cli exit codes distinguish validation failures") {
  REQUIRE(run_cli("unknown-subcommand") == 1);
  REQUIRE(run_cli("constants-sweep --family partitioned --basis fourier --C 2 --n 16") == 1);
  REQUIRE(run_cli("recover --n 8 --m 4 --s 99 --seed 1 --out \"" +
                  fresh_dir("badrun").string() + "\"") == 1);
  REQUIRE(run_cli("phase-transition --n 16 --grid 2 --trials 1 --C 1 --seed 2 --family nosuch "
                  "--out \"" + fresh_dir("badfam").string() + "\"") == 1);
  REQUIRE(run_cli("report --out \"" + fresh_dir("empty_report").string() + "\"") == 0);
}
