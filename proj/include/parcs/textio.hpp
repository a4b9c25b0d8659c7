// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// Text plumbing for the CLI: CSV emission with lossless float formatting,
// key=value config files, append-only run manifests, and content digests.
// Every byte written here is a pure function of the inputs, so archived
// outputs can be compared bitwise across re-runs.
#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "version.hpp"

namespace parcs {

// Shortest round-trippable decimal form (17 significant digits).
inline std::string format_g17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeFailure("cannot open for reading: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw RuntimeFailure("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw RuntimeFailure("write failed: " + path.string());
}

// FNV-1a, 64-bit; digest of output bytes recorded in the manifest.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buffer;
}

// CSV with a header row; fields must not contain commas or newlines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const {
    std::string out;
    auto append_line = [&out](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
      }
      out += '\n';
    };
    append_line(header);
    for (const auto& row : rows) append_line(row);
    return out;
  }
};

inline CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    while (std::getline(cells, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.emplace_back();
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

// key=value configuration text. Later occurrences of a key override earlier
// ones, so appending [run] blocks keeps the last run authoritative. Section
// markers, comments, and meta.* provenance entries are skipped on load.
inline std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#' || line[begin] == '[') continue;
    const std::size_t equals = line.find('=', begin);
    if (equals == std::string::npos) continue;
    std::string key = line.substr(begin, equals - begin);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    if (key.empty() || key.rfind("meta.", 0) == 0) continue;
    std::string value = line.substr(equals + 1);
    const std::size_t value_begin = value.find_first_not_of(" \t");
    value = value_begin == std::string::npos ? std::string() : value.substr(value_begin);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();
    values[key] = value;
  }
  return values;
}

// One [run] block: ordered key=value lines, then meta.* lines. Appended so a
// manifest accumulates the full history of runs into one file.
inline void append_manifest(const std::filesystem::path& path,
                            const std::vector<std::pair<std::string, std::string>>& entries,
                            const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw RuntimeFailure("cannot open manifest: " + path.string());
  out << "[run]\n";
  for (const auto& [key, value] : entries) out << key << '=' << value << '\n';
  for (const auto& [key, value] : meta) out << "meta." << key << '=' << value << '\n';
  out << '\n';
  if (!out) throw RuntimeFailure("manifest write failed: " + path.string());
}

}  // namespace parcs
