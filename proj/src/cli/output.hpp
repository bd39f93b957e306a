// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_CLI_OUTPUT_HPP
#define UAVRELAY_CLI_OUTPUT_HPP

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace uavrelay::cli {

/// Shortest round-trip-safe form with at most 17 significant digits,
/// independent of the global locale.
std::string format_number(double value);

/// Comma-separated table with a mandatory header row.
class CsvTable {
 public:
  explicit CsvTable(std::initializer_list<std::string_view> header);

  CsvTable& cell(double value);
  CsvTable& cell(long long value);
  CsvTable& cell(std::string_view text);
  void end_row();

  const std::string& str() const { return text_; }

 private:
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
  std::string text_;
};

/// Writes `content` to a temporary sibling and renames it into place.
/// Throws IoError on failure.
void write_atomically(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes);

/// Stable digest of a config document: keys sorted, numbers widened to
/// double, so field order and integer/float spelling do not matter.
std::string scenario_digest(const nlohmann::json& doc);

struct RunManifest {
  std::string command;
  std::string scenario_digest;
  std::uint64_t seed = 0;
  std::vector<std::string> output_paths;
  std::string tool_version;
  double wall_time_s = 0.0;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
};

std::string_view tool_version();

}  // namespace uavrelay::cli

#endif  // UAVRELAY_CLI_OUTPUT_HPP
