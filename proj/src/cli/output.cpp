// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#include "cli/output.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "uavrelay/errors.hpp"

#ifndef UAVRELAY_VERSION
#define UAVRELAY_VERSION "0.0.0"
#endif

namespace uavrelay::cli {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

CsvTable::CsvTable(std::initializer_list<std::string_view> header) : columns_(header.size()) {
  bool first = true;
  for (std::string_view h : header) {
    if (!first) text_ += ',';
    text_ += h;
    first = false;
  }
  text_ += '\n';
}

CsvTable& CsvTable::cell(double value) { return cell(std::string_view(format_number(value))); }

CsvTable& CsvTable::cell(long long value) { return cell(std::string_view(std::to_string(value))); }

CsvTable& CsvTable::cell(std::string_view text) {
  if (in_row_ > 0) text_ += ',';
  text_ += text;
  ++in_row_;
  return *this;
}

void CsvTable::end_row() {
  if (in_row_ != columns_) {
    throw std::logic_error("CsvTable: row has " + std::to_string(in_row_) + " cells, expected " +
                           std::to_string(columns_));
  }
  text_ += '\n';
  in_row_ = 0;
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "'");
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into '" + path.string() + "'");
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

nlohmann::json canonicalize(const nlohmann::json& doc) {
  if (doc.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : doc.items()) out[key] = canonicalize(value);
    return out;
  }
  if (doc.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& value : doc) out.push_back(canonicalize(value));
    return out;
  }
  if (doc.is_number()) return nlohmann::json(doc.get<double>());
  return doc;
}

}  // namespace

std::string scenario_digest(const nlohmann::json& doc) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonicalize(doc).dump())));
  return buf;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j = {
      {"command", command},
      {"scenario_digest", scenario_digest},
      {"seed", seed},
      {"output_paths", output_paths},
      {"tool_version", tool_version},
      {"wall_time_s", wall_time_s},
  };
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j;
}

std::string_view tool_version() { return UAVRELAY_VERSION; }

}  // namespace uavrelay::cli
