// Copyright 2026 The genleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genleak/attacks/attack_csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "genleak/numcore/errors.hpp"

namespace genleak {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

int parse_int(std::string_view field, const char* what) {
  int value = 0;
  const auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw FormatError(std::string("attack csv: bad ") + what + " '" +
                      std::string(field) + "'");
  }
  return value;
}

double parse_double(std::string_view field) {
  const std::string text(field);
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw FormatError("attack csv: bad loss '" + text + "'");
  }
  return value;
}

}  // namespace

std::string attack_row_to_csv_line(const AttackRow& row) {
  if (row.target_id.find(',') != std::string::npos ||
      row.mode.find(',') != std::string::npos) {
    throw ValidationError("attack csv fields may not contain commas");
  }
  char loss[32];
  std::snprintf(loss, sizeof(loss), "%.17g", row.loss);
  std::string line = row.target_id;
  line += ',' + std::to_string(row.n) + ',';
  if (row.true_membership) line += *row.true_membership ? "1" : "0";
  line += ',';
  line += loss;
  line += ',' + std::to_string(row.restarts) + ',' +
          std::to_string(row.iterations) + ',' + row.mode;
  return line;
}

std::string attack_rows_to_csv(const std::vector<AttackRow>& rows) {
  std::string out(kAttackCsvHeader);
  out += '\n';
  for (const AttackRow& row : rows) {
    out += attack_row_to_csv_line(row);
    out += '\n';
  }
  return out;
}

std::vector<AttackRow> parse_attack_csv(std::string_view text) {
  std::vector<AttackRow> rows;
  bool header_seen = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kAttackCsvHeader) throw FormatError("attack csv: bad header");
      header_seen = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 7) throw FormatError("attack csv: expected 7 fields");
    AttackRow row;
    row.target_id = std::string(fields[0]);
    row.n = parse_int(fields[1], "n");
    if (fields[2] == "1") {
      row.true_membership = true;
    } else if (fields[2] == "0") {
      row.true_membership = false;
    } else if (!fields[2].empty()) {
      throw FormatError("attack csv: bad membership '" + std::string(fields[2]) + "'");
    }
    row.loss = parse_double(fields[3]);
    row.restarts = parse_int(fields[4], "restarts");
    row.iterations = parse_int(fields[5], "iterations");
    row.mode = std::string(fields[6]);
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw FormatError("attack csv: missing header");
  return rows;
}

}  // namespace genleak
