// Copyright 2026 The qpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpt/csv.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qpt/errors.hpp"

namespace qpt {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw IoError(fmt::format("line {}: '{}' is not a number", line, s));
  }
  return v;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw IoError("no column named '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

std::string format_csv(const CsvTable& table) {
  fmt::memory_buffer buf;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    fmt::format_to(std::back_inserter(buf), "{}{}", i ? "," : "", table.header[i]);
  }
  buf.push_back('\n');
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      fmt::format_to(std::back_inserter(buf), "{}{:.17g}", i ? "," : "", row[i]);
    }
    buf.push_back('\n');
  }
  return fmt::to_string(buf);
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (table.header.empty()) {
      table.header = split(line);
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != table.header.size()) {
      throw IoError(fmt::format("line {}: expected {} fields, got {}", lineno, table.header.size(),
                                fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f, lineno));
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << format_csv(table);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_csv(ss.str());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace qpt
