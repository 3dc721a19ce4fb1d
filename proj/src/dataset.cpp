// Copyright 2026 The stepsdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stepsdp/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "stepsdp/errors.hpp"

namespace stepsdp {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  // Tolerate trailing CR from CRLF input.
  if (!fields.empty() && !fields.back().empty() &&
      fields.back().back() == '\r') {
    fields.back().pop_back();
  }
  return fields;
}

}  // namespace

CategoricalDataset::CategoricalDataset(Schema schema,
                                       std::vector<uint16_t> values)
    : schema_(std::move(schema)), values_(std::move(values)) {
  const std::size_t p = schema_.attribute_count();
  if (values_.size() % p != 0) {
    throw ConfigError("dataset values not a multiple of attribute count");
  }
  n_ = values_.size() / p;
  if (n_ >= (std::size_t(1) << 53)) {
    throw ConfigError("record count too large for exact double counts");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (values_[i * p + j] >= schema_.cardinality(j)) {
        throw ConfigError("level index out of range for attribute '" +
                          schema_.attribute(j).name + "'");
      }
    }
  }
}

CategoricalDataset CategoricalDataset::load_csv(const std::string& path,
                                                const Schema* schema) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open CSV file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("empty CSV file: " + path);
  }
  const std::vector<std::string> header = split_csv_line(line);
  const std::size_t p = header.size();
  if (p == 0 || (p == 1 && header[0].empty())) {
    throw ConfigError("CSV header has no columns: " + path);
  }

  if (schema != nullptr) {
    if (p != schema->attribute_count()) {
      throw ConfigError("CSV has " + std::to_string(p) + " columns, schema " +
                        std::to_string(schema->attribute_count()));
    }
    for (std::size_t j = 0; j < p; ++j) {
      if (header[j] != schema->attribute(j).name) {
        throw ConfigError("CSV column '" + header[j] +
                          "' does not match schema attribute '" +
                          schema->attribute(j).name + "'");
      }
    }
  }

  std::vector<std::vector<std::string>> raw_rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) {
      break;  // trailing newline
    }
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != p) {
      throw ConfigError("ragged CSV row at line " + std::to_string(line_no) +
                        ": got " + std::to_string(fields.size()) +
                        " fields, expected " + std::to_string(p));
    }
    for (std::size_t j = 0; j < p; ++j) {
      if (fields[j].empty()) {
        throw ConfigError("missing value at line " + std::to_string(line_no) +
                          ", column '" + header[j] + "'");
      }
    }
    raw_rows.push_back(std::move(fields));
  }
  if (raw_rows.empty()) {
    throw ConfigError("CSV has a header but no data rows: " + path);
  }

  Schema resolved = [&]() -> Schema {
    if (schema != nullptr) return *schema;
    // Infer: sorted distinct values per column.
    std::vector<Attribute> attrs(p);
    for (std::size_t j = 0; j < p; ++j) {
      std::map<std::string, bool> distinct;
      for (const auto& row : raw_rows) {
        distinct.emplace(row[j], true);
      }
      attrs[j].name = header[j];
      for (const auto& [label, _] : distinct) {
        attrs[j].levels.push_back(label);
      }
    }
    return Schema(std::move(attrs));
  }();

  std::vector<uint16_t> values;
  values.reserve(raw_rows.size() * p);
  for (std::size_t i = 0; i < raw_rows.size(); ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const auto idx = resolved.level_index(j, raw_rows[i][j]);
      if (!idx.has_value()) {
        throw ConfigError("unknown level '" + raw_rows[i][j] +
                          "' for attribute '" + resolved.attribute(j).name +
                          "' at line " + std::to_string(i + 2));
      }
      values.push_back(uint16_t(*idx));
    }
  }
  return CategoricalDataset(std::move(resolved), std::move(values));
}

void CategoricalDataset::write_csv(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  const std::size_t p = schema_.attribute_count();
  for (std::size_t j = 0; j < p; ++j) {
    if (j > 0) out << ',';
    out << schema_.attribute(j).name;
  }
  out << '\n';
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (j > 0) out << ',';
      out << schema_.attribute(j).levels[level(i, j)];
    }
    out << '\n';
  }
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

uint64_t CategoricalDataset::cell_index(std::size_t record) const {
  const std::size_t p = schema_.attribute_count();
  uint64_t cell = 0;
  for (std::size_t j = 0; j < p; ++j) {
    cell += uint64_t(level(record, j)) * schema_.stride(j);
  }
  return cell;
}

}  // namespace stepsdp
