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

#include "stepsdp/schema.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "stepsdp/errors.hpp"

namespace stepsdp {
namespace {

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == ' ' || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Schema::Schema(std::vector<Attribute> attributes)
    : attributes_(std::move(attributes)) {
  if (attributes_.empty()) {
    throw ConfigError("schema needs at least one attribute");
  }
  std::unordered_set<std::string> names;
  for (const Attribute& a : attributes_) {
    if (!valid_label(a.name)) {
      throw ConfigError("invalid attribute name: '" + a.name + "'");
    }
    if (!names.insert(a.name).second) {
      throw ConfigError("duplicate attribute name: '" + a.name + "'");
    }
    if (a.levels.size() < 2) {
      throw ConfigError("attribute '" + a.name + "' needs cardinality >= 2");
    }
    if (a.levels.size() > 65535) {
      throw ConfigError("attribute '" + a.name + "' exceeds 65535 levels");
    }
    std::unordered_set<std::string_view> labels;
    for (const std::string& l : a.levels) {
      if (!valid_label(l)) {
        throw ConfigError("invalid level label '" + l + "' in attribute '" +
                          a.name + "' (allowed: [A-Za-z0-9_ -])");
      }
      if (!labels.insert(l).second) {
        throw ConfigError("duplicate level '" + l + "' in attribute '" +
                          a.name + "'");
      }
    }
  }
  // Strides, last attribute fastest; overflow-checked product.
  strides_.assign(attributes_.size(), 1);
  unsigned __int128 cells = 1;
  for (std::size_t j = attributes_.size(); j-- > 0;) {
    strides_[j] = uint64_t(cells);
    cells *= attributes_[j].levels.size();
    if (cells > (unsigned __int128)(uint64_t(1) << 62)) {
      throw ConfigError("full cross-tabulation size overflows (> 2^62 cells)");
    }
  }
  total_cells_ = uint64_t(cells);
}

std::size_t Schema::max_cardinality() const {
  std::size_t b = 0;
  for (const Attribute& a : attributes_) {
    b = std::max(b, a.levels.size());
  }
  return b;
}

Schema Schema::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("attributes") ||
      !j["attributes"].is_array()) {
    throw ConfigError("schema JSON must be {\"attributes\": [...]}");
  }
  std::vector<Attribute> attrs;
  for (const auto& ja : j["attributes"]) {
    Attribute a;
    a.name = ja.at("name").get<std::string>();
    for (const auto& jl : ja.at("levels")) {
      a.levels.push_back(jl.get<std::string>());
    }
    attrs.push_back(std::move(a));
  }
  return Schema(std::move(attrs));
}

Schema Schema::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open schema file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("schema JSON parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json Schema::to_json() const {
  nlohmann::json attrs = nlohmann::json::array();
  for (const Attribute& a : attributes_) {
    attrs.push_back({{"name", a.name}, {"levels", a.levels}});
  }
  return {{"attributes", attrs}};
}

std::optional<std::size_t> Schema::find_attribute(std::string_view name) const {
  for (std::size_t j = 0; j < attributes_.size(); ++j) {
    if (attributes_[j].name == name) return j;
  }
  return std::nullopt;
}

std::optional<uint32_t> Schema::level_index(std::size_t j,
                                            std::string_view label) const {
  const std::vector<std::string>& levels = attributes_[j].levels;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (levels[l] == label) return uint32_t(l);
  }
  return std::nullopt;
}

bool Schema::operator==(const Schema& other) const {
  if (attributes_.size() != other.attributes_.size()) return false;
  for (std::size_t j = 0; j < attributes_.size(); ++j) {
    if (attributes_[j].name != other.attributes_[j].name ||
        attributes_[j].levels != other.attributes_[j].levels) {
      return false;
    }
  }
  return true;
}

}  // namespace stepsdp
