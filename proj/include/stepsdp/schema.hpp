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

#ifndef STEPSDP_SCHEMA_HPP_
#define STEPSDP_SCHEMA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace stepsdp {

struct Attribute {
  std::string name;
  std::vector<std::string> levels;  // declared order defines level indices
};

// Ordered attribute list with validated names/levels. Cell indices over any
// attribute subset use mixed-radix encoding in schema order with the last
// attribute fastest.
class Schema {
 public:
  explicit Schema(std::vector<Attribute> attributes);

  static Schema from_json(const nlohmann::json& j);
  static Schema from_file(const std::string& path);
  nlohmann::json to_json() const;

  std::size_t attribute_count() const { return attributes_.size(); }
  const Attribute& attribute(std::size_t j) const { return attributes_[j]; }
  const std::vector<Attribute>& attributes() const { return attributes_; }
  std::size_t cardinality(std::size_t j) const {
    return attributes_[j].levels.size();
  }
  std::size_t max_cardinality() const;

  //

  // Product of all cardinalities (full cross-tabulation size); construction
  // fails if it is not representable.
  uint64_t total_cells() const { return total_cells_; }

  // Stride of attribute j in the full-table cell index.
  uint64_t stride(std::size_t j) const { return strides_[j]; }

  std::optional<std::size_t> find_attribute(std::string_view name) const;
  std::optional<uint32_t> level_index(std::size_t j,
                                      std::string_view label) const;

  bool operator==(const Schema& other) const;

 private:
  std::vector<Attribute> attributes_;
  std::vector<uint64_t> strides_;
  uint64_t total_cells_ = 1;
};

}  // namespace stepsdp

#endif  // STEPSDP_SCHEMA_HPP_
