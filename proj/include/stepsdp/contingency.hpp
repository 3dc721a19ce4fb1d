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

#ifndef STEPSDP_CONTINGENCY_HPP_
#define STEPSDP_CONTINGENCY_HPP_

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "stepsdp/dataset.hpp"

namespace stepsdp {

// Cell-count threshold below which tables are stored densely.
inline constexpr uint64_t kDefaultDenseCellLimit = uint64_t(1) << 24;

// Counts over the cross-tabulation of an attribute subset. Dense storage up
// to a configurable cell limit, sparse (hash by cell index) above it.
// Cell indices are mixed radix over the chosen attributes in schema order,
// last attribute fastest.
class ContingencyTable {
 public:
  ContingencyTable(const Schema& schema, std::vector<std::size_t> attrs,
                   uint64_t dense_limit = kDefaultDenseCellLimit);

  const std::vector<std::size_t>& attrs() const { return attrs_; }
  uint64_t cell_count() const { return cells_; }
  bool dense() const { return !dense_.empty() || cells_ == 0; }
  int64_t total() const { return total_; }

  void add(uint64_t cell, int64_t count = 1);
  int64_t count(uint64_t cell) const;

  // Visits non-zero cells in ascending cell order.
  void for_each(const std::function<void(uint64_t, int64_t)>& fn) const;

  const std::vector<int64_t>& dense_counts() const { return dense_; }

  uint64_t cell_of(std::span<const uint16_t> record_levels) const;

 private:
  const Schema* schema_;
  std::vector<std::size_t> attrs_;
  std::vector<uint64_t> strides_;  // within-table strides per chosen attr
  uint64_t cells_;
  int64_t total_ = 0;
  std::vector<int64_t> dense_;
  std::unordered_map<uint64_t, int64_t> sparse_;
};

// Cross-tabulation of the dataset over `attrs` (all records). Throws
// ConfigError for an empty or duplicated attribute list.
ContingencyTable cross_tabulate(const CategoricalDataset& data,
                                std::vector<std::size_t> attrs,
                                uint64_t dense_limit = kDefaultDenseCellLimit);

// One-way counts of `attr` over all records.
std::vector<int64_t> one_way_counts(const CategoricalDataset& data,
                                    std::size_t attr);

// One-way counts over a record subset given by indices.
std::vector<int64_t> one_way_counts(const CategoricalDataset& data,
                                    std::span<const uint32_t> records,
                                    std::size_t attr);

}  // namespace stepsdp

#endif  // STEPSDP_CONTINGENCY_HPP_
