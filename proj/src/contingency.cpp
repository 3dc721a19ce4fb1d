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

#include "stepsdp/contingency.hpp"

#include <algorithm>
#include <unordered_set>

#include "stepsdp/errors.hpp"

namespace stepsdp {

ContingencyTable::ContingencyTable(const Schema& schema,
                                   std::vector<std::size_t> attrs,
                                   uint64_t dense_limit)
    : schema_(&schema), attrs_(std::move(attrs)) {
  if (attrs_.empty()) {
    throw ConfigError("cross-tabulation needs at least one attribute");
  }
  std::unordered_set<std::size_t> seen;
  for (std::size_t a : attrs_) {
    if (a >= schema.attribute_count()) {
      throw ConfigError("attribute index out of range");
    }
    if (!seen.insert(a).second) {
      throw ConfigError("duplicate attribute in cross-tabulation");
    }
  }
  strides_.assign(attrs_.size(), 1);
  unsigned __int128 cells = 1;
  for (std::size_t j = attrs_.size(); j-- > 0;) {
    strides_[j] = uint64_t(cells);
    cells *= schema.cardinality(attrs_[j]);
  }
  cells_ = uint64_t(cells);
  if (cells_ <= dense_limit) {
    dense_.assign(cells_, 0);
  }
}

void ContingencyTable::add(uint64_t cell, int64_t count) {
  total_ += count;
  if (!dense_.empty()) {
    dense_[cell] += count;
  } else {
    sparse_[cell] += count;
  }
}

int64_t ContingencyTable::count(uint64_t cell) const {
  if (!dense_.empty()) {
    return dense_[cell];
  }
  const auto it = sparse_.find(cell);
  return it == sparse_.end() ? 0 : it->second;
}

void ContingencyTable::for_each(
    const std::function<void(uint64_t, int64_t)>& fn) const {
  if (!dense_.empty()) {
    for (uint64_t c = 0; c < cells_; ++c) {
      if (dense_[c] != 0) fn(c, dense_[c]);
    }
    return;
  }
  std::vector<uint64_t> keys;
  keys.reserve(sparse_.size());
  for (const auto& [cell, _] : sparse_) {
    keys.push_back(cell);
  }
  std::sort(keys.begin(), keys.end());
  for (uint64_t c : keys) {
    fn(c, sparse_.at(c));
  }
}

uint64_t ContingencyTable::cell_of(
    std::span<const uint16_t> record_levels) const {
  uint64_t cell = 0;
  for (std::size_t j = 0; j < attrs_.size(); ++j) {
    cell += uint64_t(record_levels[attrs_[j]]) * strides_[j];
  }
  return cell;
}

ContingencyTable cross_tabulate(const CategoricalDataset& data,
                                std::vector<std::size_t> attrs,
                                uint64_t dense_limit) {
  ContingencyTable table(data.schema(), std::move(attrs), dense_limit);
  for (std::size_t i = 0; i < data.record_count(); ++i) {
    table.add(table.cell_of(data.record(i)));
  }
  return table;
}

std::vector<int64_t> one_way_counts(const CategoricalDataset& data,
                                    std::size_t attr) {
  if (attr >= data.attribute_count()) {
    throw ConfigError("attribute index out of range");
  }
  std::vector<int64_t> counts(data.schema().cardinality(attr), 0);
  for (std::size_t i = 0; i < data.record_count(); ++i) {
    ++counts[data.level(i, attr)];
  }
  return counts;
}

std::vector<int64_t> one_way_counts(const CategoricalDataset& data,
                                    std::span<const uint32_t> records,
                                    std::size_t attr) {
  if (attr >= data.attribute_count()) {
    throw ConfigError("attribute index out of range");
  }
  std::vector<int64_t> counts(data.schema().cardinality(attr), 0);
  for (uint32_t i : records) {
    ++counts[data.level(i, attr)];
  }
  return counts;
}

}  // namespace stepsdp
