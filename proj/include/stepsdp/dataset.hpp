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

#ifndef STEPSDP_DATASET_HPP_
#define STEPSDP_DATASET_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stepsdp/schema.hpp"

namespace stepsdp {

// Immutable table of n records over p categorical attributes, stored as
// level indices. The record count n is treated as public knowledge
// throughout the engine. Safe to share across threads once constructed.
class CategoricalDataset {
 public:
  CategoricalDataset(Schema schema, std::vector<uint16_t> values);

  // CSV ingestion: comma separated, header row, UTF-8, labels restricted to
  // [A-Za-z0-9_ -]. With a null schema the levels are inferred as the
  // sorted distinct values per column. Missing values are rejected.
  static CategoricalDataset load_csv(const std::string& path,
                                     const Schema* schema);
  void write_csv(const std::string& path) const;

  const Schema& schema() const { return schema_; }
  std::size_t record_count() const { return n_; }
  std::size_t attribute_count() const { return schema_.attribute_count(); }

  uint32_t level(std::size_t record, std::size_t attr) const {
    return values_[record * schema_.attribute_count() + attr];
  }
  std::span<const uint16_t> record(std::size_t i) const {
    return {values_.data() + i * schema_.attribute_count(),
            schema_.attribute_count()};
  }

  // Full-table cell index of a record.
  uint64_t cell_index(std::size_t record) const;

 private:
  Schema schema_;
  std::vector<uint16_t> values_;  // n x p, row major
  std::size_t n_;
};

}  // namespace stepsdp

#endif  // STEPSDP_DATASET_HPP_
