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

#ifndef STEPSDP_BUDGET_HPP_
#define STEPSDP_BUDGET_HPP_

#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace stepsdp {

// Privacy-loss parameter. Infinity is the no-noise sentinel, accepted by
// the library for test oracles and refused by the CLI unless explicitly
// unlocked.
struct PrivacyBudget {
  double epsilon = 0.0;

  bool unlimited() const { return std::isinf(epsilon); }
  bool valid() const { return epsilon > 0.0; }
};

// L1 global sensitivity of a released statistic vector.
struct Sensitivity {
  double delta1 = 1.0;

  bool valid() const { return delta1 > 0.0 && std::isfinite(delta1); }
};

struct BudgetEntry {
  std::string label;
  double epsilon_spent = 0.0;
  // Entries in the same parallel group cost only the group maximum;
  // entries without a group compose sequentially.
  std::optional<std::string> parallel_group;
};

// Append-only spend record with a hard capacity. Totals are computed in a
// canonical (label-sorted) order so that concurrent charge interleavings
// cannot change the result.
class BudgetLedger {
 public:
  explicit BudgetLedger(double capacity) : capacity_(capacity) {}

  // Throws BudgetError if the charge would push the total past capacity
  // (tiny relative slack for float accumulation).
  void charge(std::string label, double epsilon,
              std::optional<std::string> parallel_group = std::nullopt);

  double total() const;
  double capacity() const { return capacity_; }
  std::vector<BudgetEntry> entries() const;
  nlohmann::json to_json() const;

 private:
  double total_locked() const;

  double capacity_;
  mutable std::mutex mu_;
  std::vector<BudgetEntry> entries_;
};

}  // namespace stepsdp

#endif  // STEPSDP_BUDGET_HPP_
