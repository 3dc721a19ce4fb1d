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

#include "stepsdp/budget.hpp"

#include <algorithm>
#include <map>

#include "stepsdp/errors.hpp"

namespace stepsdp {

void BudgetLedger::charge(std::string label, double epsilon,
                          std::optional<std::string> parallel_group) {
  if (!(epsilon > 0.0)) {
    throw BudgetError("budget charge must be positive: " + label);
  }
  std::lock_guard<std::mutex> lock(mu_);
  entries_.push_back({std::move(label), epsilon, std::move(parallel_group)});
  const double t = total_locked();
  // Relative slack absorbs float accumulation; overspending beyond it is a
  // hard stop before any output escapes.
  const double slack = 1e-9 * std::max(1.0, capacity_);
  if (!(t <= capacity_ + slack) && !std::isinf(capacity_)) {
    const BudgetEntry& e = entries_.back();
    const std::string msg = "privacy budget exceeded: total " +
                            std::to_string(t) + " > capacity " +
                            std::to_string(capacity_) + " after charge '" +
                            e.label + "'";
    entries_.pop_back();
    throw BudgetError(msg);
  }
}

double BudgetLedger::total_locked() const {
  // Canonical order: sequential entries sorted by label, then per-group
  // maxima sorted by group id. Charge interleaving cannot change the sum.
  std::vector<const BudgetEntry*> sequential;
  std::map<std::string, double> group_max;
  for (const BudgetEntry& e : entries_) {
    if (e.parallel_group.has_value()) {
      double& m = group_max[*e.parallel_group];
      m = std::max(m, e.epsilon_spent);
    } else {
      sequential.push_back(&e);
    }
  }
  std::sort(sequential.begin(), sequential.end(),
            [](const BudgetEntry* a, const BudgetEntry* b) {
              return a->label < b->label;
            });
  double total = 0.0;
  for (const BudgetEntry* e : sequential) {
    total += e->epsilon_spent;
  }
  for (const auto& [group, m] : group_max) {
    total += m;
  }
  return total;
}

double BudgetLedger::total() const {
  std::lock_guard<std::mutex> lock(mu_);
  return total_locked();
}

std::vector<BudgetEntry> BudgetLedger::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_;
}

nlohmann::json BudgetLedger::to_json() const {
  std::lock_guard<std::mutex> lock(mu_);
  nlohmann::json entries = nlohmann::json::array();
  for (const BudgetEntry& e : entries_) {
    nlohmann::json je;
    je["label"] = e.label;
    je["epsilon_spent"] =
        std::isinf(e.epsilon_spent) ? nlohmann::json("inf") : nlohmann::json(e.epsilon_spent);
    je["composition"] = e.parallel_group.has_value()
                            ? nlohmann::json{{"parallel_group", *e.parallel_group}}
                            : nlohmann::json("sequential");
    entries.push_back(std::move(je));
  }
  const double t = total_locked();
  nlohmann::json j;
  j["entries"] = std::move(entries);
  j["total_spent"] = std::isinf(t) ? nlohmann::json("inf") : nlohmann::json(t);
  j["capacity"] =
      std::isinf(capacity_) ? nlohmann::json("inf") : nlohmann::json(capacity_);
  return j;
}

}  // namespace stepsdp
