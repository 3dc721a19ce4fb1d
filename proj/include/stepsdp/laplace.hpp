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

#ifndef STEPSDP_LAPLACE_HPP_
#define STEPSDP_LAPLACE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stepsdp/budget.hpp"
#include "stepsdp/rng.hpp"

namespace stepsdp {

// One draw from Lap(0, scale). Throws ConfigError for scale <= 0.
double laplace_sample(double scale, NoiseSource& src);

// Inverse CDF of Lap(0, scale) at u in (-1/2, 1/2):
// -scale * sign(u) * ln(1 - 2|u|). Exposed for tests and one-off draws.
double laplace_inv_cdf(double u, double scale);

// counts + i.i.d. Lap(0, delta1/epsilon) noise, charging the spend to the
// ledger before any output is produced. No post-processing: results may be
// negative or fractional. With an unlimited budget the counts pass through
// exactly.
std::vector<double> sanitize_counts(
    std::span<const double> counts, Sensitivity sensitivity,
    PrivacyBudget budget, NoiseSource& src, BudgetLedger& ledger,
    const std::string& label,
    std::optional<std::string> parallel_group = std::nullopt);

}  // namespace stepsdp

#endif  // STEPSDP_LAPLACE_HPP_
