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

#include "stepsdp/laplace.hpp"

#include <cmath>
#include <vector>

#include "stepsdp/detail/portable_log.hpp"
#include "stepsdp/errors.hpp"
#include "stepsdp/kernels.hpp"

namespace stepsdp {

double NoiseSource::laplace(double scale) {
  if (!(scale > 0.0)) {
    throw ConfigError("laplace scale must be positive");
  }
  return detail::laplace_from_bits_one(next_bits(), scale);
}

void NoiseSource::fill_bits(std::span<uint64_t> out) {
  kernels::active().philox_fill(seed_, stream_, next_, out.data(), out.size());
  next_ += out.size();
}

void NoiseSource::fill_laplace(double scale, std::span<double> out) {
  if (!(scale > 0.0)) {
    throw ConfigError("laplace scale must be positive");
  }
  const kernels::Kernels& k = kernels::active();
  constexpr std::size_t kChunk = 8192;
  uint64_t bits[kChunk];
  std::size_t done = 0;
  while (done < out.size()) {
    const std::size_t take = std::min(kChunk, out.size() - done);
    k.philox_fill(seed_, stream_, next_, bits, take);
    k.laplace_from_bits(bits, scale, out.data() + done, take);
    next_ += take;
    done += take;
  }
}

double laplace_sample(double scale, NoiseSource& src) {
  return src.laplace(scale);
}

double laplace_inv_cdf(double u, double scale) {
  if (!(scale > 0.0)) {
    throw ConfigError("laplace scale must be positive");
  }
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return -scale * sign * std::log1p(-2.0 * std::fabs(u));
}

std::vector<double> sanitize_counts(std::span<const double> counts,
                                    Sensitivity sensitivity,
                                    PrivacyBudget budget, NoiseSource& src,
                                    BudgetLedger& ledger,
                                    const std::string& label,
                                    std::optional<std::string> parallel_group) {
  if (!sensitivity.valid()) {
    throw ConfigError("sensitivity must be positive and finite");
  }
  if (!budget.valid()) {
    throw ConfigError("epsilon must be positive");
  }
  // Charge before sampling: an over-budget release must abort with no
  // output at all.
  ledger.charge(label, budget.epsilon, std::move(parallel_group));

  std::vector<double> out(counts.size());
  if (budget.unlimited()) {
    std::copy(counts.begin(), counts.end(), out.begin());
    return out;
  }
  const double scale = sensitivity.delta1 / budget.epsilon;
  std::vector<double> noise(counts.size());
  src.fill_laplace(scale, noise);
  kernels::active().add(counts.data(), noise.data(), out.data(), counts.size());
  return out;
}

}  // namespace stepsdp
