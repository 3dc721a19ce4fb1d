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

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "stepsdp/kernels.hpp"

namespace stepsdp::kernels {

const Kernels& active() {
  static const Kernels& chosen = []() -> const Kernels& {
    const char* force = std::getenv("STEPS_DP_KERNELS");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) {
      return scalar();
    }
    const Kernels* vec = avx2();
    if (force != nullptr && std::strcmp(force, "avx2") == 0) {
      if (vec == nullptr) {
        throw std::runtime_error("STEPS_DP_KERNELS=avx2 but AVX2 unavailable");
      }
      return *vec;
    }
    return vec != nullptr ? *vec : scalar();
  }();
  return chosen;
}

}  // namespace stepsdp::kernels
