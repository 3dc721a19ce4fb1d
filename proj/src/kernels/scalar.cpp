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

// Scalar reference kernels. The AVX2 variants in avx2.cpp must match these
// bit for bit; keep the operation order here in sync with that file.
// Built with -ffp-contract=off so the compiler cannot fuse multiplies and
// adds that the vector code keeps separate.

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "stepsdp/detail/philox.hpp"
#include "stepsdp/detail/portable_log.hpp"
#include "stepsdp/kernels.hpp"

namespace stepsdp::kernels {
namespace {

void philox_fill_scalar(uint64_t key, uint64_t stream, uint64_t draw0,
                        uint64_t* out, std::size_t n) {
  std::size_t i = 0;
  uint64_t draw = draw0;
  // Unaligned leading draw (second half of a block).
  if (n > 0 && (draw & 1) != 0) {
    out[i++] = detail::philox_draw64(key, stream, draw++);
  }
  for (; i + 1 < n; i += 2) {
    const auto r = detail::philox_block(key, stream, draw >> 1);
    out[i] = uint64_t(r[0]) | (uint64_t(r[1]) << 32);
    out[i + 1] = uint64_t(r[2]) | (uint64_t(r[3]) << 32);
    draw += 2;
  }
  if (i < n) {
    out[i] = detail::philox_draw64(key, stream, draw);
  }
}

void laplace_from_bits_scalar(const uint64_t* bits, double scale, double* out,
                              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = detail::laplace_from_bits_one(bits[i], scale);
  }
}

void add_scalar_kernel(const double* a, const double* b, double* out,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a[i] + b[i];
  }
}

void clamp_nonneg_scalar(double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    // max_pd semantics: returns the second operand when the first is NaN;
    // never produces -0 from +0 input.
    x[i] = x[i] > 0.0 ? x[i] : 0.0;
  }
}

void add_const_scalar(double* x, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] += c;
  }
}

double sum_scalar(const double* x, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    acc[i & 3] += x[i];
  }
  return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double l1_distance_scalar(const double* a, const double* b, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    acc[i & 3] += std::fabs(a[i] - b[i]);
  }
  return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k = {
      "scalar",        philox_fill_scalar, laplace_from_bits_scalar,
      add_scalar_kernel, clamp_nonneg_scalar, add_const_scalar,
      sum_scalar,      l1_distance_scalar,
  };
  return k;
}

}  // namespace stepsdp::kernels
