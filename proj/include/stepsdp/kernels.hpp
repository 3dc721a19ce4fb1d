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

#ifndef STEPSDP_KERNELS_HPP_
#define STEPSDP_KERNELS_HPP_

#include <cstddef>
#include <cstdint>

namespace stepsdp::kernels {

// Batch primitives for the per-cell arithmetic of the synthesis pipeline.
// Two implementations ship: a scalar reference and an AVX2 variant chosen
// at runtime. Both produce bit-identical output for every operation:
// the RNG is pure integer math, the Laplace transform evaluates one shared
// floating-point operation sequence (explicit FMA, no contraction), and
// reductions accumulate into four stripes by index mod 4, combined as
// (s0 + s2) + (s1 + s3). Kernel selection therefore never changes results.

struct Kernels {
  const char* name;

  // Philox4x32-10 counter RNG. Fills out[0..n) with the 64-bit draws at
  // indices draw0, draw0+1, ... of the stream identified by (key, stream).
  // Draw 2i   = word0 | word1<<32 of block i,
  // draw 2i+1 = word2 | word3<<32, where block i has counter
  // (lo32(i), hi32(i), lo32(stream), hi32(stream)) and key (lo32, hi32).
  void (*philox_fill)(uint64_t key, uint64_t stream, uint64_t draw0,
                      uint64_t* out, std::size_t n);

  // Maps raw draws to Laplace(0, scale) noise by inverse CDF:
  // w = ((bits & 2^52-1) + 1) * 2^-52 in (0, 1], magnitude -scale*ln(w),
  // sign from bit 63.
  void (*laplace_from_bits)(const uint64_t* bits, double scale, double* out,
                            std::size_t n);

  // out[i] = a[i] + b[i]
  void (*add)(const double* a, const double* b, double* out, std::size_t n);

  // x[i] = max(x[i], 0)
  void (*clamp_nonneg)(double* x, std::size_t n);

  // x[i] += c
  void (*add_scalar)(double* x, double c, std::size_t n);

  // Striped sums; see note above for the accumulation order contract.
  double (*sum)(const double* x, std::size_t n);
  double (*l1_distance)(const double* a, const double* b, std::size_t n);
};

const Kernels& scalar();

// AVX2 variant, or nullptr when unavailable (non-x86 build or CPU without
// AVX2+FMA).
const Kernels* avx2();

// Runtime-selected implementation. Honors STEPS_DP_KERNELS=scalar|avx2
// (the latter fails hard if the CPU lacks support).
const Kernels& active();

}  // namespace stepsdp::kernels

#endif  // STEPSDP_KERNELS_HPP_
