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

// AVX2+FMA kernel variants. Every kernel mirrors the scalar reference in
// scalar.cpp operation for operation; the equivalence suite asserts
// bitwise identical output. Compiled only on x86-64, with -mavx2 -mfma
// -ffp-contract=off.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "stepsdp/detail/philox.hpp"
#include "stepsdp/detail/portable_log.hpp"
#include "stepsdp/kernels.hpp"

namespace stepsdp::kernels {
namespace {

using detail::kLg1;
using detail::kLg2;
using detail::kLg3;
using detail::kLg4;
using detail::kLg5;
using detail::kLg6;
using detail::kLg7;
using detail::kLn2Hi;
using detail::kLn2Lo;

constexpr uint64_t kMant52 = 0x000FFFFFFFFFFFFFull;

// ---------------------------------------------------------------------------
// Philox4x32-10, four blocks (eight 64-bit draws) per iteration. Components
// of each counter/key word live in the low halves of 64-bit lanes so that
// _mm256_mul_epu32 produces the full 32x32->64 products directly.
// ---------------------------------------------------------------------------

void philox_fill_avx2(uint64_t key, uint64_t stream, uint64_t draw0,
                      uint64_t* out, std::size_t n) {
  std::size_t i = 0;
  uint64_t draw = draw0;
  if (n > 0 && (draw & 1) != 0) {
    out[i++] = detail::philox_draw64(key, stream, draw++);
  }

  const __m256i lo32 = _mm256_set1_epi64x(0xFFFFFFFFll);
  const __m256i m0 = _mm256_set1_epi64x(int64_t(detail::kPhiloxM0));
  const __m256i m1 = _mm256_set1_epi64x(int64_t(detail::kPhiloxM1));
  const __m256i w0 = _mm256_set1_epi64x(int64_t(detail::kPhiloxW0));
  const __m256i w1 = _mm256_set1_epi64x(int64_t(detail::kPhiloxW1));
  const __m256i c2_init = _mm256_set1_epi64x(int64_t(stream & 0xFFFFFFFFu));
  const __m256i c3_init = _mm256_set1_epi64x(int64_t(stream >> 32));
  const __m256i k0_init = _mm256_set1_epi64x(int64_t(key & 0xFFFFFFFFu));
  const __m256i k1_init = _mm256_set1_epi64x(int64_t(key >> 32));

  for (; i + 8 <= n; i += 8) {
    const uint64_t block = draw >> 1;
    const __m256i idx = _mm256_add_epi64(
        _mm256_set1_epi64x(int64_t(block)), _mm256_set_epi64x(3, 2, 1, 0));
    __m256i c0 = _mm256_and_si256(idx, lo32);
    __m256i c1 = _mm256_srli_epi64(idx, 32);
    __m256i c2 = c2_init;
    __m256i c3 = c3_init;
    __m256i k0 = k0_init;
    __m256i k1 = k1_init;
    for (int round = 0; round < 10; ++round) {
      const __m256i p0 = _mm256_mul_epu32(c0, m0);
      const __m256i p1 = _mm256_mul_epu32(c2, m1);
      const __m256i hi0 = _mm256_srli_epi64(p0, 32);
      const __m256i lo0 = _mm256_and_si256(p0, lo32);
      const __m256i hi1 = _mm256_srli_epi64(p1, 32);
      const __m256i lo1 = _mm256_and_si256(p1, lo32);
      c0 = _mm256_xor_si256(hi1, _mm256_xor_si256(c1, k0));
      c1 = lo1;
      c2 = _mm256_xor_si256(hi0, _mm256_xor_si256(c3, k1));
      c3 = lo0;
      k0 = _mm256_and_si256(_mm256_add_epi64(k0, w0), lo32);
      k1 = _mm256_and_si256(_mm256_add_epi64(k1, w1), lo32);
    }
    // Per block b: out[2b] = r0|r1<<32, out[2b+1] = r2|r3<<32.
    const __m256i lo = _mm256_or_si256(c0, _mm256_slli_epi64(c1, 32));
    const __m256i hi = _mm256_or_si256(c2, _mm256_slli_epi64(c3, 32));
    const __m256i ab = _mm256_unpacklo_epi64(lo, hi);  // b0, b2
    const __m256i cd = _mm256_unpackhi_epi64(lo, hi);  // b1, b3
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_permute2x128_si256(ab, cd, 0x20));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i + 4),
                        _mm256_permute2x128_si256(ab, cd, 0x31));
    draw += 8;
  }

  for (; i < n; ++i) {
    out[i] = detail::philox_draw64(key, stream, draw++);
  }
}

// ---------------------------------------------------------------------------
// Laplace inverse CDF; vector twin of detail::laplace_from_bits_one.
// ---------------------------------------------------------------------------

// Exact u64 -> double for values < 2^52 (the classic exponent-bias trick).
inline __m256d u52_to_double(__m256i v) {
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000ll);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic)),
                       _mm256_set1_pd(0x1p52));
}

inline __m256d portable_log_avx2(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_hi20 =
      _mm256_and_si256(_mm256_srli_epi64(bits, 32), _mm256_set1_epi64x(0xFFFFF));
  const __m256i sel = _mm256_and_si256(
      _mm256_add_epi64(mant_hi20, _mm256_set1_epi64x(0x95F64)),
      _mm256_set1_epi64x(0x100000));
  const __m256i k64 = _mm256_add_epi64(
      _mm256_sub_epi64(
          _mm256_and_si256(_mm256_srli_epi64(bits, 52),
                           _mm256_set1_epi64x(0x7FF)),
          _mm256_set1_epi64x(1023)),
      _mm256_srli_epi64(sel, 20));
  const __m256i mbits = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(int64_t(kMant52))),
      _mm256_slli_epi64(
          _mm256_xor_si256(sel, _mm256_set1_epi64x(0x3FF00000)), 32));
  const __m256d m = _mm256_castsi256_pd(mbits);

  // double(k): pack the four low dwords and widen. Values are tiny ints.
  const __m256i packed = _mm256_permutevar8x32_epi32(
      k64, _mm256_set_epi32(0, 0, 0, 0, 6, 4, 2, 0));
  const __m256d dk = _mm256_cvtepi32_pd(_mm256_castsi256_si128(packed));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d f = _mm256_sub_pd(m, one);
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  const __m256d t1 = _mm256_mul_pd(
      w, _mm256_fmadd_pd(
             w, _mm256_fmadd_pd(w, _mm256_set1_pd(kLg6), _mm256_set1_pd(kLg4)),
             _mm256_set1_pd(kLg2)));
  const __m256d t2 = _mm256_mul_pd(
      z, _mm256_fmadd_pd(
             w,
             _mm256_fmadd_pd(
                 w, _mm256_fmadd_pd(w, _mm256_set1_pd(kLg7),
                                    _mm256_set1_pd(kLg5)),
                 _mm256_set1_pd(kLg3)),
             _mm256_set1_pd(kLg1)));
  const __m256d r = _mm256_add_pd(t1, t2);
  const __m256d hfsq =
      _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(0.5), f), f);

  // k*ln2_hi - ((hfsq - (s*(hfsq+r) + k*ln2_lo)) - f)
  const __m256d inner =
      _mm256_fmadd_pd(s, _mm256_add_pd(hfsq, r),
                      _mm256_mul_pd(dk, _mm256_set1_pd(kLn2Lo)));
  const __m256d t = _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f);
  const __m256d neg_t =
      _mm256_xor_pd(t, _mm256_set1_pd(-0.0));
  return _mm256_fmadd_pd(dk, _mm256_set1_pd(kLn2Hi), neg_t);
}

void laplace_from_bits_avx2(const uint64_t* bits, double scale, double* out,
                            std::size_t n) {
  const __m256i mant_mask = _mm256_set1_epi64x(int64_t(kMant52));
  const __m256i sign_mask = _mm256_set1_epi64x(int64_t(0x8000000000000000ull));
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d two52inv = _mm256_set1_pd(0x1p-52);
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i b =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + i));
    const __m256d w = _mm256_mul_pd(
        _mm256_add_pd(u52_to_double(_mm256_and_si256(b, mant_mask)), one),
        two52inv);
    const __m256d mag = _mm256_mul_pd(vscale, portable_log_avx2(w));
    // bit 63 set -> -mag, clear -> mag; i.e. flip mag's sign by bit 63.
    const __m256d flip =
        _mm256_castsi256_pd(_mm256_and_si256(b, sign_mask));
    _mm256_storeu_pd(out + i, _mm256_xor_pd(mag, flip));
  }
  for (; i < n; ++i) {
    out[i] = detail::laplace_from_bits_one(bits[i], scale);
  }
}

// ---------------------------------------------------------------------------
// Elementwise and reduction kernels.
// ---------------------------------------------------------------------------

void add_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) {
    out[i] = a[i] + b[i];
  }
}

void clamp_nonneg_avx2(double* x, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  }
  for (; i < n; ++i) {
    x[i] = x[i] > 0.0 ? x[i] : 0.0;
  }
}

void add_const_avx2(double* x, double c, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_add_pd(_mm256_loadu_pd(x + i), vc));
  }
  for (; i < n; ++i) {
    x[i] += c;
  }
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (; i < n; ++i) {
    lanes[i & 3] += x[i];
  }
  return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

double l1_distance_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d abs_mask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_and_pd(d, abs_mask));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (; i < n; ++i) {
    lanes[i & 3] += std::fabs(a[i] - b[i]);
  }
  return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

}  // namespace

const Kernels* avx2() {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) {
    return nullptr;
  }
  static const Kernels k = {
      "avx2",    philox_fill_avx2, laplace_from_bits_avx2, add_avx2,
      clamp_nonneg_avx2, add_const_avx2, sum_avx2, l1_distance_avx2,
  };
  return &k;
}

}  // namespace stepsdp::kernels

#else  // !x86-64

#include "stepsdp/kernels.hpp"

namespace stepsdp::kernels {
const Kernels* avx2() { return nullptr; }
}  // namespace stepsdp::kernels

#endif
