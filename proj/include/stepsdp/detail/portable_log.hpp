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

#ifndef STEPSDP_DETAIL_PORTABLE_LOG_HPP_
#define STEPSDP_DETAIL_PORTABLE_LOG_HPP_

#include <bit>
#include <cmath>
#include <cstdint>

namespace stepsdp::detail {

// Natural log for normalized positive doubles, fdlibm-style argument
// reduction with an FMA Horner tail. This is the reference operation
// sequence: the AVX2 kernel mirrors it instruction for instruction, so the
// two produce bit-identical results (every step is either exact integer
// bit manipulation or a correctly rounded IEEE op). Accuracy is a couple
// of ulp against the libm log; callers only feed w in [2^-52, 1].
//
// Branch-free on purpose: a per-lane branch in the vector variant would
// have to be a blend anyway.

inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kLg1 = 6.666666666666735130e-01;
inline constexpr double kLg2 = 3.999999999940941908e-01;
inline constexpr double kLg3 = 2.857142874366239149e-01;
inline constexpr double kLg4 = 2.222219843214978396e-01;
inline constexpr double kLg5 = 1.818357216161805012e-01;
inline constexpr double kLg6 = 1.531383769920937332e-01;
inline constexpr double kLg7 = 1.479819860511658591e-01;

inline double portable_log(double x) {
  const uint64_t bits = std::bit_cast<uint64_t>(x);
  // Normalize the mantissa into [sqrt(2)/2, sqrt(2)); 0x95F64 is the
  // fdlibm rounding constant that picks the split point.
  const uint64_t mant_hi20 = (bits >> 32) & 0xFFFFFu;
  const uint64_t sel = (mant_hi20 + 0x95F64u) & 0x100000u;
  const int64_t k =
      int64_t((bits >> 52) & 0x7FFu) - 1023 + int64_t(sel >> 20);
  const uint64_t mbits =
      (bits & 0x000FFFFFFFFFFFFFull) | ((sel ^ 0x3FF00000u) << 32);
  const double m = std::bit_cast<double>(mbits);

  const double f = m - 1.0;
  const double s = f / (2.0 + f);
  const double z = s * s;
  const double w = z * z;
  const double t1 =
      w * std::fma(w, std::fma(w, kLg6, kLg4), kLg2);
  const double t2 =
      z * std::fma(w, std::fma(w, std::fma(w, kLg7, kLg5), kLg3), kLg1);
  const double r = t1 + t2;
  const double hfsq = 0.5 * f * f;
  const double dk = double(k);
  return std::fma(dk, kLn2Hi,
                  -((hfsq - std::fma(s, hfsq + r, dk * kLn2Lo)) - f));
}

// Inverse-CDF step shared by the scalar and AVX2 Laplace kernels. Raw bits
// become the uniform u = s*(1-w)/2 in (-1/2, 1/2), with w in (0, 1] from
// the low 52 bits and the sign s from bit 63; the sample is then
// -scale*sign(u)*ln(1-2|u|) = -s*scale*ln(w).
inline double laplace_from_bits_one(uint64_t bits, double scale) {
  const double w =
      (double(bits & 0x000FFFFFFFFFFFFFull) + 1.0) * 0x1p-52;
  const double mag = scale * portable_log(w);  // <= 0
  return (bits >> 63) != 0 ? -mag : mag;
}

}  // namespace stepsdp::detail

#endif  // STEPSDP_DETAIL_PORTABLE_LOG_HPP_
