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

#ifndef STEPSDP_DETAIL_PHILOX_HPP_
#define STEPSDP_DETAIL_PHILOX_HPP_

#include <array>
#include <cstdint>

namespace stepsdp::detail {

// Philox4x32-10 block cipher (Salmon et al., Random123). One block maps a
// 128-bit counter and 64-bit key to four 32-bit outputs.

inline constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr,
                                             uint32_t k0, uint32_t k1) {
  for (int round = 0; round < 10; ++round) {
    const uint64_t p0 = uint64_t(kPhiloxM0) * ctr[0];
    const uint64_t p1 = uint64_t(kPhiloxM1) * ctr[2];
    ctr = {uint32_t(p1 >> 32) ^ ctr[1] ^ k0, uint32_t(p1),
           uint32_t(p0 >> 32) ^ ctr[3] ^ k1, uint32_t(p0)};
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return ctr;
}

// Block i of stream (key, stream) under the engine's counter layout.
inline std::array<uint32_t, 4> philox_block(uint64_t key, uint64_t stream,
                                            uint64_t block) {
  return philox4x32_10({uint32_t(block), uint32_t(block >> 32),
                        uint32_t(stream), uint32_t(stream >> 32)},
                       uint32_t(key), uint32_t(key >> 32));
}

// 64-bit draw at index `draw` (two draws per block).
inline uint64_t philox_draw64(uint64_t key, uint64_t stream, uint64_t draw) {
  const std::array<uint32_t, 4> r = philox_block(key, stream, draw >> 1);
  const int half = int(draw & 1) * 2;
  return uint64_t(r[half]) | (uint64_t(r[half + 1]) << 32);
}

// SplitMix64 finalizer; used to derive child stream ids.
inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace stepsdp::detail

#endif  // STEPSDP_DETAIL_PHILOX_HPP_
