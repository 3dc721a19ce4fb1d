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

#ifndef STEPSDP_RNG_HPP_
#define STEPSDP_RNG_HPP_

#include <cstdint>
#include <span>

#include "stepsdp/detail/philox.hpp"

namespace stepsdp {

// Counter-based noise stream. A draw is a pure function of
// (seed, stream id, draw index), so disjoint streams can be consumed in
// any order or concurrently and still reproduce the serial output.
// Child streams are derived from (stream id, tag); every distinct tree
// node, layer, replicate or purpose gets its own tag chain.
class NoiseSource {
 public:
  NoiseSource(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

  // Independent substream; does not advance this source.
  NoiseSource derive(uint64_t tag) const {
    return NoiseSource(
        seed_, detail::mix64(stream_ ^ (0x9E3779B97F4A7C15ull * (tag + 1))));
  }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }
  uint64_t position() const { return next_; }

  uint64_t next_bits() {
    return detail::philox_draw64(seed_, stream_, next_++);
  }

  // Uniform on [0, 1), 53 random bits.
  double uniform01() { return double(next_bits() >> 11) * 0x1p-53; }

  // One Laplace(0, scale) draw; same bit-to-sample mapping as the bulk
  // kernel path.
  double laplace(double scale);

  // Bulk draws through the dispatched kernels.
  void fill_bits(std::span<uint64_t> out);
  void fill_laplace(double scale, std::span<double> out);

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t next_ = 0;
};

// Stream tags for the fixed purposes of the pipeline; combined with
// replicate/node indices via NoiseSource::derive chains.
namespace stream_tag {
inline constexpr uint64_t kLayerNoise = 1;
inline constexpr uint64_t kEmission = 2;
inline constexpr uint64_t kRandomPartition = 3;
inline constexpr uint64_t kMockData = 4;
}  // namespace stream_tag

}  // namespace stepsdp

#endif  // STEPSDP_RNG_HPP_
