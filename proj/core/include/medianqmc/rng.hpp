// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You may
// obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEDIANQMC_RNG_HPP
#define MEDIANQMC_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace mqmc {

/// Identifies one random stream. Distinct (replicate, dimension) pairs under
/// the same master seed yield independent streams.
struct SeedSpec {
  std::uint64_t master = 0;
  std::uint64_t replicate = 0;
  std::uint64_t dimension = 0;
};

/// splitmix64. Small, fast, and every stream is a pure function of its seed,
/// so runs are reproducible bit-for-bit within this implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on {0, ..., n-1}, exactly (rejection sampling).
  std::uint32_t below(std::uint32_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return static_cast<std::uint32_t>(v % n);
  }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  Rng scramble(h);
  return scramble.next();
}
}  // namespace detail

/// Derive a stream by hashing the master seed with a path of indices.
inline Rng make_stream(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = detail::mix_seed(0x6d71 /* stream domain tag */, master);
  for (std::uint64_t v : path) h = detail::mix_seed(h, v);
  return Rng(h);
}

inline Rng make_stream(const SeedSpec& s, std::uint64_t row = 0) {
  return make_stream(s.master, {s.replicate, s.dimension, row});
}

}  // namespace mqmc

#endif
