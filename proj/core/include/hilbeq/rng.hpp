#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hilbeq/field.hpp"

namespace hilbeq {

/// SplitMix64 generator ("splitmix64-v1"). All seeded randomness in the
/// library goes through this class so corpora are reproducible bit-for-bit.
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
class SplitMix64 {
 public:
  static constexpr std::string_view kName = "splitmix64-v1";

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  long between(long lo, long hi) noexcept {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Independent child stream, e.g. one per corpus entry.
  SplitMix64 fork() noexcept { return SplitMix64(next()); }

  template <class T>
  void shuffle(std::vector<T>& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

/// Random field element: uniform over F_p, or a uniform integer in
/// [-small_bound, small_bound] over Q.
inline Scalar random_scalar(const Field& field, SplitMix64& rng, long small_bound = 3) {
  if (field.is_rational()) return Scalar(field, rng.between(-small_bound, small_bound));
  return Scalar(field, static_cast<long>(rng.below(field.modulus())));
}

}  // namespace hilbeq
