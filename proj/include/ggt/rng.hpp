#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace ggt::rng {

// All randomness in the library flows through SplitMix64 streams. The
// generator is fully specified here (state advances by the golden-gamma
// constant; the output function is the Stafford mix13 finalizer), so runs
// reproduce bit-for-bit across compilers and platforms. Distributions are
// hand-rolled for the same reason: std::normal_distribution is
// implementation-defined.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// FNV-1a over a string, used to derive purpose-tagged substreams.
inline std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : tag) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1]; never zero, safe under log().
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Fixed-point multiply keeps the mapping
  /// platform-independent (no modulo bias concerns at these n).
  std::uint64_t uniform_int(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal via Box-Muller; the spare value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform_open();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derives an independent stream from (master_seed, index, purpose-tag).
/// Streams with distinct tags or indices never share generator state.
inline Stream make_stream(std::uint64_t master_seed, std::uint64_t index,
                          std::string_view purpose) {
  std::uint64_t s = master_seed;
  std::uint64_t a = splitmix64_next(s);
  s ^= index * 0x9e3779b97f4a7c15ull;
  std::uint64_t b = splitmix64_next(s);
  s ^= hash_tag(purpose);
  std::uint64_t c = splitmix64_next(s);
  return Stream(a ^ (b * 0x2545f4914f6cdd1dull) ^ c);
}

}  // namespace ggt::rng
