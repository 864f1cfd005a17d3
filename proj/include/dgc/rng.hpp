#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dgc {

// 64-bit mixer used for seeding and for deriving decorrelated substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives a substream seed from a master seed and a fixed label, so the
// graph generator and the simulation can share one config seed without
// sharing a stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return splitmix64(seed ^ h);
}

// Seeded stream with hand-rolled uniform draws. The std:: distributions are
// implementation-defined, which would break bit-identical traces across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform over [0, n), rejection sampled to avoid modulo bias.
  int uniform_int(int n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return static_cast<int>(x % bound);
  }

  // Uniform over [0, 1) with 53 bits of precision.
  double uniform_double() { return (gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_double() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace dgc
