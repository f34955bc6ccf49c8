// Seeded pseudo-random generation for reproducible experiments.
//
// Generator: xoshiro256++ 1.0 (Blackman & Vigna), state expanded from a
// 64-bit seed with splitmix64. Every stochastic choice in the toolkit
// (ansatz construction, weight init, subsampling, epoch shuffling,
// synthetic data) draws from this generator, so a seed plus the documented
// draw order fully determines the result on any platform.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace qnv {

// One splitmix64 step; advances x and returns the next output.
constexpr std::uint64_t splitmix64_next(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  // xoshiro256++ core step.
  std::uint64_t next_u64() {
    const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); masked rejection, bias-free.
  std::uint64_t next_below(std::uint64_t n) {
    if (n < 2) return 0;
    const std::uint64_t mask = std::bit_ceil(n) - 1;
    std::uint64_t v = next_u64() & mask;
    while (v >= n) v = next_u64() & mask;
    return v;
  }

  // Splits off an independent child generator; consumes one draw.
  Rng split() { return Rng(next_u64()); }

 private:
  std::array<std::uint64_t, 4> state_{};
};

// In-place Fisher-Yates shuffle driven by the repo generator.
template <class T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.next_below(i)]);
  }
}

}  // namespace qnv
