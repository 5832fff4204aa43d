#include "longmem/rng.hpp"

#include <cmath>
#include <numbers>

namespace longmem {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t mix = seed ^ (stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL);
  for (auto& s : state_) s = splitmix64(mix);
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::next_uniform() {
  // 53-bit mantissa, shifted into (0, 1] so log() below is always finite
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(angle);
  has_cached_ = true;
  return r * std::cos(angle);
}

void RandomStream::fill_gaussian(std::span<double> out) {
  for (double& v : out) v = next_gaussian();
}

}  // namespace longmem
