#pragma once

#include <cstdint>
#include <span>

namespace longmem {

// Seeded random stream with an explicit stream index: (seed, stream) fully
// determines the output, and distinct stream indices give statistically
// independent sequences. Monte Carlo loops hand one stream per replicate so
// results do not depend on scheduling.
//
// Generator: xoshiro256++ seeded through splitmix64; Gaussians via the
// Box-Muller transform (no rejection, so draw counts are deterministic).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double next_uniform();   // in (0, 1]
  double next_gaussian();  // standard normal
  void fill_gaussian(std::span<double> out);

 private:
  std::uint64_t state_[4];
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace longmem
