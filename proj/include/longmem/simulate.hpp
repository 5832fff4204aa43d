#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "longmem/autocov.hpp"

namespace longmem {

struct SamplePath {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::string model_id;

  std::size_t size() const { return values.size(); }
};

// smallest power of two >= 2(n-1)
std::size_t padded_fft_size(std::size_t n);

// Circulant embedding of the n x n Toeplitz covariance: first row
// (g0, ..., g_{M/2}, g_{M/2-1}, ..., g_1) of an M x M circulant whose
// eigenvalues come out of one real FFT. Slightly negative eigenvalues are
// clipped to zero when their relative mass stays below the tolerance;
// otherwise construction throws EmbeddingError. Extra lags needed by a padded
// size come from the supplied gamma, never from zero padding.
class CirculantEmbedding {
 public:
  // fft_size = 0 selects the minimal even embedding M = 2(n-1); any other
  // value must be an even M >= 2(n-1), and gamma must cover lags 0..M/2.
  static CirculantEmbedding build(const AutocovarianceSequence& gamma,
                                  std::size_t n, std::size_t fft_size = 0);

  std::size_t size() const { return eigenvalues_.size(); }
  std::size_t path_length() const { return n_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  // clipped negative mass relative to the total absolute eigenvalue mass
  double clip_mass() const { return clip_mass_; }

  static constexpr double kClipTolerance = 1e-6;

 private:
  CirculantEmbedding() = default;
  std::vector<double> eigenvalues_;
  std::size_t n_ = 0;
  double clip_mass_ = 0.0;
};

// Exact Gaussian sampling: one complex Gaussian vector weighted by
// sqrt(eigenvalues) and one inverse FFT yield two independent real paths
// (real and imaginary parts); both are used. Replicates 2r and 2r+1 share
// stream r of the given seed, so output is reproducible and independent of
// any parallel schedule.
std::vector<SamplePath> sample_paths(const CirculantEmbedding& embedding,
                                     std::uint64_t seed, std::size_t reps,
                                     std::string_view model_id = {});

}  // namespace longmem
