#include "longmem/simulate.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "longmem/errors.hpp"
#include "longmem/fft.hpp"
#include "longmem/rng.hpp"

namespace longmem {

std::size_t padded_fft_size(std::size_t n) {
  const std::size_t target = (n >= 2) ? 2 * (n - 1) : 2;
  std::size_t m = 2;
  while (m < target) m *= 2;
  return m;
}

CirculantEmbedding CirculantEmbedding::build(
    const AutocovarianceSequence& gamma, std::size_t n, std::size_t fft_size) {
  if (n < 2) throw std::invalid_argument("CirculantEmbedding: need n >= 2");
  const std::size_t m = (fft_size == 0) ? 2 * (n - 1) : fft_size;
  if (m % 2 != 0 || m < 2 * (n - 1)) {
    throw std::invalid_argument(
        "CirculantEmbedding: fft_size must be even and >= 2(n-1)");
  }
  if (gamma.max_lag() < m / 2) {
    throw std::invalid_argument(
        "CirculantEmbedding: gamma must cover lags 0..fft_size/2");
  }

  std::vector<double> row(m);
  for (std::size_t k = 0; k <= m / 2; ++k) row[k] = gamma.values[k];
  for (std::size_t k = m / 2 + 1; k < m; ++k) row[k] = gamma.values[m - k];

  auto spectrum = fft::forward_real(row);

  CirculantEmbedding embedding;
  embedding.n_ = n;
  embedding.eigenvalues_.resize(m);
  double negative = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double lambda = spectrum[j].real();
    total += std::abs(lambda);
    if (lambda < 0.0) {
      negative += -lambda;
      embedding.eigenvalues_[j] = 0.0;
    } else {
      embedding.eigenvalues_[j] = lambda;
    }
  }
  embedding.clip_mass_ = (total > 0.0) ? negative / total : 0.0;
  if (embedding.clip_mass_ > kClipTolerance) {
    std::ostringstream msg;
    msg << "circulant embedding not positive semidefinite: relative negative "
           "eigenvalue mass "
        << embedding.clip_mass_ << " exceeds " << kClipTolerance;
    throw EmbeddingError(msg.str(), embedding.clip_mass_);
  }
  return embedding;
}

std::vector<SamplePath> sample_paths(const CirculantEmbedding& embedding,
                                     std::uint64_t seed, std::size_t reps,
                                     std::string_view model_id) {
  const std::size_t m = embedding.size();
  const std::size_t n = embedding.path_length();
  std::vector<double> scale(m);
  for (std::size_t j = 0; j < m; ++j) {
    scale[j] = std::sqrt(embedding.eigenvalues()[j]);
  }

  std::vector<SamplePath> paths;
  paths.reserve(reps);
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<std::complex<double>> weights(m);
  for (std::size_t pair = 0; 2 * pair < reps; ++pair) {
    RandomStream stream(seed, pair);
    for (std::size_t j = 0; j < m; ++j) {
      const double a = stream.next_gaussian();
      const double b = stream.next_gaussian();
      weights[j] = std::complex<double>(scale[j] * a, scale[j] * b);
    }
    auto z = fft::forward(weights);
    for (int half = 0; half < 2; ++half) {
      if (paths.size() == reps) break;
      SamplePath path;
      path.seed = seed;
      path.model_id = std::string(model_id);
      path.values.resize(n);
      for (std::size_t t = 0; t < n; ++t) {
        path.values[t] = norm * (half == 0 ? z[t].real() : z[t].imag());
      }
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

}  // namespace longmem
