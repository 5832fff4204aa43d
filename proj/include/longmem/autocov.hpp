#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace longmem {

// Autocovariances gamma(0..K) of a stationary model, tagged with how they
// were obtained.
struct AutocovarianceSequence {
  enum class Source { closed_form, quadrature, direct };

  std::vector<double> values;
  Source source = Source::direct;

  std::size_t max_lag() const { return values.empty() ? 0 : values.size() - 1; }

  double at(std::size_t k) const {
    if (k >= values.size()) {
      throw std::out_of_range("AutocovarianceSequence: lag out of range");
    }
    return values[k];
  }
};

}  // namespace longmem
