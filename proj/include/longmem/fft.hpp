#pragma once

#include <complex>
#include <span>
#include <vector>

namespace longmem::fft {

// Unnormalized transforms, sum_{t=0}^{N-1} x_t exp(-+ 2*pi*i*j*t/N). Any
// length is accepted; plans are cached per size behind a mutex, so calls are
// safe from multiple threads.
std::vector<std::complex<double>> forward(
    std::span<const std::complex<double>> input);
std::vector<std::complex<double>> inverse(
    std::span<const std::complex<double>> input);
std::vector<std::complex<double>> forward_real(std::span<const double> input);

}  // namespace longmem::fft
