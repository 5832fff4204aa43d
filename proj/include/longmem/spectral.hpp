#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "longmem/simulate.hpp"

namespace longmem {

// Fourier frequencies x_j = 2*pi*j/n and periodogram ordinates for
// j = 1..floor(n/2).
struct Periodogram {
  std::size_t n = 0;
  std::vector<double> freq;
  std::vector<double> ordinate;
};

// Normalized DFT ordinates d_j = (2*pi*n)^{-1/2} sum_{t=1..n} X_t e^{-i t x_j}
// for j = 1..floor(n/2). The sum runs from t = 1, not t = 0; the FFT result
// is rotated by e^{-i x_j} to match.
std::vector<std::complex<double>> dft(std::span<const double> path);

Periodogram periodogram(std::span<const double> path);
Periodogram periodogram(const SamplePath& path);

// D_n(x) = (2*pi*n)^{-1/2} sum_{t=1..n} e^{-i t x}, closed geometric form
// with the x = 0 (mod 2*pi) limit handled; F_n = |D_n|^2.
std::complex<double> dirichlet(std::size_t n, double x);
double fejer(std::size_t n, double x);

struct DftCovariancePair {
  std::size_t k = 0, j = 0;
  std::complex<double> cov_dd;     // E[d_k d_j]
  std::complex<double> cov_dconj;  // E[d_k conj(d_j)]
};

// Exact finite-n DFT covariances as Toeplitz quadratic forms; O(n^2) per
// call, intended for n <= 4096.
DftCovariancePair exact_dft_covariance(std::span<const double> gamma,
                                       std::size_t n, std::size_t k,
                                       std::size_t j);

// All pairs (k <= j) drawn from `indices`, sharing the O(n^2) Toeplitz
// multiplications across the table.
std::vector<DftCovariancePair> dft_covariance_table(
    std::span<const double> gamma, std::size_t n,
    std::span<const std::size_t> indices);

}  // namespace longmem
