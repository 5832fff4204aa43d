#include "longmem/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace longmem::fft {

namespace {

// One cached plan (plus working buffers) per (size, direction). FFTW plan
// creation and execution on shared buffers are serialized; the transforms
// here are small enough that contention is irrelevant.
struct PlanEntry {
  fftw_plan plan = nullptr;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;

  ~PlanEntry() {
    if (plan) fftw_destroy_plan(plan);
    if (in) fftw_free(in);
    if (out) fftw_free(out);
  }
};

std::mutex g_mutex;
std::map<std::pair<std::size_t, int>, PlanEntry> g_plans;

std::vector<std::complex<double>> run(std::span<const std::complex<double>> x,
                                      int sign) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> result(n);
  if (n == 0) return result;
  std::lock_guard<std::mutex> lock(g_mutex);
  PlanEntry& entry = g_plans[{n, sign}];
  if (!entry.plan) {
    entry.in = fftw_alloc_complex(n);
    entry.out = fftw_alloc_complex(n);
    entry.plan = fftw_plan_dft_1d(static_cast<int>(n), entry.in, entry.out,
                                  sign, FFTW_ESTIMATE);
  }
  std::memcpy(entry.in, x.data(), n * sizeof(fftw_complex));
  fftw_execute(entry.plan);
  std::memcpy(result.data(), entry.out, n * sizeof(fftw_complex));
  return result;
}

}  // namespace

std::vector<std::complex<double>> forward(
    std::span<const std::complex<double>> input) {
  return run(input, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(
    std::span<const std::complex<double>> input) {
  return run(input, FFTW_BACKWARD);
}

std::vector<std::complex<double>> forward_real(std::span<const double> input) {
  std::vector<std::complex<double>> tmp(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) tmp[i] = input[i];
  return run(tmp, FFTW_FORWARD);
}

}  // namespace longmem::fft
