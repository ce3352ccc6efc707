#include "kgbh/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

namespace kgbh {

namespace {

fftw_plan plan_for(int n, int sign) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, sign);
  auto it = plans.find(key);
  if (it != plans.end()) return it->second;
  std::vector<std::complex<double>> tmp(n);
  auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
  fftw_plan plan = fftw_plan_dft_1d(n, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(key, plan);
  return plan;
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& a) {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(plan_for(static_cast<int>(a.size()), FFTW_FORWARD), p, p);
}

void fft_backward(std::vector<std::complex<double>>& a) {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(plan_for(static_cast<int>(a.size()), FFTW_BACKWARD), p, p);
  const double s = 1.0 / static_cast<double>(a.size());
  for (auto& v : a) v *= s;
}

std::vector<double> fft_wavenumbers(int n, double length) {
  std::vector<double> k(n);
  for (int i = 0; i < n; ++i) {
    const int m = i <= n / 2 ? i : i - n;
    k[i] = 2.0 * std::numbers::pi * m / length;
  }
  return k;
}

}  // namespace kgbh
