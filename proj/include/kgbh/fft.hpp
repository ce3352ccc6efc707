#pragma once

#include <complex>
#include <vector>

namespace kgbh {

// Unnormalized complex DFT (FFTW). Plans are cached per size; safe to call concurrently.
void fft_forward(std::vector<std::complex<double>>& a);
// Inverse DFT including the 1/n normalization.
void fft_backward(std::vector<std::complex<double>>& a);

// Angular wavenumbers 2 pi k / L in FFT order.
std::vector<double> fft_wavenumbers(int n, double length);

}  // namespace kgbh
