#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace kgbh {

using cplx = std::complex<double>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_subdivisions = 2000;
};

struct QuadResult {
  cplx value;
  double error = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (7/15) on [a, b]; throws QuadratureFail when the
// tolerance is not met within the subdivision cap.
QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                        const QuadOptions& opt = {});
QuadResult integrate_gk_real(const std::function<double(double)>& f, double a, double b,
                             const QuadOptions& opt = {});

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

// n-point Gauss-Legendre on [-1, 1] (cached, thread-safe).
const Rule& gauss_legendre(int n);

// Composite Gauss-Legendre with given panel breakpoints.
Rule composite_rule(const std::vector<double>& breaks, int order);

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n);  // a, b > 0, endpoints exact

}  // namespace kgbh
