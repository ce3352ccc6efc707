#pragma once

#include <complex>

namespace kgbh {

using cplx = std::complex<double>;

// Gauss hypergeometric function 2F1(a, b; c; z) for real z in [0, 1).
cplx hyp2f1(cplx a, cplx b, cplx c, double z);

// The two evaluation paths, exposed for cross-checks. Both accept any z in [0, 1).
cplx hyp2f1_series(cplx a, cplx b, cplx c, double z);
cplx hyp2f1_connection(cplx a, cplx b, cplx c, double z);

inline constexpr double kHypZSwitch = 0.5;
inline constexpr double kHypDegenerateTol = 1e-13;
inline constexpr int kHypMaxTerms = 10000;

// Log-gamma with the branch cut on the negative real axis (analytic continuation
// of the real log-gamma; lgamma(w+1) = lgamma(w) + log(w)).
cplx log_gamma(cplx w);
// 1 / Gamma(w), zero at the poles.
cplx rgamma(cplx w);
cplx digamma(cplx w);

bool is_nonpositive_integer(cplx w, double tol = 0.0);

}  // namespace kgbh
