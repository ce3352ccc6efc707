#include "kgbh/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "kgbh/errors.hpp"

namespace kgbh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

// zeta(2..9); higher orders summed directly
constexpr std::array<double, 8> kZetaLow = {
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381915,
    1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
    1.0040773561979443394, 1.0020083928260822144};

double zeta_int(int k) {
  if (k <= 9) return kZetaLow[k - 2];
  double s = 1.0;
  for (int n = 2; n < 40; ++n) s += std::pow(static_cast<double>(n), -k);
  return s;
}

// B_{2j} / (2j (2j-1)), j = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,        -1.0 / 360.0,      1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0,        -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

cplx stirling(cplx z) {
  const cplx z2 = 1.0 / (z * z);
  cplx zp = 1.0 / z;
  cplx s = 0.0;
  for (double c : kStirling) {
    s += c * zp;
    zp *= z2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + s;
}

// log Gamma(1 + x) for |x| <= 0.3
cplx lgamma1p_series(cplx x) {
  cplx s = -kEulerGamma * x;
  cplx xp = -x;  // (-x)^k
  for (int k = 2; k < 60; ++k) {
    xp *= -x;
    const cplx term = zeta_int(k) / k * xp;
    s += term;
    if (std::abs(term) < 1e-18 * std::abs(s)) break;
  }
  return s;
}

bool near_int(cplx w, double tol, long* n) {
  const double r = std::round(w.real());
  if (std::abs(w.imag()) <= tol && std::abs(w.real() - r) <= tol) {
    if (n) *n = static_cast<long>(r);
    return true;
  }
  return false;
}

// Gamma(num...) / Gamma(den...), zero if any denominator argument is a pole.
template <std::size_t N, std::size_t D>
cplx gamma_ratio(const std::array<cplx, N>& num, const std::array<cplx, D>& den) {
  for (const cplx& d : den)
    if (is_nonpositive_integer(d)) return 0.0;
  cplx s = 0.0;
  for (const cplx& n : num) s += log_gamma(n);
  for (const cplx& d : den) s -= log_gamma(d);
  return std::exp(s);
}

// 2F1 series with term recurrence, any |z| < 1.
cplx series(cplx a, cplx b, cplx c, double z) {
  cplx sum = 1.0;
  cplx term = 1.0;
  int small = 0;
  for (int n = 0; n < kHypMaxTerms; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small >= 2) return sum;
    } else {
      small = 0;
    }
  }
  throw Error(Errc::NoConverge, "hypergeometric series did not converge");
}

cplx terminating(cplx a, cplx b, cplx c, double z, long nmax) {
  cplx sum = 1.0;
  cplx term = 1.0;
  for (long n = 0; n < nmax; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    sum += term;
  }
  return sum;
}

// Logarithmic connection formulas for c - a - b = m integer.
cplx degenerate(cplx a, cplx b, cplx c, double z, long m) {
  const double w = 1.0 - z;
  const double L = std::log(w);
  if (m == 0) {
    const cplx pre = gamma_ratio<1, 2>({c}, {a, b});
    cplx psi_n1 = -kEulerGamma;
    cplx psi_a = digamma(a), psi_b = digamma(b);
    cplx term = 1.0, sum = 0.0;
    int small = 0;
    for (int n = 0; n < kHypMaxTerms; ++n) {
      const cplx t = term * (2.0 * psi_n1 - psi_a - psi_b - L);
      sum += t;
      if (std::abs(t) <= 1e-17 * std::abs(sum) && n > 2) {
        if (++small >= 2) return pre * sum;
      } else {
        small = 0;
      }
      term *= (a + double(n)) * (b + double(n)) / (double(n + 1) * double(n + 1)) * w;
      psi_n1 += 1.0 / double(n + 1);
      psi_a += 1.0 / (a + double(n));
      psi_b += 1.0 / (b + double(n));
    }
    throw Error(Errc::NoConverge, "logarithmic series did not converge");
  }
  if (m > 0) {
    const double md = double(m);
    cplx finite = 0.0;
    {
      cplx term = 1.0;
      for (long n = 0; n < m; ++n) {
        finite += term;
        term *= (a + double(n)) * (b + double(n)) / (double(n + 1) * (1.0 - md + double(n))) * w;
      }
    }
    const cplx pre1 = std::tgamma(md) * gamma_ratio<1, 2>({c}, {a + md, b + md});
    const cplx pre2 = gamma_ratio<1, 2>({c}, {a, b}) * ((m % 2) ? -1.0 : 1.0) * std::pow(w, md);
    cplx psi_n1 = -kEulerGamma;
    cplx psi_nm1 = -kEulerGamma;
    for (long k = 1; k <= m; ++k) psi_nm1 += 1.0 / double(k);
    cplx psi_a = digamma(a + md), psi_b = digamma(b + md);
    cplx term = 1.0 / std::tgamma(md + 1.0), sum = 0.0;
    int small = 0;
    for (int n = 0; n < kHypMaxTerms; ++n) {
      const cplx t = term * (L - psi_n1 - psi_nm1 + psi_a + psi_b);
      sum += t;
      if (std::abs(t) <= 1e-17 * std::abs(sum) && n > 2) {
        if (++small >= 2) return pre1 * finite - pre2 * sum;
      } else {
        small = 0;
      }
      term *= (a + md + double(n)) * (b + md + double(n)) / (double(n + 1) * (double(n) + md + 1.0)) * w;
      psi_n1 += 1.0 / double(n + 1);
      psi_nm1 += 1.0 / (double(n) + md + 1.0);
      psi_a += 1.0 / (a + md + double(n));
      psi_b += 1.0 / (b + md + double(n));
    }
    throw Error(Errc::NoConverge, "logarithmic series did not converge");
  }
  const long mm = -m;
  const double md = double(mm);
  cplx finite = 0.0;
  {
    cplx term = 1.0;
    for (long n = 0; n < mm; ++n) {
      finite += term;
      term *= (a - md + double(n)) * (b - md + double(n)) / (double(n + 1) * (1.0 - md + double(n))) * w;
    }
  }
  const cplx pre1 = std::tgamma(md) * gamma_ratio<1, 2>({c}, {a, b}) * std::pow(w, -md);
  const cplx pre2 = gamma_ratio<1, 2>({c}, {a - md, b - md}) * ((mm % 2) ? -1.0 : 1.0);
  cplx psi_n1 = -kEulerGamma;
  cplx psi_nm1 = -kEulerGamma;
  for (long k = 1; k <= mm; ++k) psi_nm1 += 1.0 / double(k);
  cplx psi_a = digamma(a), psi_b = digamma(b);
  cplx term = 1.0 / std::tgamma(md + 1.0), sum = 0.0;
  int small = 0;
  for (int n = 0; n < kHypMaxTerms; ++n) {
    const cplx t = term * (L - psi_n1 - psi_nm1 + psi_a + psi_b);
    sum += t;
    if (std::abs(t) <= 1e-17 * std::abs(sum) && n > 2) {
      if (++small >= 2) return pre1 * finite - pre2 * sum;
    } else {
      small = 0;
    }
    term *= (a + double(n)) * (b + double(n)) / (double(n + 1) * (double(n) + md + 1.0)) * w;
    psi_n1 += 1.0 / double(n + 1);
    psi_nm1 += 1.0 / (double(n) + md + 1.0);
    psi_a += 1.0 / (a + double(n));
    psi_b += 1.0 / (b + double(n));
  }
  throw Error(Errc::NoConverge, "logarithmic series did not converge");
}

void check_args(cplx c, double z) {
  if (is_nonpositive_integer(c)) throw Error(Errc::PoleAtC, "c is a non-positive integer");
  if (!(z >= 0.0 && z < 1.0)) throw Error(Errc::OutOfDomain, "z outside [0, 1)");
}

// Orders (a, b) so that swapped arguments take the identical path.
void canonical(cplx& a, cplx& b) {
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) std::swap(a, b);
}

bool polynomial_degree(cplx a, cplx b, long* n) {
  long na = 0, nb = 0;
  const bool ia = is_nonpositive_integer(a) && near_int(a, 0.0, &na);
  const bool ib = is_nonpositive_integer(b) && near_int(b, 0.0, &nb);
  if (!ia && !ib) return false;
  if (ia && ib) *n = std::min(-na, -nb);
  else *n = ia ? -na : -nb;
  return true;
}

}  // namespace

bool is_nonpositive_integer(cplx w, double tol) {
  long n = 0;
  return near_int(w, tol, &n) && n <= 0;
}

cplx log_gamma(cplx w) {
  if (is_nonpositive_integer(w)) throw Error(Errc::PoleAtNonPositiveInteger, "log_gamma pole");
  if (w.imag() == 0.0 && w.real() > 0.0) return std::lgamma(w.real());
  if (std::abs(w - 1.0) <= 0.3) return lgamma1p_series(w - 1.0);
  if (std::abs(w - 2.0) <= 0.3) return lgamma1p_series(w - 2.0) + std::log(w - 1.0);
  cplx shift = 0.0;
  cplx z = w;
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx rgamma(cplx w) {
  if (is_nonpositive_integer(w)) return 0.0;
  return std::exp(-log_gamma(w));
}

cplx digamma(cplx w) {
  if (is_nonpositive_integer(w)) throw Error(Errc::PoleAtNonPositiveInteger, "digamma pole");
  cplx acc = 0.0;
  cplx z = w;
  while (std::abs(z) < 15.0 || z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const cplx z2 = 1.0 / (z * z);
  // psi(z) ~ ln z - 1/(2z) - sum B_{2k} / (2k z^{2k})
  static constexpr std::array<double, 8> c = {1.0 / 12.0,   -1.0 / 120.0, 1.0 / 252.0,
                                              -1.0 / 240.0, 1.0 / 132.0,  -691.0 / 32760.0,
                                              1.0 / 12.0,   -3617.0 / 8160.0};
  cplx s = 0.0, zp = z2;
  for (double ck : c) {
    s += ck * zp;
    zp *= z2;
  }
  return acc + std::log(z) - 0.5 / z - s;
}

cplx hyp2f1_series(cplx a, cplx b, cplx c, double z) {
  check_args(c, z);
  canonical(a, b);
  long n = 0;
  if (polynomial_degree(a, b, &n)) return terminating(a, b, c, z, n);
  return series(a, b, c, z);
}

cplx hyp2f1_connection(cplx a, cplx b, cplx c, double z) {
  check_args(c, z);
  canonical(a, b);
  long n = 0;
  if (polynomial_degree(a, b, &n)) return terminating(a, b, c, z, n);
  const cplx d = c - a - b;
  long m = 0;
  if (near_int(d, kHypDegenerateTol, &m)) return degenerate(a, b, a + b + double(m), z, m);
  const double w = 1.0 - z;
  const cplx A1 = gamma_ratio<2, 2>({c, d}, {c - a, c - b});
  const cplx A2 = gamma_ratio<2, 2>({c, -d}, {a, b});
  cplx f1 = 0.0, f2 = 0.0;
  if (A1 != 0.0) f1 = series(a, b, a + b - c + 1.0, w);
  if (A2 != 0.0) f2 = std::pow(w, d) * series(c - a, c - b, d + 1.0, w);
  return A1 * f1 + A2 * f2;
}

cplx hyp2f1(cplx a, cplx b, cplx c, double z) {
  check_args(c, z);
  if (z == 0.0) return 1.0;
  canonical(a, b);
  long n = 0;
  if (polynomial_degree(a, b, &n)) return terminating(a, b, c, z, n);
  if (z <= kHypZSwitch) return series(a, b, c, z);
  return hyp2f1_connection(a, b, c, z);
}

}  // namespace kgbh
