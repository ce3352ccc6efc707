#include "kgbh/kernels.hpp"

#include <cmath>

#include "kgbh/errors.hpp"
#include "kgbh/specfun.hpp"

namespace kgbh {

namespace {

struct Geometry {
  double tau, beta, D, P, Q, zeta;
};

Geometry geometry(double r, double t, double b, double ell) {
  if (!(b >= 1.0 && t >= b)) throw Error(Errc::OutOfDomain, "need 1 <= b <= t");
  Geometry g;
  g.tau = phi(t, ell);
  g.beta = phi(b, ell);
  // phi(t) - phi(b) without cancellation: b^{1-l} (1 - (t/b)^{1-l}) / (l - 1)
  g.D = -std::pow(b, 1.0 - ell) * std::expm1((1.0 - ell) * std::log(t / b)) / (ell - 1.0);
  if (!(r >= 0.0) || r > g.D * (1.0 + 1e-12))
    throw Error(Errc::OutOfDomain, "r outside [0, phi(t) - phi(b)]");
  const double rr = std::min(r, g.D);
  const double S = g.tau + g.beta;
  g.P = (-S - rr) * (-S + rr);
  g.Q = std::max(0.0, (g.D - rr) * (g.D + rr));
  g.zeta = g.Q / g.P;
  if (g.zeta >= 1.0 - 1e-14) throw Error(Errc::SingularEndpoint, "hypergeometric argument at 1");
  return g;
}

// (4 beta^2 / P)^q with the positive real base
cplx scaled_power(double beta, double P, cplx q) {
  return std::exp(q * std::log(4.0 * beta * beta / P));
}

}  // namespace

const char* kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::E: return "E";
    case KernelKind::K0: return "K0";
    case KernelKind::K1: return "K1";
    case KernelKind::K2: return "K2";
  }
  return "?";
}

double kernel_zeta(double r, double tau, double beta) {
  return ((tau - beta) * (tau - beta) - r * r) / ((tau + beta) * (tau + beta) - r * r);
}

cplx kernel_E(double r, double t, double b, const Liouville& L) {
  const Geometry g = geometry(r, t, b, L.ell);
  return std::pow(b, L.ell) * scaled_power(g.beta, g.P, L.q) * hyp2f1(L.q, L.q, 1.0, g.zeta);
}

cplx kernel_K1(double r, double t, const Liouville& L) {
  const Geometry g = geometry(r, t, 1.0, L.ell);
  return scaled_power(g.beta, g.P, L.q) * hyp2f1(L.q, L.q, 1.0, g.zeta);
}

cplx kernel_K0(double r, double t, const Liouville& L) {
  const Geometry g = geometry(r, t, 1.0, L.ell);
  const double tau = g.tau, t1 = g.beta;
  const cplx q = L.q;
  const cplx pre = -2.0 * q * scaled_power(t1, g.P, q);
  const cplx f0 = hyp2f1(q, q, 1.0, g.zeta);
  const cplx f1 = hyp2f1(q + 1.0, q, 1.0, g.zeta);
  const double a = (r * r - tau * (tau - t1)) / (-g.Q);
  const double c = 2.0 * tau * t1 * (tau * tau - t1 * t1 - r * r) / (g.Q * g.P);
  return pre * (a * f0 - c * f1);
}

cplx kernel_K2_display(double r, double t, const Liouville& L) {
  const Geometry g = geometry(r, t, 1.0, L.ell);
  const double tau = g.tau, t1 = g.beta;
  const cplx q = L.q;
  const cplx pre = -2.0 * q * scaled_power(t1, g.P, q);
  const cplx f0 = hyp2f1(q, q, 1.0, g.zeta);
  const cplx f1 = hyp2f1(q + 1.0, q, 1.0, g.zeta);
  const double a = (t1 * t1 - tau * t1) / (-g.Q);
  const double c = 2.0 * tau * t1 * (tau * tau - t1 * t1 - r * r) / (g.Q * g.P);
  return pre * (a * f0 - c * f1);
}

cplx kernel_K2(double r, double t, const Liouville& L) {
  const Geometry g = geometry(r, t, 1.0, L.ell);
  const double tau = g.tau, t1 = g.beta;
  const cplx q = L.q;
  const cplx pre = -2.0 * q * scaled_power(t1, g.P, q);
  const cplx f0 = hyp2f1(q, q, 1.0, g.zeta);
  const cplx f2 = hyp2f1(q + 1.0, q + 1.0, 2.0, g.zeta);
  const cplx B = -t1 * (tau + t1) * f0 / g.P -
                 2.0 * q * tau * t1 * (tau * tau - t1 * t1 - r * r) * f2 / (g.P * g.P);
  return pre * B;
}

namespace {

template <class F>
double abs_integral_log(double t, double b, double ell, F&& kernel, const KernelQuadOptions& o,
                        double s_lo_override = NAN, double s_hi_override = NAN) {
  const double tau = std::abs(phi(t, ell)), beta = std::abs(phi(b, ell));
  if (t == b) return 0.0;
  const double top = tau + beta;
  const double D = -std::pow(b, 1.0 - ell) * std::expm1((1.0 - ell) * std::log(t / b)) / (ell - 1.0);
  double s_lo = std::log(2.0 * tau), s_hi = std::log(top);
  if (!std::isnan(s_lo_override)) s_lo = s_lo_override;
  if (!std::isnan(s_hi_override)) s_hi = s_hi_override;
  if (s_hi <= s_lo) return 0.0;
  QuadOptions qo{o.abs_tol, o.rel_tol, o.max_subdivisions};
  auto f = [&](double s) {
    const double w = std::exp(s);
    const double r = std::clamp(top - w, 0.0, D);
    return std::abs(kernel(r)) * w;
  };
  return integrate_gk_real(f, s_lo, s_hi, qo).value.real();
}

}  // namespace

double integral_abs_E(double t, double b, const Liouville& L, const KernelQuadOptions& o) {
  return abs_integral_log(t, b, L.ell, [&](double r) { return kernel_E(r, t, b, L); }, o);
}

double integral_abs_K1(double t, const Liouville& L, const KernelQuadOptions& o) {
  return abs_integral_log(t, 1.0, L.ell, [&](double r) { return kernel_K1(r, t, L); }, o);
}

double integral_abs_K2(double t, const Liouville& L, const KernelQuadOptions& o) {
  return abs_integral_log(t, 1.0, L.ell, [&](double r) { return kernel_K2(r, t, L); }, o);
}

ZoneTag zone_of(double z, double y, double eps) {
  ZoneTag tag;
  tag.eps = eps;
  tag.zeta = ((z - 1.0) * (z - 1.0) - y * y) / ((z + 1.0) * (z + 1.0) - y * y);
  tag.zone = tag.zeta <= eps ? Zone::Z1 : Zone::Z2;
  return tag;
}

ZoneIntegrals zone_integrals(KernelKind kind, double t, const Liouville& L, double eps,
                             const KernelQuadOptions& o) {
  if (kind != KernelKind::K1 && kind != KernelKind::K2)
    throw Error(Errc::OutOfDomain, "zone split defined for K1 and K2");
  ZoneIntegrals zi;
  if (t == 1.0) return zi;
  const double tau = std::abs(phi(t, L.ell)), t1 = std::abs(phi(1.0, L.ell));
  const double z = t1 / tau;
  const double y2 = ((z - 1.0) * (z - 1.0) - eps * (z + 1.0) * (z + 1.0)) / (1.0 - eps);
  const double ys = y2 > 0.0 ? std::sqrt(y2) : 0.0;
  zi.y_split = ys;
  auto ker = [&](double r) { return kind == KernelKind::K1 ? kernel_K1(r, t, L) : kernel_K2(r, t, L); };
  // r = tau y, s = ln(tau (z + 1 - y))
  const double s_split = std::log(tau * (z + 1.0 - ys));
  zi.zone1 = abs_integral_log(t, 1.0, L.ell, ker, o, NAN, s_split);
  zi.zone2 = abs_integral_log(t, 1.0, L.ell, ker, o, s_split, NAN);
  return zi;
}

double kernel_envelope(KernelKind kind, double t, double b, const DerivedParams& d) {
  const double l = d.ell;
  if (d.regime == MassRegime::LargeMass) {
    const double logpow = d.M_big.value_or(0.0) > 0.0 ? 0.0 : 1.0;
    switch (kind) {
      case KernelKind::E:
        return std::abs(std::pow(std::abs(phi(b, l)), 1.0 / (1.0 - l))) *
               std::pow(1.0 + (l - 1.0) * std::log(t / b), logpow);
      case KernelKind::K1: return std::pow(1.0 + std::log(t), logpow);
      case KernelKind::K0:
      case KernelKind::K2: return std::pow(t, 0.5 * (l - 1.0)) * std::pow(1.0 + std::log(t), logpow);
    }
  }
  const double S = d.sqrt_disc.real();
  const double four_m2 = (1.0 - 3.0 * l) * (1.0 - 3.0 * l) - S * S;
  switch (kind) {
    case KernelKind::E:
      return std::pow(b, -1.0 + S) * std::pow(std::abs(phi(b, l) + phi(t, l)), S / (l - 1.0));
    case KernelKind::K1: return 1.0;
    case KernelKind::K0:
    case KernelKind::K2:
      return four_m2 > 4.0 * l * (2.0 * l - 1.0) ? std::pow(t, 0.5 * (l - 1.0) - 0.5 * S) : 1.0;
  }
  return 1.0;
}

cplx power_integral_quadrature(double z, cplx s) {
  if (z == 1.0) return 0.0;
  // w = z + 1 - y in [2, z + 1], u = ln w
  auto f = [&](double u) {
    const double w = std::exp(u);
    const double y = z + 1.0 - w;
    const double base = w * (z + 1.0 + y);
    return std::exp(-s * std::log(base)) * w;
  };
  QuadOptions qo{1e-15, 1e-12, 2000};
  return integrate_gk(f, std::log(2.0), std::log(z + 1.0), qo).value;
}

cplx power_integral_closed_form(double z, cplx s) {
  const double x = (z - 1.0) / (z + 1.0);
  return (z - 1.0) * std::exp(-2.0 * s * std::log(z + 1.0)) * hyp2f1(0.5, s, 1.5, x * x);
}

std::vector<BoundSample> bound_sweep(KernelKind kind, const DerivedParams& d,
                                     const std::vector<double>& t_grid, SourceTime b_mode) {
  const Liouville L = liouville(d);
  std::vector<BoundSample> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    BoundSample s;
    s.t = t;
    s.b = kind == KernelKind::E && b_mode == SourceTime::Sqrt ? std::sqrt(t) : 1.0;
    switch (kind) {
      case KernelKind::E: s.integral = integral_abs_E(t, s.b, L); break;
      case KernelKind::K1: s.integral = integral_abs_K1(t, L); break;
      case KernelKind::K2: s.integral = integral_abs_K2(t, L); break;
      case KernelKind::K0: throw Error(Errc::OutOfDomain, "no bound sweep for K0");
    }
    s.envelope = kernel_envelope(kind, t, s.b, d);
    s.ratio = s.integral / s.envelope;
    out.push_back(s);
  }
  return out;
}

double log_log_slope(const std::vector<BoundSample>& s, double t_min) {
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : s) {
    if (p.t < t_min || !(p.ratio > 0.0)) continue;
    const double x = std::log(p.t), y = std::log(p.ratio);
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (n < 2) throw Error(Errc::DegenerateSeries, "fewer than two samples for slope");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace kgbh
