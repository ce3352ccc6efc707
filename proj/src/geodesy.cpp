#include "kgbh/geodesy.hpp"

#include <cmath>
#include <limits>

#include "kgbh/errors.hpp"

namespace kgbh {

namespace {

// Solve z - R ln(1 - z/W) = A for z in [0, W).
double solve_z(double A, double R, double W) {
  if (A <= 0.0) return 0.0;
  if (R == 0.0) return A;
  auto g = [&](double z) { return z - R * std::log1p(-z / W) - A; };
  auto dg = [&](double z) { return 1.0 + R / (W - z); };
  double lo = 0.0, hi = W * (1.0 - 1e-14);
  if (g(hi) < 0.0) throw Error(Errc::NoRoot, "geodesic reaches the horizon");
  double z = std::min(A, 0.5 * (lo + hi));
  double prev_step = std::numeric_limits<double>::infinity();
  int stalls = 0;
  for (int it = 0; it < 200; ++it) {
    const double gz = g(z);
    if (gz == 0.0) return z;
    if (gz < 0.0) lo = z;
    else hi = z;
    double zn = z - gz / dg(z);
    const double step = std::abs(zn - z);
    if (!(zn > lo && zn < hi) || step > 0.5 * prev_step) ++stalls;
    else stalls = 0;
    if (!(zn > lo && zn < hi) || stalls >= 3) {
      zn = 0.5 * (lo + hi);
      stalls = 0;
    }
    prev_step = step;
    if (std::abs(zn - z) <= 1e-16 * std::max(1.0, std::abs(z))) return zn;
    z = zn;
    if (hi - lo <= 4e-16 * std::max(1.0, hi)) return z;
  }
  return z;
}

}  // namespace

double geodesic_residual(double r, double A, const ModelParams& p) {
  const double z = p.R_ID - r;
  const double W = p.R_ID - p.R_Sch;
  return z - (p.R_Sch > 0.0 ? p.R_Sch * std::log1p(-z / W) : 0.0) - A;
}

GeodesicState radial_geodesic(double t, const ModelParams& p) {
  p.validate();
  if (!(t >= 1.0)) throw Error(Errc::OutOfDomain, "t must be >= 1");
  if (!p.support_clears_horizon())
    throw Error(Errc::NoRoot, "R_ID must exceed A_inf + R_Sch");
  const double A_inf = p.c / (p.alpha_acc * (p.ell - 1.0));
  const double A = std::isinf(t) ? A_inf : lookback(t, p);
  const double z = solve_z(A, p.R_Sch, p.R_ID - p.R_Sch);
  GeodesicState s;
  s.t = t;
  s.r = t == 1.0 ? p.R_ID : p.R_ID - z;
  s.clearance = s.r - p.R_Sch;
  s.residual = geodesic_residual(s.r, A, p);
  return s;
}

double min_clearance(const ModelParams& p) {
  p.validate();
  if (!p.support_clears_horizon())
    throw Error(Errc::NoClearance, "R_ID must exceed A_inf + R_Sch");
  return radial_geodesic(std::numeric_limits<double>::infinity(), p).clearance;
}

double inner_support_radius(double t, const ModelParams& p) {
  if (!(t >= 1.0)) throw Error(Errc::OutOfDomain, "t must be >= 1");
  return p.R_ID - lookback(t, p);
}

}  // namespace kgbh
