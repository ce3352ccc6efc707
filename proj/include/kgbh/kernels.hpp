#pragma once

#include <vector>

#include "kgbh/params.hpp"
#include "kgbh/quadrature.hpp"

namespace kgbh {

enum class KernelKind { E, K0, K1, K2 };
const char* kernel_name(KernelKind k);

// Hypergeometric argument ((tau - beta)^2 - r^2) / ((tau + beta)^2 - r^2).
double kernel_zeta(double r, double tau, double beta);

cplx kernel_E(double r, double t, double b, const Liouville& L);
cplx kernel_K1(double r, double t, const Liouville& L);
// Closed form with the 1/((phi(t)-phi(1))^2 - r^2) factors, not usable at the endpoint.
cplx kernel_K0(double r, double t, const Liouville& L);
cplx kernel_K2_display(double r, double t, const Liouville& L);
// Rewritten with the endpoint singularity cancelled.
cplx kernel_K2(double r, double t, const Liouville& L);

inline cplx kernel_E(double r, double t, double b, const DerivedParams& d) {
  return kernel_E(r, t, b, liouville(d));
}
inline cplx kernel_K1(double r, double t, const DerivedParams& d) { return kernel_K1(r, t, liouville(d)); }
inline cplx kernel_K0(double r, double t, const DerivedParams& d) { return kernel_K0(r, t, liouville(d)); }
inline cplx kernel_K2(double r, double t, const DerivedParams& d) { return kernel_K2(r, t, liouville(d)); }

struct KernelQuadOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

// Integrals of |kernel| over r in [0, phi(t) - phi(b)], in the variable s = ln(|phi(t)| + |phi(b)| - r).
double integral_abs_E(double t, double b, const Liouville& L, const KernelQuadOptions& o = {});
double integral_abs_K1(double t, const Liouville& L, const KernelQuadOptions& o = {});
double integral_abs_K2(double t, const Liouville& L, const KernelQuadOptions& o = {});

enum class Zone { Z1, Z2 };
struct ZoneTag {
  Zone zone = Zone::Z1;
  double eps = 0.25;
  double zeta = 0.0;
};
inline constexpr double kDefaultZoneEps = 0.25;

// z >= 1, 0 <= y <= z - 1 in the scaled variables z = phi(b)/phi(t), y = -r/phi(t).
ZoneTag zone_of(double z, double y, double eps = kDefaultZoneEps);

struct ZoneIntegrals {
  double zone1 = 0.0;
  double zone2 = 0.0;
  double y_split = 0.0;
};
// Split of the |kernel| integral (K1 or K2) at the zone boundary.
ZoneIntegrals zone_integrals(KernelKind kind, double t, const Liouville& L,
                             double eps = kDefaultZoneEps, const KernelQuadOptions& o = {});

// Envelope functions of the bound lemmas for the given regime.
double kernel_envelope(KernelKind kind, double t, double b, const DerivedParams& d);

// int_0^{z-1} ((z+1)^2 - y^2)^{-s} dy by quadrature and by the hypergeometric closed form.
cplx power_integral_quadrature(double z, cplx s);
cplx power_integral_closed_form(double z, cplx s);

struct BoundSample {
  double t = 1.0;
  double b = 1.0;
  double integral = 0.0;
  double envelope = 1.0;
  double ratio = 0.0;
};

enum class SourceTime { One, Sqrt };  // b = 1 or b = sqrt(t) for the E kernel

std::vector<BoundSample> bound_sweep(KernelKind kind, const DerivedParams& d,
                                     const std::vector<double>& t_grid,
                                     SourceTime b_mode = SourceTime::One);

// Least-squares slope of log(ratio) against log(t) over samples with t >= t_min.
double log_log_slope(const std::vector<BoundSample>& s, double t_min);

}  // namespace kgbh
