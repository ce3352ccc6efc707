#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgbh/field.hpp"
#include "kgbh/params.hpp"
#include "kgbh/wavesolver.hpp"

namespace kgbh {

// RMS-normalized norm with the Fourier multiplier (1 + xi^2)^{s/2} on the window of the
// grid. With check_window, a field that does not vanish at the window ends throws
// SupportTouchesWindow.
double sobolev_norm(const ComplexField& v, double s, bool check_window);
double sobolev_norm(const ComplexField& v, double s = 2.0);

enum class NonlinearForm { PowAbs, AbsPow };  // psi |psi|^alpha, |psi|^{1+alpha}
NonlinearForm parse_nonlinear_form(const std::string& s);
const char* nonlinear_form_name(NonlinearForm f);

struct Nonlinearity {
  double alpha = 3.0;
  NonlinearForm form = NonlinearForm::PowAbs;
};

cplx nonlinearity_value(cplx v, const Nonlinearity& nl);
ComplexField apply_nonlinearity(const ComplexField& v, const Nonlinearity& nl);
// Psi(v + dv) - Psi(v) without cancellation for small dv.
ComplexField nonlinearity_difference(const ComplexField& v, const ComplexField& dv, const Nonlinearity& nl);

// Largest ratio ||Psi(v1) - Psi(v2)|| / (||v1 - v2|| (||v1||^alpha + ||v2||^alpha)) in the
// discrete L2 norm over random smooth field pairs.
double lipschitz_sample(const Nonlinearity& nl, const RadialGrid& g, int samples, std::uint64_t seed);

enum class PotentialKind { Gravitational, CustomGrid };

struct PotentialModel {
  double delta = 2.0;
  double eps_P = 0.0;
  PotentialKind kind = PotentialKind::Gravitational;
  ComplexField profile;  // CustomGrid: V(r, t) = profile(r) t^{-delta}
  double eps = 0.0;      // clearance used by the cutoff of F
};

// Pointwise V(r, t) v. Gravitational: V = -t^{-2} m_c^2 R_Sch / r.
ComplexField apply_potential(const ComplexField& v, double t, const PotentialModel& pm, const ModelParams& p);

// sup over random fields of ||V v||_{H_s} t^delta / ||v||_{H_s}.
double estimate_eps_P(const PotentialModel& pm, const ModelParams& p, const RadialGrid& g,
                      const std::vector<double>& times, double s, int samples, std::uint64_t seed);

struct PicardOptions {
  double T_max = 100.0;
  double tol = 1e-10;      // absolute, on sup_t t^gamma ||Phi_{n+1} - Phi_n||_{H_s}
  int max_iterations = 50;
  int n_samples = 64;      // log-spaced trajectory times in [1, T_max]
  double s = 2.0;
  int b_order = 8;         // Gauss-Legendre points per interval between sample times
  int r_panels = 2;
  int r_order = 16;
  int jobs = 0;
  double fit_t_min = 10.0;
};

struct FixedPointReport {
  int iterations = 0;
  std::vector<double> diff_norms;  // sup_t t^gamma ||Phi_{n+1} - Phi_n||
  std::vector<double> ratios;      // diff_norms[n+1] / diff_norms[n]
  double contraction_ratio = 0.0;
  bool converged = false;
  double gamma_used = 0.0;
  double radius_R = 0.0;   // sup_t t^gamma ||psi||_{H_s} of the solution
  double data_size = 0.0;  // ||psi0||_{H_s} + ||psi1||_{H_s}
  double id_norm = 0.0;    // sup_t t^gamma ||psi_ID||_{H_s}
  double fixed_point_residual = 0.0;
  GammaRange range;
};

struct DecayReport {
  double gamma_fit = 0.0;   // slope of log norm vs log t (log-corrected model when flagged)
  double gamma_plain = 0.0;
  double log_beta = 0.0;    // coefficient of log(1 + ln t)
  bool log_flag = false;
  double residual = 0.0;    // rms residual of the plain fit
  double residual_log = 0.0;
  double gamma_exp = 0.0;   // rate of the fit log norm = a - gamma t
  double residual_exp = 0.0;
  int samples = 0;
};

// Decay envelope of the data-only solution for data norms n0 = ||psi0||, n1 = ||psi1||.
// LargeMass: t^{-l} (n1 t^{-(l-1)/2} + n0) (1 + ln t)^{1 - sgn M}.
// SmallMass: t^{k+} (n0 + n1) + t^{-l} n0 + t^{k+} n0 f(t), f = t^{(l-1)/2 - S/2} if
// 4 m_c^2 > 4 l (2l - 1), else 1.
double id_envelope(double t, const DerivedParams& d, double n0, double n1);

DecayReport decay_fit(const std::vector<double>& t, const std::vector<double>& norm);

struct PicardResult {
  Trajectory psi;
  std::vector<double> norms;  // ||psi(t)||_{H_s} at psi.times
  FixedPointReport report;
  DecayReport decay;
};

// Iterates Phi_{n+1} = psi_ID + G[V Phi_n] + G[F Psi(Phi_n)] from Phi_0 = psi_ID, where psi0 and
// psi1 are the physical data at t = 1 and F = c^2 (1 - R_Sch / r) on radial grids, 1 on
// periodic grids.
PicardResult picard_solve(const ComplexField& psi0, const ComplexField& psi1, const PotentialModel& pm,
                          const Nonlinearity& nl, double gamma, const ModelParams& p, const Propagator& prop,
                          const PicardOptions& opt = {});

std::string to_keyvalue(const FixedPointReport& r);
std::string to_keyvalue(const DecayReport& r);

}  // namespace kgbh
