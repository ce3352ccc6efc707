#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "kgbh/field.hpp"
#include "kgbh/params.hpp"
#include "kgbh/wavesolver.hpp"

namespace kgbh {

struct TransformOptions {
  int r_panels = 2;       // panels in s = ln(|phi(t)| + |phi(b)| - r)
  int b_panels = 2;       // log-spaced panels in b
  int order = 16;         // Gauss-Legendre points per panel
  double tol = 1e-10;     // relative L2 change accepted between doublings
  int max_doublings = 6;
  int jobs = 0;           // 0: default_jobs()
};

// Nodes and weights for int_0^{phi(t)-phi(b)} (.) dr.
struct RRule {
  std::vector<double> r;
  std::vector<double> w;
};
RRule r_rule(double t, double b, double ell, int panels, int order);

// Source of the u-equation, g(., b) per source time.
using SourceFn = std::function<ComplexField(double b)>;

struct EPDProblem {
  ComplexField u0;
  ComplexField u1;
  SourceFn g;                // empty: no source
  bool g_stationary = false; // g independent of b
  Liouville L;
};

// u_tt + (mu/t) u_t - t^{-2l} A u = g, u(1) = u0, u_t(1) = u1, by the kernel representation.
ComplexField linear_solution(const EPDProblem& prob, const Propagator& prop, double t,
                             const TransformOptions& opt = {});

// Homogeneous part only (u0, u1 terms).
ComplexField data_solution(const ComplexField& u0, const ComplexField& u1, const Liouville& L,
                           const Propagator& prop, double t, const TransformOptions& opt = {});

// int_1^t db int_0^{phi(t)-phi(b)} E(r, t; b) v_{g(b)}(., r) dr
ComplexField duhamel(const SourceFn& g, bool stationary, const Propagator& prop, double t,
                     const Liouville& L, const TransformOptions& opt = {});

// G[F](t) = t^k int_1^t b^{-k} db int E v_{F(b)} dr
ComplexField g_apply(const SourceFn& F, bool stationary, const Propagator& prop, double t,
                     const Liouville& L, const TransformOptions& opt = {});

// t^k int_1^t b^{-k} db int E(r, t; b) v(r, b) dr for a given field family v(r, b).
using FieldFamily = std::function<ComplexField(double r, double b)>;
ComplexField k_transform(const FieldFamily& v, const RadialGrid& grid, double t, const Liouville& L,
                         const TransformOptions& opt = {});

// psi = t^k sqrt(F) u; sqrt(F) only on radial grids with R_Sch > 0.
ComplexField psi_from_u(const ComplexField& u, double t, const Liouville& L, const ModelParams& p,
                        double eps = 0.0);

struct DirectOptions {
  double cfl = 0.4;
  double max_dt_fraction = 0.02;  // dt <= fraction * t
};

// Method-of-lines RK4 for the EPD equation with a spatial operator; samples u and u_t.
Trajectory epd_direct_solve(const EPDProblem& prob, const SpatialOperator& op, double T,
                            const std::vector<double>& sample_times, const DirectOptions& opt = {});

// L2 norm of u_tt + (mu/t) u_t - t^{-2l} A u - g for the representation, with centered
// differences of step delta in t.
double epd_residual(const EPDProblem& prob, const Propagator& prop, const SpatialOperator& op, double t,
                    double delta, const TransformOptions& opt = {});

}  // namespace kgbh
