#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kgbh/transform.hpp"

using namespace kgbh;

namespace {

Liouville small_mass() {
  ModelParams p;
  p.m_c = 2.0;
  return liouville(derive(p));
}

struct Setup {
  RadialGrid g = make_periodic_grid(-8.0, 8.0, 256);
  ComplexField u0 = make_profile(g, Profile::Gaussian, 0.0, 0.5, 1.0);
  SpectralPropagator prop{g};
  Liouville L = small_mass();
};

double rel_l2(const ComplexField& a, const ComplexField& b) { return l2_norm(a - b) / l2_norm(b); }

}  // namespace

TEST_CASE("r rule integrates polynomials") {
  const RRule q = r_rule(4.0, 1.5, 2.0, 2, 16);
  const double D = phi(4.0, 2.0) - phi(1.5, 2.0);
  double s0 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < q.r.size(); ++i) {
    s0 += q.w[i];
    s2 += q.w[i] * q.r[i] * q.r[i];
  }
  CHECK(s0 == doctest::Approx(D).epsilon(1e-13));
  CHECK(s2 == doctest::Approx(D * D * D / 3.0).epsilon(1e-12));
}

TEST_CASE("initial data reproduced at t = 1") {
  Setup s;
  const EPDProblem prob{s.u0, ComplexField(s.g), {}, false, s.L};
  CHECK(rel_l2(linear_solution(prob, s.prop, 1.0), s.u0) < 1e-15);
  CHECK(rel_l2(linear_solution(prob, s.prop, 1.0 + 1e-8), s.u0) < 1e-6);
}

TEST_CASE("zero data and zero source") {
  Setup s;
  const EPDProblem prob{ComplexField(s.g), ComplexField(s.g), {}, false, s.L};
  CHECK(max_abs(linear_solution(prob, s.prop, 2.0)) == 0.0);
  const SourceFn zero = [&](double) { return ComplexField(s.g); };
  CHECK(max_abs(g_apply(zero, true, s.prop, 2.0, s.L)) == 0.0);
}

TEST_CASE("data-only solution agrees with the direct solve") {
  Setup s;
  const EPDProblem prob{s.u0, ComplexField(s.g), {}, false, s.L};
  const Trajectory direct = epd_direct_solve(prob, PeriodicOperator(s.g, 2), 2.0, {2.0});
  CHECK(l2_norm(linear_solution(prob, s.prop, 2.0) - direct.fields.back()) <= 1e-3);
}

TEST_CASE("stationary source agrees with the direct solve") {
  Setup s;
  const ComplexField src = make_profile(s.g, Profile::Gaussian, 1.0, 0.6, 1.0);
  const SourceFn g = [&](double) { return src; };
  const EPDProblem prob{ComplexField(s.g), ComplexField(s.g), g, true, s.L};
  const Trajectory direct = epd_direct_solve(prob, PeriodicOperator(s.g, 2), 2.0, {2.0});
  CHECK(l2_norm(linear_solution(prob, s.prop, 2.0) - direct.fields.back()) <= 1e-3);
}

TEST_CASE("homogeneity and linearity") {
  Setup s;
  const ComplexField f1 = make_profile(s.g, Profile::Gaussian, -1.0, 0.6, 1.0);
  const ComplexField f2 = make_profile(s.g, Profile::Gaussian, 1.5, 0.4, 1.0);
  const cplx c(0.3, -1.7);
  const SourceFn a = [&](double b) { return (1.0 / b) * f1; };
  const SourceFn ca = [&](double b) { return (c / b) * f1; };
  const ComplexField ga = g_apply(a, false, s.prop, 2.5, s.L);
  CHECK(rel_l2(g_apply(ca, false, s.prop, 2.5, s.L), c * ga) < 1e-9);

  const FieldFamily v1 = [&](double r, double) { return s.prop.at(f1, r); };
  const FieldFamily v2 = [&](double r, double b) { return b * s.prop.at(f2, r); };
  const FieldFamily sum = [&](double r, double b) { return c * v1(r, b) + v2(r, b); };
  TransformOptions o;
  o.order = 8;
  o.max_doublings = 2;
  const ComplexField k1 = k_transform(v1, s.g, 2.0, s.L, o), k2 = k_transform(v2, s.g, 2.0, s.L, o);
  CHECK(rel_l2(k_transform(sum, s.g, 2.0, s.L, o), c * k1 + k2) < 1e-9);
  CHECK(max_abs(k_transform(v1, s.g, 1.0, s.L, o)) == 0.0);
}

TEST_CASE("real coefficients keep the solution real") {
  ModelParams p;
  p.m_c = 0.0;
  Setup s;
  s.L = liouville(derive(p));
  const EPDProblem prob{s.u0, ComplexField(s.g), {}, false, s.L};
  const Trajectory direct = epd_direct_solve(prob, PeriodicOperator(s.g, 2), 3.0, {3.0});
  double im = 0.0;
  for (const cplx& v : direct.fields.back().values) im = std::max(im, std::abs(v.imag()));
  CHECK(im == 0.0);
}

TEST_CASE("residual of the representation decays at second order in the difference step") {
  Setup s;
  const EPDProblem prob{s.u0, ComplexField(s.g), {}, false, s.L};
  const PeriodicOperator op(s.g, 4);
  // spectral propagator and a fourth-order stencil leave the time-difference error dominant
  const double r1 = epd_residual(prob, s.prop, op, 2.0, 4e-2);
  const double r2 = epd_residual(prob, s.prop, op, 2.0, 2e-2);
  CHECK(r1 / r2 >= 3.5);
  CHECK(r1 / r2 <= 4.5);
}
