#include "kgbh/transform.hpp"

#include <algorithm>
#include <cmath>

#include "kgbh/errors.hpp"
#include "kgbh/kernels.hpp"
#include "kgbh/parallel.hpp"
#include "kgbh/quadrature.hpp"

namespace kgbh {

RRule r_rule(double t, double b, double ell, int panels, int order) {
  RRule rule;
  if (t <= b) return rule;
  const double tau = std::abs(phi(t, ell)), beta = std::abs(phi(b, ell));
  const double top = tau + beta;
  const double D = -std::pow(b, 1.0 - ell) * std::expm1((1.0 - ell) * std::log(t / b)) / (ell - 1.0);
  const Rule q = composite_rule(linspace(std::log(2.0 * tau), std::log(top), panels + 1), order);
  rule.r.resize(q.x.size());
  rule.w.resize(q.x.size());
  for (std::size_t j = 0; j < q.x.size(); ++j) {
    const double w = std::exp(q.x[j]);
    rule.r[j] = std::clamp(top - w, 0.0, D);
    rule.w[j] = q.w[j] * w;
  }
  return rule;
}

namespace {

double rel_change(const ComplexField& a, const ComplexField& b) {
  const double d = l2_norm(a - b);
  const double s = std::max(l2_norm(a), l2_norm(b));
  return s > 0.0 ? d / s : d;
}

template <class F>
ComplexField refine(F&& level, const TransformOptions& opt) {
  ComplexField prev = level(1);
  int mult = 1;
  for (int k = 0; k < opt.max_doublings; ++k) {
    mult *= 2;
    ComplexField next = level(mult);
    const double ch = rel_change(prev, next);
    prev = std::move(next);
    if (ch <= opt.tol) return prev;
  }
  return prev;
}

double d_of(double t, double ell) {
  return -std::expm1((1.0 - ell) * std::log(t)) / (ell - 1.0);
}

ComplexField duhamel_weighted(const SourceFn& g, bool stationary, const Propagator& prop, double t,
                              const Liouville& L, const TransformOptions& opt,
                              const std::function<cplx(double)>& bweight) {
  if (!(t >= 1.0)) throw Error(Errc::OutOfDomain, "t must be >= 1");
  if (t == 1.0 || !g) return ComplexField(prop.grid());
  ComplexField g_fixed;
  if (stationary) g_fixed = g(1.0);
  auto level = [&](int mult) {
    const Rule bq = composite_rule(logspace(1.0, t, opt.b_panels * mult + 1), opt.order);
    const std::size_t nb = bq.x.size();
    std::vector<SuperposeTerm> terms(nb);
    std::vector<ComplexField> data(stationary ? 0 : nb);
    parallel_for(nb, [&](std::size_t i) {
      const double b = bq.x[i];
      const RRule rr = r_rule(t, b, L.ell, opt.r_panels * mult, opt.order);
      const cplx wb = bq.w[i] * bweight(b);
      SuperposeTerm& term = terms[i];
      term.s = rr.r;
      term.c.resize(rr.r.size());
      for (std::size_t j = 0; j < rr.r.size(); ++j) term.c[j] = wb * rr.w[j] * kernel_E(rr.r[j], t, b, L);
      if (!stationary) data[i] = g(b);
    }, opt.jobs);
    if (stationary) {
      SuperposeTerm all;
      all.f = &g_fixed;
      for (auto& term : terms) {
        all.s.insert(all.s.end(), term.s.begin(), term.s.end());
        all.c.insert(all.c.end(), term.c.begin(), term.c.end());
      }
      return prop.superpose_sum({all});
    }
    for (std::size_t i = 0; i < nb; ++i) terms[i].f = &data[i];
    return prop.superpose_sum(terms);
  };
  return refine(level, opt);
}

}  // namespace

ComplexField data_solution(const ComplexField& u0, const ComplexField& u1, const Liouville& L,
                           const Propagator& prop, double t, const TransformOptions& opt) {
  if (!(t >= 1.0)) throw Error(Errc::OutOfDomain, "t must be >= 1");
  if (t == 1.0) return u0;
  const double t1 = phi(1.0, L.ell), tau = phi(t, L.ell);
  const double D = d_of(t, L.ell);
  const cplx boundary = std::exp(L.q * std::log(t1 / tau));
  auto level = [&](int mult) {
    const RRule rr = r_rule(t, 1.0, L.ell, opt.r_panels * mult, opt.order);
    SuperposeTerm a, b;
    a.f = &u1;
    b.f = &u0;
    a.s = rr.r;
    b.s = rr.r;
    a.c.resize(rr.r.size());
    b.c.resize(rr.r.size());
    for (std::size_t j = 0; j < rr.r.size(); ++j) {
      a.c[j] = rr.w[j] * kernel_K1(rr.r[j], t, L);
      b.c[j] = rr.w[j] * kernel_K2(rr.r[j], t, L) / t1;
    }
    b.s.push_back(D);
    b.c.push_back(boundary);
    return prop.superpose_sum({a, b});
  };
  return refine(level, opt);
}

ComplexField duhamel(const SourceFn& g, bool stationary, const Propagator& prop, double t,
                     const Liouville& L, const TransformOptions& opt) {
  return duhamel_weighted(g, stationary, prop, t, L, opt, [](double) { return cplx(1.0); });
}

ComplexField g_apply(const SourceFn& F, bool stationary, const Propagator& prop, double t,
                     const Liouville& L, const TransformOptions& opt) {
  const cplx k = L.k;
  ComplexField out = duhamel_weighted(F, stationary, prop, t, L, opt,
                                      [k](double b) { return std::exp(-k * std::log(b)); });
  out *= std::exp(k * std::log(t));
  return out;
}

ComplexField linear_solution(const EPDProblem& prob, const Propagator& prop, double t,
                             const TransformOptions& opt) {
  ComplexField u = data_solution(prob.u0, prob.u1, prob.L, prop, t, opt);
  if (prob.g) u += duhamel(prob.g, prob.g_stationary, prop, t, prob.L, opt);
  return u;
}

ComplexField k_transform(const FieldFamily& v, const RadialGrid& grid, double t, const Liouville& L,
                         const TransformOptions& opt) {
  if (!(t >= 1.0)) throw Error(Errc::OutOfDomain, "t must be >= 1");
  if (t == 1.0) return ComplexField(grid);
  auto level = [&](int mult) {
    const Rule bq = composite_rule(logspace(1.0, t, opt.b_panels * mult + 1), opt.order);
    ComplexField acc(grid);
    for (std::size_t i = 0; i < bq.x.size(); ++i) {
      const double b = bq.x[i];
      const cplx wb = bq.w[i] * std::exp(-L.k * std::log(b));
      const RRule rr = r_rule(t, b, L.ell, opt.r_panels * mult, opt.order);
      for (std::size_t j = 0; j < rr.r.size(); ++j) {
        const ComplexField f = v(rr.r[j], b);
        if (!(f.grid == grid)) throw Error(Errc::MissingTrajectorySamples, "field family grid mismatch");
        const cplx c = wb * rr.w[j] * kernel_E(rr.r[j], t, b, L);
        for (int n = 0; n < grid.n; ++n) acc[n] += c * f[n];
      }
    }
    return acc;
  };
  ComplexField out = refine(level, opt);
  out *= std::exp(L.k * std::log(t));
  return out;
}

ComplexField psi_from_u(const ComplexField& u, double t, const Liouville& L, const ModelParams& p,
                        double eps) {
  ComplexField out = u;
  out *= std::exp(L.k * std::log(t));
  if (!u.grid.periodic && p.R_Sch > 0.0)
    for (int i = 0; i < out.size(); ++i) out[i] *= std::sqrt(aux_F(u.grid.r(i), p.R_Sch, eps));
  return out;
}

Trajectory epd_direct_solve(const EPDProblem& prob, const SpatialOperator& op, double T,
                            const std::vector<double>& sample_times, const DirectOptions& opt) {
  const RadialGrid& grid = op.grid();
  const int n = grid.n;
  const bool frozen = !grid.periodic;
  const double ell = prob.L.ell;
  const cplx mu = prob.L.mu;
  std::vector<double> samples = sample_times;
  std::sort(samples.begin(), samples.end());
  samples.erase(std::remove_if(samples.begin(), samples.end(), [&](double s) { return s < 1.0 || s > T; }),
                samples.end());
  if (samples.empty() || samples.back() < T) samples.push_back(T);

  std::vector<cplx> u = prob.u0.values, w = prob.u1.values;
  if (frozen) w[0] = w[n - 1] = 0.0;
  ComplexField g_fixed;
  if (prob.g && prob.g_stationary) g_fixed = prob.g(1.0);
  auto source = [&](double t, std::vector<cplx>& out) {
    if (!prob.g) {
      std::fill(out.begin(), out.end(), cplx(0.0));
    } else if (prob.g_stationary) {
      out = g_fixed.values;
    } else {
      out = prob.g(t).values;
    }
    if (frozen) out[0] = out[n - 1] = 0.0;
  };
  std::vector<cplx> Au(n), gs(n), ku[4], kw[4], ut(n), wt(n);
  for (int s = 0; s < 4; ++s) {
    ku[s].assign(n, 0.0);
    kw[s].assign(n, 0.0);
  }
  auto rhs = [&](double t, const std::vector<cplx>& uu, const std::vector<cplx>& ww, std::vector<cplx>& du,
                 std::vector<cplx>& dw) {
    op.apply(uu, Au);
    if (frozen) Au[0] = Au[n - 1] = 0.0;
    source(t, gs);
    const double sp = std::pow(t, -2.0 * ell);
    for (int i = 0; i < n; ++i) {
      du[i] = ww[i];
      dw[i] = sp * Au[i] - mu / t * ww[i] + gs[i];
    }
  };
  Trajectory traj;
  double t = 1.0;
  if (samples.front() == 1.0) {
    traj.push(1.0, ComplexField(grid, u), ComplexField(grid, w));
    samples.erase(samples.begin());
  }
  const double h = grid.h();
  for (double target : samples) {
    while (t < target) {
      double dt = std::min(opt.cfl * h * std::pow(t, ell) / op.max_speed(), opt.max_dt_fraction * t);
      if (t + dt >= target * (1.0 - 1e-14)) dt = target - t;
      rhs(t, u, w, ku[0], kw[0]);
      for (int i = 0; i < n; ++i) {
        ut[i] = u[i] + 0.5 * dt * ku[0][i];
        wt[i] = w[i] + 0.5 * dt * kw[0][i];
      }
      rhs(t + 0.5 * dt, ut, wt, ku[1], kw[1]);
      for (int i = 0; i < n; ++i) {
        ut[i] = u[i] + 0.5 * dt * ku[1][i];
        wt[i] = w[i] + 0.5 * dt * kw[1][i];
      }
      rhs(t + 0.5 * dt, ut, wt, ku[2], kw[2]);
      for (int i = 0; i < n; ++i) {
        ut[i] = u[i] + dt * ku[2][i];
        wt[i] = w[i] + dt * kw[2][i];
      }
      rhs(t + dt, ut, wt, ku[3], kw[3]);
      for (int i = 0; i < n; ++i) {
        u[i] += dt / 6.0 * (ku[0][i] + 2.0 * ku[1][i] + 2.0 * ku[2][i] + ku[3][i]);
        w[i] += dt / 6.0 * (kw[0][i] + 2.0 * kw[1][i] + 2.0 * kw[2][i] + kw[3][i]);
      }
      for (int i = 0; i < n; ++i)
        if (!std::isfinite(u[i].real()) || !std::isfinite(u[i].imag()))
          throw Error(Errc::Unstable, "direct EPD solve diverged");
      t = (target - (t + dt) < 1e-14 * target) ? target : t + dt;
    }
    traj.push(target, ComplexField(grid, u), ComplexField(grid, w));
  }
  return traj;
}

double epd_residual(const EPDProblem& prob, const Propagator& prop, const SpatialOperator& op, double t,
                    double delta, const TransformOptions& opt) {
  const ComplexField um = linear_solution(prob, prop, t - delta, opt);
  const ComplexField u = linear_solution(prob, prop, t, opt);
  const ComplexField up = linear_solution(prob, prop, t + delta, opt);
  std::vector<cplx> Au;
  op.apply(u.values, Au);
  ComplexField g(u.grid);
  if (prob.g) g = prob.g_stationary ? prob.g(1.0) : prob.g(t);
  const double sp = std::pow(t, -2.0 * prob.L.ell);
  ComplexField res(u.grid);
  const bool frozen = !u.grid.periodic;
  for (int i = 0; i < u.size(); ++i) {
    if (frozen && (i == 0 || i == u.size() - 1)) continue;
    const cplx utt = (up[i] - 2.0 * u[i] + um[i]) / (delta * delta);
    const cplx ut = (up[i] - um[i]) / (2.0 * delta);
    res[i] = utt + prob.L.mu / t * ut - sp * Au[i] - g[i];
  }
  return l2_norm(res);
}

}  // namespace kgbh
