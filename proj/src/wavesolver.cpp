#include "kgbh/wavesolver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "kgbh/errors.hpp"
#include "kgbh/fft.hpp"

namespace kgbh {

double aux_cutoff(double r, double R, double eps) {
  if (eps <= 0.0 || R <= 0.0) return 1.0;
  const double s = std::clamp((r - (R + 0.5 * eps)) / (0.5 * eps), 0.0, 1.0);
  return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

namespace {

double aux_cutoff_deriv(double r, double R, double eps) {
  if (eps <= 0.0 || R <= 0.0) return 0.0;
  const double s = (r - (R + 0.5 * eps)) / (0.5 * eps);
  if (s <= 0.0 || s >= 1.0) return 0.0;
  return 30.0 * s * s * (1.0 - s) * (1.0 - s) / (0.5 * eps);
}

void require_radial(const RadialGrid& g, const ModelParams& p, double eps) {
  if (g.n < 16) throw Error(Errc::GridTooCoarse, "grid needs at least 16 nodes");
  if (g.periodic) throw Error(Errc::InvalidParams, "radial operator needs a non-periodic grid");
  if (!(g.r_min > 0.0)) throw Error(Errc::InvalidParams, "radial grid must start at r > 0");
  if (p.R_Sch > 0.0 && !(aux_F(g.r_min, p.R_Sch, eps) > 0.0))
    throw Error(Errc::InvalidParams, "grid reaches the horizon; raise r_min or the cutoff eps");
}

// Second-order first and second derivatives, one-sided at the ends.
void derivs(const std::vector<cplx>& u, double h, int i, cplx& d1, cplx& d2) {
  const int n = static_cast<int>(u.size());
  if (i == 0) {
    d1 = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
    d2 = (2.0 * u[0] - 5.0 * u[1] + 4.0 * u[2] - u[3]) / (h * h);
  } else if (i == n - 1) {
    d1 = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
    d2 = (2.0 * u[n - 1] - 5.0 * u[n - 2] + 4.0 * u[n - 3] - u[n - 4]) / (h * h);
  } else {
    d1 = (u[i + 1] - u[i - 1]) / (2.0 * h);
    d2 = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
  }
}

}  // namespace

double aux_F(double r, double R, double eps) { return 1.0 - aux_cutoff(r, R, eps) * R / r; }

RadialOperator::RadialOperator(const RadialGrid& g, const ModelParams& p, double eps) : g_(g) {
  require_radial(g, p, eps);
  const double k2 = (p.c / p.alpha_acc) * (p.c / p.alpha_acc);
  c2_.resize(g.n);
  c1_.resize(g.n);
  double fmax = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double r = g.r(i);
    const double chi = aux_cutoff(r, p.R_Sch, eps);
    const double F = 1.0 - chi * p.R_Sch / r;
    const double dF = -aux_cutoff_deriv(r, p.R_Sch, eps) * p.R_Sch / r + chi * p.R_Sch / (r * r);
    c2_[i] = k2 * F * F;
    c1_[i] = k2 * F * (2.0 * F / r + dF);
    fmax = std::max(fmax, F);
  }
  speed_ = std::sqrt(k2) * fmax;
}

void RadialOperator::apply(const std::vector<cplx>& v, std::vector<cplx>& out) const {
  const int n = g_.n;
  const double h = g_.h();
  out.resize(n);
  const double ih2 = 1.0 / (h * h), i2h = 0.5 / h;
  for (int i = 1; i < n - 1; ++i)
    out[i] = c2_[i] * (v[i + 1] - 2.0 * v[i] + v[i - 1]) * ih2 + c1_[i] * (v[i + 1] - v[i - 1]) * i2h;
  cplx d1, d2;
  derivs(v, h, 0, d1, d2);
  out[0] = c2_[0] * d2 + c1_[0] * d1;
  derivs(v, h, n - 1, d1, d2);
  out[n - 1] = c2_[n - 1] * d2 + c1_[n - 1] * d1;
}

PeriodicOperator::PeriodicOperator(const RadialGrid& g, int order, double speed)
    : g_(g), order_(order), speed_(speed) {
  if (!g.periodic) throw Error(Errc::InvalidParams, "periodic operator needs a periodic grid");
  if (g.n < 16) throw Error(Errc::GridTooCoarse, "grid needs at least 16 nodes");
  if (order != 2 && order != 4) throw Error(Errc::InvalidParams, "order must be 2 or 4");
}

void PeriodicOperator::apply(const std::vector<cplx>& v, std::vector<cplx>& out) const {
  const int n = g_.n;
  const double h = g_.h();
  const double s = speed_ * speed_ / (h * h);
  out.resize(n);
  if (order_ == 2) {
    for (int i = 0; i < n; ++i) {
      const int im = i == 0 ? n - 1 : i - 1, ip = i == n - 1 ? 0 : i + 1;
      out[i] = s * (v[ip] - 2.0 * v[i] + v[im]);
    }
    return;
  }
  for (int i = 0; i < n; ++i) {
    const int im1 = (i - 1 + n) % n, im2 = (i - 2 + n) % n;
    const int ip1 = (i + 1) % n, ip2 = (i + 2) % n;
    out[i] = s * (-v[ip2] + 16.0 * v[ip1] - 30.0 * v[i] + 16.0 * v[im1] - v[im2]) / 12.0;
  }
}

ComplexField apply_A_radial(const ComplexField& v, const ModelParams& p, double eps) {
  RadialOperator op(v.grid, p, eps);
  ComplexField out(v.grid);
  op.apply(v.values, out.values);
  return out;
}

ComplexField apply_A32_radial(const ComplexField& v, const ModelParams& p, double eps) {
  const RadialGrid& g = v.grid;
  require_radial(g, p, eps);
  const double k2 = (p.c / p.alpha_acc) * (p.c / p.alpha_acc);
  std::vector<cplx> u(g.n);
  std::vector<double> F(g.n);
  for (int i = 0; i < g.n; ++i) {
    F[i] = aux_F(g.r(i), p.R_Sch, eps);
    u[i] = std::sqrt(F[i]) * v[i];
  }
  ComplexField out(g);
  for (int i = 0; i < g.n; ++i) {
    const double r = g.r(i);
    const double sF = std::sqrt(F[i]);
    const double R = aux_cutoff(r, p.R_Sch, eps) * p.R_Sch;
    cplx d1, d2;
    derivs(u, g.h(), i, d1, d2);
    out[i] = k2 * (F[i] * sF * d2 + sF * (2.0 / r) * (1.0 - R / (2.0 * r)) * d1);
  }
  return out;
}

cplx weighted_inner(const ComplexField& u, const ComplexField& w) {
  cplx s = 0.0;
  for (int i = 1; i < u.size() - 1; ++i) {
    const double r = u.grid.r(i);
    s += u[i] * std::conj(w[i]) * r * r;
  }
  return s * u.grid.h();
}

double energy(const ComplexField& v, const ComplexField& vt, const ModelParams& p, double eps) {
  const RadialGrid& g = v.grid;
  const double h = g.h();
  const double k2 = (p.c / p.alpha_acc) * (p.c / p.alpha_acc);
  const int n = g.n;
  double e = 0.0;
  if (g.periodic) {
    for (int i = 0; i < n; ++i) {
      const cplx dv = (-v[(i + 2) % n] + 8.0 * v[(i + 1) % n] - 8.0 * v[(i - 1 + n) % n] +
                       v[(i - 2 + n) % n]) / (12.0 * h);
      e += std::norm(vt[i]) + k2 * std::norm(dv);
    }
    return 0.5 * e * h;
  }
  for (int i = 0; i < n; ++i) {
    const double r = g.r(i);
    const double F = aux_F(r, p.R_Sch, eps);
    cplx d1, d2;
    derivs(v.values, h, i, d1, d2);
    e += (std::norm(vt[i]) / F + k2 * F * std::norm(d1)) * r * r;
  }
  return 0.5 * e * h;
}

double default_dt(const SpatialOperator& op) { return 0.4 * op.grid().h() / op.max_speed(); }

namespace {

struct RK4 {
  const SpatialOperator& op;
  bool frozen;
  int n;
  std::vector<cplx> v2, w2, a1, a2, a3, a4, k2v, k3v, k4v;

  RK4(const SpatialOperator& o) : op(o), frozen(!o.grid().periodic), n(o.grid().n) {
    for (auto* x : {&v2, &w2, &a1, &a2, &a3, &a4, &k2v, &k3v, &k4v}) x->assign(n, 0.0);
  }

  void A(const std::vector<cplx>& v, std::vector<cplx>& out) {
    op.apply(v, out);
    if (frozen) out[0] = out[n - 1] = 0.0;
  }

  // a1 must hold A(v) on entry; on exit v, w advanced and a1 = A(v_new).
  void step(std::vector<cplx>& v, std::vector<cplx>& w, double dt) {
    const double h2 = 0.5 * dt;
    for (int i = 0; i < n; ++i) {
      v2[i] = v[i] + h2 * w[i];
      w2[i] = w[i] + h2 * a1[i];
    }
    k2v = w2;
    A(v2, a2);
    for (int i = 0; i < n; ++i) {
      v2[i] = v[i] + h2 * k2v[i];
      w2[i] = w[i] + h2 * a2[i];
    }
    k3v = w2;
    A(v2, a3);
    for (int i = 0; i < n; ++i) {
      v2[i] = v[i] + dt * k3v[i];
      w2[i] = w[i] + dt * a3[i];
    }
    k4v = w2;
    A(v2, a4);
    const double s = dt / 6.0;
    for (int i = 0; i < n; ++i) {
      v[i] += s * (w[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
      w[i] += s * (a1[i] + 2.0 * a2[i] + 2.0 * a3[i] + a4[i]);
    }
    if (frozen) w[0] = w[n - 1] = 0.0;
    A(v, a1);
  }
};

void hermite(double s, double h, const std::vector<cplx>& y0, const std::vector<cplx>& d0,
             const std::vector<cplx>& y1, const std::vector<cplx>& d1, std::vector<cplx>& out) {
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
  out.resize(y0.size());
  for (std::size_t i = 0; i < y0.size(); ++i)
    out[i] = h00 * y0[i] + h10 * h * d0[i] + h01 * y1[i] + h11 * h * d1[i];
}

struct SupportGuard {
  int width;
  double thresh;
  bool active;

  SupportGuard(const ComplexField& f, int stencil, bool on) : width(2 * stencil + 1), active(on) {
    double edge = 0.0;
    const int n = f.size();
    for (int i = 0; i < width && i < n; ++i)
      edge = std::max({edge, std::abs(f[i]), std::abs(f[n - 1 - i])});
    thresh = std::max(1e-10 * max_abs(f), 10.0 * edge);
  }

  void check(const std::vector<cplx>& v, double t) const {
    if (!active) return;
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < width && i < n; ++i)
      if (std::abs(v[i]) > thresh || std::abs(v[n - 1 - i]) > thresh)
        throw Error(Errc::SupportHitBoundary, "support reached the grid end at t=" + std::to_string(t));
  }
};

}  // namespace

Trajectory evolve(const SpatialOperator& op, const ComplexField& f, const ComplexField& g, double T,
                  const EvolveOptions& opt) {
  const RadialGrid& grid = op.grid();
  if (!(f.grid == grid) || !(g.grid == grid)) throw Error(Errc::InvalidParams, "grid mismatch");
  Trajectory traj;
  std::vector<cplx> v = f.values, w = g.values;
  RK4 rk(op);
  if (rk.frozen) w[0] = w[grid.n - 1] = 0.0;
  rk.A(v, rk.a1);
  traj.push(0.0, ComplexField(grid, v), ComplexField(grid, w));
  if (T <= 0.0) return traj;
  const double dt0 = opt.dt > 0.0 ? opt.dt : default_dt(op);
  const long N = std::max(1L, static_cast<long>(std::ceil(T / dt0 - 1e-9)));
  const double dt = T / N;
  std::vector<double> samples = opt.sample_times;
  std::sort(samples.begin(), samples.end());
  std::size_t idx = 0;
  while (idx < samples.size() && samples[idx] <= 0.0) ++idx;
  SupportGuard guard(f, op.stencil_width(), opt.check_support && !grid.periodic);
  const bool need_energy = opt.check_energy;
  const double e0 = need_energy ? energy(f, g, opt.params, opt.eps) : 0.0;
  std::vector<cplx> v0, w0, a0, vi, wi;
  for (long k = 0; k < N; ++k) {
    const double t0 = k * dt, t1 = (k + 1 == N) ? T : (k + 1) * dt;
    v0 = v;
    w0 = w;
    a0 = rk.a1;
    rk.step(v, w, dt);
    guard.check(v, t1);
    auto emit = [&](double ts) {
      if (ts >= t1) {
        vi = v;
        wi = w;
      } else {
        const double s = (ts - t0) / dt;
        hermite(s, dt, v0, w0, v, w, vi);
        hermite(s, dt, w0, a0, w, rk.a1, wi);
      }
      ComplexField fv(grid, vi), fw(grid, wi);
      if (need_energy) {
        const double e = energy(fv, fw, opt.params, opt.eps);
        if (e - e0 > 0.01 * e0 * std::max(1.0, ts))
          throw Error(Errc::Unstable, "energy growth above 1% per unit time");
      }
      traj.push(ts, std::move(fv), std::move(fw));
    };
    if (samples.empty()) {
      emit(t1);
    } else {
      while (idx < samples.size() && samples[idx] <= t1 + 1e-12 * T) emit(std::min(samples[idx++], t1));
    }
  }
  return traj;
}

Trajectory ee_evolve(const ComplexField& f, double T, const ModelParams& p, double dt,
                     const std::vector<double>& sample_times, double eps) {
  RadialOperator op(f.grid, p, eps);
  EvolveOptions opt;
  opt.sample_times = sample_times.empty() ? std::vector<double>{T} : sample_times;
  opt.dt = dt;
  opt.check_energy = true;
  opt.params = p;
  opt.eps = eps;
  return evolve(op, f, ComplexField(f.grid), T, opt);
}

ComplexField Propagator::superpose(const ComplexField& f, const std::vector<double>& s,
                                   const std::vector<cplx>& c) const {
  return superpose(f, s, std::vector<std::vector<cplx>>{c}).front();
}

ComplexField Propagator::superpose_sum(const std::vector<SuperposeTerm>& terms) const {
  ComplexField out(grid());
  for (const auto& term : terms) out += superpose(*term.f, term.s, term.c);
  return out;
}

ComplexField Propagator::at(const ComplexField& f, double s) const {
  return superpose(f, std::vector<double>{s}, std::vector<cplx>{cplx(1.0)});
}

SpectralPropagator::SpectralPropagator(const RadialGrid& g, double speed)
    : g_(g), speed_(speed), xi_(fft_wavenumbers(g.n, g.length())) {
  if (!g.periodic) throw Error(Errc::InvalidParams, "spectral propagator needs a periodic grid");
}

void SpectralPropagator::add_multiplier(std::vector<cplx>& acc, const std::vector<double>& s,
                                        const std::vector<cplx>& c) const {
  const int n = g_.n;
  const int half = n / 2;
  const double dxi = 2.0 * std::numbers::pi / g_.length();
  std::vector<cplx> pos(half + 1, cplx(0.0));
  for (std::size_t j = 0; j < s.size(); ++j) {
    const cplx w = c[j];
    if (w == 0.0) continue;
    const double th = dxi * speed_ * s[j];
    // cos(k th) by the Chebyshev recurrence, reseeded every 32 steps
    double cm1 = std::cos(th), c0 = 1.0;
    const double two_c = 2.0 * std::cos(th);
    for (int k = 0; k <= half; ++k) {
      if (k % 32 == 0 && k > 0) {
        c0 = std::cos(k * th);
        cm1 = std::cos((k - 1) * th);
      }
      pos[k] += w * c0;
      const double cn = two_c * c0 - cm1;
      cm1 = c0;
      c0 = cn;
    }
  }
  for (int i = 0; i < n; ++i) acc[i] += pos[i <= half ? i : n - i];
}

std::vector<ComplexField> SpectralPropagator::superpose(const ComplexField& f, const std::vector<double>& s,
                                                        const std::vector<std::vector<cplx>>& c) const {
  std::vector<cplx> fh = f.values;
  fft_forward(fh);
  const int n = g_.n;
  std::vector<ComplexField> out;
  out.reserve(c.size());
  for (const auto& cw : c) {
    std::vector<cplx> m(n, cplx(0.0));
    add_multiplier(m, s, cw);
    for (int k = 0; k < n; ++k) m[k] *= fh[k];
    fft_backward(m);
    out.emplace_back(g_, std::move(m));
  }
  return out;
}

ComplexField SpectralPropagator::superpose_sum(const std::vector<SuperposeTerm>& terms) const {
  const int n = g_.n;
  std::vector<cplx> total(n, cplx(0.0)), fh, m(n);
  for (const auto& term : terms) {
    fh = term.f->values;
    fft_forward(fh);
    std::fill(m.begin(), m.end(), cplx(0.0));
    add_multiplier(m, term.s, term.c);
    for (int k = 0; k < n; ++k) total[k] += m[k] * fh[k];
  }
  fft_backward(total);
  return ComplexField(g_, std::move(total));
}

FDPropagator::FDPropagator(std::shared_ptr<const SpatialOperator> op, double dt)
    : op_(std::move(op)), dt_(dt > 0.0 ? dt : default_dt(*op_)) {}

std::vector<ComplexField> FDPropagator::superpose(const ComplexField& f, const std::vector<double>& s,
                                                  const std::vector<std::vector<cplx>>& c) const {
  const RadialGrid& grid = op_->grid();
  const int n = grid.n;
  std::vector<ComplexField> out(c.size(), ComplexField(grid));
  if (s.empty()) return out;
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s[a] < s[b]; });
  auto accumulate = [&](std::size_t j, const std::vector<cplx>& val) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const cplx w = c[k][j];
      if (w == 0.0) continue;
      for (int i = 0; i < n; ++i) out[k][i] += w * val[i];
    }
  };
  std::size_t idx = 0;
  while (idx < order.size() && s[order[idx]] <= 0.0) accumulate(order[idx++], f.values);
  if (idx == order.size()) return out;
  const double T = s[order.back()];
  const long N = std::max(1L, static_cast<long>(std::ceil(T / dt_ - 1e-9)));
  const double dt = T / N;
  RK4 rk(*op_);
  std::vector<cplx> v = f.values, w(n, 0.0), v0, w0, vi;
  rk.A(v, rk.a1);
  SupportGuard guard(f, op_->stencil_width(), !grid.periodic);
  for (long k = 0; k < N && idx < order.size(); ++k) {
    const double t0 = k * dt, t1 = (k + 1 == N) ? T : (k + 1) * dt;
    v0 = v;
    w0 = w;
    rk.step(v, w, dt);
    guard.check(v, t1);
    while (idx < order.size() && s[order[idx]] <= t1) {
      const double sj = s[order[idx]];
      if (sj >= t1) {
        accumulate(order[idx], v);
      } else {
        hermite((sj - t0) / dt, dt, v0, w0, v, w, vi);
        accumulate(order[idx], vi);
      }
      ++idx;
    }
  }
  return out;
}

}  // namespace kgbh
