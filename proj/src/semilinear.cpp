#include "kgbh/semilinear.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "kgbh/errors.hpp"
#include "kgbh/fft.hpp"
#include "kgbh/format.hpp"
#include "kgbh/kernels.hpp"
#include "kgbh/parallel.hpp"
#include "kgbh/quadrature.hpp"
#include "kgbh/transform.hpp"

namespace kgbh {

double sobolev_norm(const ComplexField& v, double s, bool check_window) {
  const int n = v.size();
  if (n == 0) return 0.0;
  const double peak = max_abs(v);
  if (peak == 0.0) return 0.0;
  if (check_window && std::max(std::abs(v[0]), std::abs(v[n - 1])) > 1e-10 * peak)
    throw Error(Errc::SupportTouchesWindow, "field does not vanish at the window ends");
  std::vector<cplx> a = v.values;
  fft_forward(a);
  const double length = v.grid.periodic ? v.grid.length() : n * v.grid.h();
  const std::vector<double> xi = fft_wavenumbers(n, length);
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += std::norm(a[k]) * std::pow(1.0 + xi[k] * xi[k], s);
  return std::sqrt(acc) / n;
}

double sobolev_norm(const ComplexField& v, double s) { return sobolev_norm(v, s, !v.grid.periodic); }

NonlinearForm parse_nonlinear_form(const std::string& s) {
  if (s == "powabs" || s == "PowAbs") return NonlinearForm::PowAbs;
  if (s == "abspow" || s == "AbsPow") return NonlinearForm::AbsPow;
  throw Error(Errc::ConfigError, "unknown nonlinearity form: " + s);
}

const char* nonlinear_form_name(NonlinearForm f) {
  return f == NonlinearForm::PowAbs ? "powabs" : "abspow";
}

cplx nonlinearity_value(cplx v, const Nonlinearity& nl) {
  const double a = std::abs(v);
  if (a == 0.0) return 0.0;
  return nl.form == NonlinearForm::PowAbs ? v * std::pow(a, nl.alpha) : cplx(std::pow(a, 1.0 + nl.alpha));
}

ComplexField apply_nonlinearity(const ComplexField& v, const Nonlinearity& nl) {
  ComplexField out(v.grid);
  for (int i = 0; i < v.size(); ++i) out[i] = nonlinearity_value(v[i], nl);
  return out;
}

namespace {

// |v + dv|^p - |v|^p
double pow_abs_difference(cplx v, cplx dv, double p) {
  const double a2 = std::norm(v);
  if (a2 == 0.0) return std::pow(std::abs(dv), p);
  const double rel = (2.0 * (std::conj(v) * dv).real() + std::norm(dv)) / a2;
  return std::pow(a2, 0.5 * p) * std::expm1(0.5 * p * std::log1p(rel));
}

}  // namespace

ComplexField nonlinearity_difference(const ComplexField& v, const ComplexField& dv, const Nonlinearity& nl) {
  ComplexField out(v.grid);
  for (int i = 0; i < v.size(); ++i) {
    const cplx a = v[i], d = dv[i];
    if (d == 0.0) continue;
    if (nl.form == NonlinearForm::PowAbs)
      out[i] = d * std::pow(std::abs(a + d), nl.alpha) + a * pow_abs_difference(a, d, nl.alpha);
    else
      out[i] = pow_abs_difference(a, d, 1.0 + nl.alpha);
  }
  return out;
}

namespace {

ComplexField random_bumps(const RadialGrid& g, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double lo = g.r_min + 0.3 * g.length(), span = 0.4 * g.length();
  ComplexField f(g);
  for (int b = 0; b < 3; ++b) {
    const double c = lo + span * u01(rng);
    const double w = 0.015 * g.length() * (1.0 + u01(rng));
    const cplx amp = scale * cplx(2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0);
    for (int i = 0; i < g.n; ++i) {
      const double x = (g.r(i) - c) / w;
      f[i] += amp * std::exp(-0.5 * x * x);
    }
  }
  return f;
}

}  // namespace

double lipschitz_sample(const Nonlinearity& nl, const RadialGrid& g, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logs(-2.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const ComplexField v1 = random_bumps(g, rng, std::pow(10.0, logs(rng)));
    const ComplexField v2 = v1 + random_bumps(g, rng, std::pow(10.0, logs(rng) - 1.0));
    const double dv = l2_norm(v1 - v2);
    const double denom = dv * (std::pow(l2_norm(v1), nl.alpha) + std::pow(l2_norm(v2), nl.alpha));
    if (denom == 0.0) continue;
    worst = std::max(worst, l2_norm(apply_nonlinearity(v1, nl) - apply_nonlinearity(v2, nl)) / denom);
  }
  return worst;
}

ComplexField apply_potential(const ComplexField& v, double t, const PotentialModel& pm, const ModelParams& p) {
  ComplexField out(v.grid);
  if (pm.kind == PotentialKind::CustomGrid) {
    if (!(pm.profile.grid == v.grid)) throw Error(Errc::InvalidParams, "potential profile grid mismatch");
    const double f = std::pow(t, -pm.delta);
    for (int i = 0; i < v.size(); ++i) out[i] = f * pm.profile[i] * v[i];
    return out;
  }
  if (p.R_Sch == 0.0 || p.m_c == 0.0) return out;
  if (v.grid.periodic) throw Error(Errc::InvalidParams, "gravitational potential needs a radial grid");
  const double f = -p.m_c * p.m_c * p.R_Sch / (t * t);
  for (int i = 0; i < v.size(); ++i) {
    const double r = v.grid.r(i);
    if (!(r > 0.0)) throw Error(Errc::OutOfDomain, "gravitational potential needs r > 0");
    out[i] = f / r * v[i];
  }
  return out;
}

double estimate_eps_P(const PotentialModel& pm, const ModelParams& p, const RadialGrid& g,
                      const std::vector<double>& times, double s, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const ComplexField v = random_bumps(g, rng, 1.0);
    const double nv = sobolev_norm(v, s);
    for (double t : times)
      worst = std::max(worst, sobolev_norm(apply_potential(v, t, pm, p), s) * std::pow(t, pm.delta) / nv);
  }
  return worst;
}

double id_envelope(double t, const DerivedParams& d, double n0, double n1) {
  const double l = d.ell;
  if (d.regime == MassRegime::LargeMass) {
    const double logpow = d.M_big.value_or(0.0) > 0.0 ? 0.0 : 1.0;
    return std::pow(t, -l) * (n1 * std::pow(t, -0.5 * (l - 1.0)) + n0) * std::pow(1.0 + std::log(t), logpow);
  }
  const double S = d.sqrt_disc.real();
  const double four_m2 = (1.0 - 3.0 * l) * (1.0 - 3.0 * l) - S * S;
  const double f = four_m2 > 4.0 * l * (2.0 * l - 1.0) ? std::pow(t, 0.5 * (l - 1.0) - 0.5 * S) : 1.0;
  const double tk = std::pow(t, d.k_plus.real());
  return tk * (n0 + n1) + std::pow(t, -l) * n0 + tk * n0 * f;
}

namespace {

// Least squares y ~ sum_k beta_k cols[k] by modified Gram-Schmidt; returns the rms residual.
double lstsq(std::vector<std::vector<double>> cols, std::vector<double> y, std::vector<double>& beta) {
  const std::size_t m = cols.size(), n = y.size();
  std::vector<std::vector<double>> R(m, std::vector<double>(m, 0.0));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d += cols[j][i] * cols[k][i];
      R[j][k] = d;
      for (std::size_t i = 0; i < n; ++i) cols[k][i] -= d * cols[j][i];
    }
    double nk = 0.0;
    for (double c : cols[k]) nk += c * c;
    nk = std::sqrt(nk);
    if (!(nk > 1e-12)) throw Error(Errc::DegenerateSeries, "collinear regression columns");
    R[k][k] = nk;
    for (double& c : cols[k]) c /= nk;
  }
  std::vector<double> qy(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) qy[k] += cols[k][i] * y[i];
    for (std::size_t i = 0; i < n; ++i) y[i] -= qy[k] * cols[k][i];
  }
  beta.assign(m, 0.0);
  for (std::size_t k = m; k-- > 0;) {
    double acc = qy[k];
    for (std::size_t j = k + 1; j < m; ++j) acc -= R[k][j] * beta[j];
    beta[k] = acc / R[k][k];
  }
  double res = 0.0;
  for (double r : y) res += r * r;
  return std::sqrt(res / n);
}

}  // namespace

DecayReport decay_fit(const std::vector<double>& t, const std::vector<double>& norm) {
  if (t.size() != norm.size()) throw Error(Errc::DegenerateSeries, "length mismatch");
  if (t.size() < 10) throw Error(Errc::DegenerateSeries, "fewer than 10 samples");
  const auto [tmin, tmax] = std::minmax_element(t.begin(), t.end());
  if (!(*tmin >= 1.0) || *tmax < 10.0 * *tmin * (1.0 - 1e-12))
    throw Error(Errc::DegenerateSeries, "samples must span a decade in t >= 1");
  const std::size_t n = t.size();
  std::vector<double> one(n, 1.0), lt(n), llt(n), tt(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(norm[i] > 0.0) || !std::isfinite(norm[i])) throw Error(Errc::DegenerateSeries, "non-positive norm");
    lt[i] = std::log(t[i]);
    llt[i] = std::log1p(lt[i]);
    tt[i] = t[i];
    y[i] = std::log(norm[i]);
  }
  DecayReport rep;
  rep.samples = static_cast<int>(n);
  std::vector<double> beta;
  rep.residual = lstsq({one, lt}, y, beta);
  rep.gamma_plain = -beta[1];
  rep.residual_log = lstsq({one, lt, llt}, y, beta);
  const double gamma_log = -beta[1];
  rep.log_beta = beta[2];
  rep.residual_exp = lstsq({one, tt}, y, beta);
  rep.gamma_exp = -beta[1];
  rep.log_flag = rep.residual > 1e-8 && rep.residual_log < 0.1 * rep.residual && std::abs(rep.log_beta) > 0.1;
  rep.gamma_fit = rep.log_flag ? gamma_log : rep.gamma_plain;
  return rep;
}

namespace {

// Cubic Lagrange interpolation in ln t on the sample times.
ComplexField interp_log(const std::vector<double>& times, const std::vector<ComplexField>& vals, double b) {
  const int N = static_cast<int>(times.size());
  int i = static_cast<int>(std::upper_bound(times.begin(), times.end(), b) - times.begin());
  int lo = std::clamp(i - 2, 0, std::max(0, N - 4));
  const int hi = std::min(N, lo + 4);
  const double x = std::log(b);
  ComplexField out(vals[0].grid);
  for (int a = lo; a < hi; ++a) {
    double w = 1.0;
    const double xa = std::log(times[a]);
    for (int c = lo; c < hi; ++c)
      if (c != a) w *= (x - std::log(times[c])) / (xa - std::log(times[c]));
    if (w == 0.0) continue;
    for (int k = 0; k < out.size(); ++k) out[k] += w * vals[a][k];
  }
  return out;
}

double weighted_sup(const std::vector<double>& times, const std::vector<ComplexField>& f, double gamma,
                    double s) {
  double sup = 0.0;
  for (std::size_t j = 0; j < times.size(); ++j)
    sup = std::max(sup, std::pow(times[j], gamma) * sobolev_norm(f[j], s));
  return sup;
}

struct PlanEntry {
  std::size_t b;
  std::vector<double> s;
  std::vector<cplx> c;
};

}  // namespace

PicardResult picard_solve(const ComplexField& psi0, const ComplexField& psi1, const PotentialModel& pm,
                          const Nonlinearity& nl, double gamma, const ModelParams& p, const Propagator& prop,
                          const PicardOptions& opt) {
  p.validate();
  if (!(opt.T_max > 1.0) || opt.n_samples < 2 || !(opt.tol > 0.0))
    throw Error(Errc::InvalidParams, "invalid Picard options");
  const DerivedParams d = derive(p);
  PicardResult res;
  FixedPointReport& rep = res.report;
  rep.gamma_used = gamma;
  try {
    rep.range = admissible_gamma(d, nl.alpha, pm.delta, p);
  } catch (const Error& e) {
    if (e.code() != Errc::EmptyRange) throw;
    throw Error(Errc::NoContraction, std::string("no admissible decay rate: ") + e.what());
  }
  if (!rep.range.contains(gamma)) throw Error(Errc::NoContraction, "gamma outside the admissible range");

  const Liouville L = liouville(d);
  const RadialGrid& grid = prop.grid();
  const int n = grid.n;
  std::vector<double> sqrtF(n, 1.0), pre(n, 1.0);
  if (!grid.periodic)
    for (int i = 0; i < n; ++i) {
      const double F = aux_F(grid.r(i), p.R_Sch, pm.eps);
      sqrtF[i] = std::sqrt(F);
      pre[i] = p.c * p.c * F;
    }
  const bool has_potential = pm.kind == PotentialKind::CustomGrid || (p.R_Sch > 0.0 && p.m_c > 0.0);

  ComplexField u0(grid), u1(grid);
  for (int i = 0; i < n; ++i) {
    u0[i] = psi0[i] / sqrtF[i];
    u1[i] = (psi1[i] - L.k * psi0[i]) / sqrtF[i];
  }
  rep.data_size = sobolev_norm(psi0, opt.s) + sobolev_norm(psi1, opt.s);

  const std::vector<double> times = logspace(1.0, opt.T_max, opt.n_samples);
  const std::size_t N = times.size();
  std::vector<double> bnode, bweight;
  std::vector<std::size_t> panel_end;  // b-nodes of panels 1..j are [0, panel_end[j])
  panel_end.push_back(0);
  for (std::size_t i = 1; i < N; ++i) {
    const Rule q = composite_rule({times[i - 1], times[i]}, opt.b_order);
    bnode.insert(bnode.end(), q.x.begin(), q.x.end());
    bweight.insert(bweight.end(), q.w.begin(), q.w.end());
    panel_end.push_back(bnode.size());
  }
  const std::size_t nb = bnode.size();

  TransformOptions topt;
  topt.jobs = 1;
  auto psi_id_at = [&](double t) {
    return psi_from_u(data_solution(u0, u1, L, prop, t, topt), t, L, p, pm.eps);
  };
  std::vector<ComplexField> id_t(N), id_b(nb);
  parallel_for(N + nb, [&](std::size_t i) {
    if (i < N) id_t[i] = psi_id_at(times[i]);
    else id_b[i - N] = psi_id_at(bnode[i - N]);
  }, opt.jobs);

  std::vector<std::vector<PlanEntry>> plan(N);
  parallel_for(N, [&](std::size_t j) {
    for (std::size_t b = 0; b < panel_end[j]; ++b) {
      const RRule rr = r_rule(times[j], bnode[b], p.ell, opt.r_panels, opt.r_order);
      PlanEntry e{b, rr.r, std::vector<cplx>(rr.r.size())};
      const cplx wb = bweight[b] * std::exp(-L.k * std::log(bnode[b]));
      for (std::size_t k = 0; k < rr.r.size(); ++k) e.c[k] = wb * rr.w[k] * kernel_E(rr.r[k], times[j], bnode[b], L);
      plan[j].push_back(std::move(e));
    }
  }, opt.jobs);

  // G applied to a physical source given at the b-nodes, evaluated at the sample times.
  auto G = [&](std::vector<ComplexField> src) {
    for (auto& f : src)
      for (int i = 0; i < n; ++i) f[i] /= sqrtF[i];
    std::vector<ComplexField> out(N, ComplexField(grid));
    parallel_for(N, [&](std::size_t j) {
      if (plan[j].empty()) return;
      std::vector<SuperposeTerm> terms(plan[j].size());
      for (std::size_t e = 0; e < plan[j].size(); ++e) terms[e] = {&src[plan[j][e].b], plan[j][e].s, plan[j][e].c};
      ComplexField v = prop.superpose_sum(terms);
      const cplx tk = std::exp(L.k * std::log(times[j]));
      for (int i = 0; i < n; ++i) v[i] *= tk * sqrtF[i];
      out[j] = std::move(v);
    }, opt.jobs);
    return out;
  };
  auto source_of = [&](const std::vector<ComplexField>& phi_b, const std::vector<ComplexField>* dphi_b) {
    std::vector<ComplexField> src(nb);
    parallel_for(nb, [&](std::size_t b) {
      ComplexField f = dphi_b ? nonlinearity_difference(phi_b[b], (*dphi_b)[b], nl) : apply_nonlinearity(phi_b[b], nl);
      for (int i = 0; i < n; ++i) f[i] *= pre[i];
      if (has_potential) f += apply_potential(dphi_b ? (*dphi_b)[b] : phi_b[b], bnode[b], pm, p);
      src[b] = std::move(f);
    }, opt.jobs);
    return src;
  };
  auto to_bnodes = [&](const std::vector<ComplexField>& vals) {
    std::vector<ComplexField> out(nb);
    parallel_for(nb, [&](std::size_t b) { out[b] = interp_log(times, vals, bnode[b]); }, opt.jobs);
    return out;
  };

  rep.id_norm = weighted_sup(times, id_t, gamma, opt.s);
  std::vector<ComplexField> phi_t = id_t, phi_b = id_b;
  std::vector<ComplexField> delta_t = G(source_of(phi_b, nullptr));
  int above_one = 0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const double dn = weighted_sup(times, delta_t, gamma, opt.s);
    if (!rep.diff_norms.empty() && rep.diff_norms.back() > 0.0) {
      const double ratio = dn / rep.diff_norms.back();
      rep.ratios.push_back(ratio);
      above_one = ratio >= 1.0 ? above_one + 1 : 0;
      if (above_one >= 3) throw Error(Errc::NoContraction, "difference norms grew for 3 consecutive iterations");
    }
    rep.diff_norms.push_back(dn);
    rep.iterations = it + 1;
    const std::vector<ComplexField> delta_b = to_bnodes(delta_t);
    std::vector<ComplexField> next = G(source_of(phi_b, &delta_b));
    for (std::size_t j = 0; j < N; ++j) phi_t[j] += delta_t[j];
    for (std::size_t b = 0; b < nb; ++b) phi_b[b] += delta_b[b];
    delta_t = std::move(next);
    if (dn <= opt.tol) {
      rep.converged = true;
      break;
    }
  }
  rep.fixed_point_residual = weighted_sup(times, delta_t, gamma, opt.s);
  rep.contraction_ratio = rep.ratios.empty() ? 0.0 : *std::max_element(rep.ratios.begin(), rep.ratios.end());
  rep.radius_R = weighted_sup(times, phi_t, gamma, opt.s);

  for (std::size_t j = 0; j < N; ++j) {
    res.norms.push_back(sobolev_norm(phi_t[j], opt.s));
    res.psi.push(times[j], phi_t[j]);
  }
  // Fit window starts at the last sample not above fit_t_min.
  std::size_t first = 0;
  for (std::size_t j = 0; j < N; ++j)
    if (times[j] <= opt.fit_t_min * (1.0 + 1e-12)) first = j;
  std::vector<double> ft, fn;
  for (std::size_t j = first; j < N; ++j) {
    ft.push_back(times[j]);
    fn.push_back(res.norms[j]);
  }
  if (ft.size() >= 10 && ft.back() >= 10.0 * ft.front() * (1.0 - 1e-12) &&
      std::all_of(fn.begin(), fn.end(), [](double v) { return v > 0.0; }))
    res.decay = decay_fit(ft, fn);
  return res;
}

std::string to_keyvalue(const FixedPointReport& r) {
  std::ostringstream os;
  os << "iterations=" << r.iterations << "\n"
     << "converged=" << (r.converged ? "true" : "false") << "\n"
     << "contraction_ratio=" << fmt17(r.contraction_ratio) << "\n"
     << "gamma_used=" << fmt17(r.gamma_used) << "\n"
     << "radius_R=" << fmt17(r.radius_R) << "\n"
     << "data_size=" << fmt17(r.data_size) << "\n"
     << "id_norm=" << fmt17(r.id_norm) << "\n"
     << "fixed_point_residual=" << fmt17(r.fixed_point_residual) << "\n"
     << "gamma_lower=" << fmt17(r.range.lower) << "\n"
     << "gamma_upper=" << fmt17(r.range.upper) << "\n"
     << "theorem_case=" << r.range.theorem_case << "\n";
  for (std::size_t i = 0; i < r.diff_norms.size(); ++i) os << "diff_norm_" << i << "=" << fmt17(r.diff_norms[i]) << "\n";
  return os.str();
}

std::string to_keyvalue(const DecayReport& r) {
  std::ostringstream os;
  os << "gamma_fit=" << fmt17(r.gamma_fit) << "\n"
     << "gamma_plain=" << fmt17(r.gamma_plain) << "\n"
     << "log_beta=" << fmt17(r.log_beta) << "\n"
     << "log_flag=" << (r.log_flag ? "true" : "false") << "\n"
     << "residual=" << fmt17(r.residual) << "\n"
     << "residual_log=" << fmt17(r.residual_log) << "\n"
     << "gamma_exp=" << fmt17(r.gamma_exp) << "\n"
     << "residual_exp=" << fmt17(r.residual_exp) << "\n"
     << "samples=" << r.samples << "\n";
  return os.str();
}

}  // namespace kgbh
