// One PASS/FAIL line per acceptance criterion. Usage: acceptance [out_dir]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "kgbh/errors.hpp"
#include "kgbh/geodesy.hpp"
#include "kgbh/harness.hpp"
#include "kgbh/kernels.hpp"
#include "kgbh/wavesolver.hpp"

using namespace kgbh;

namespace {

std::string g_out = "acceptance_out";
const double kPi = std::acos(-1.0);

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

ExperimentConfig config(std::map<std::string, std::string> kv) {
  kv.emplace("out_dir", g_out);
  return make_config(kv);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome c1() {
  const SuiteResult r = run_suite(config({{"suite", "specfun_checks"}, {"name", "c1_specfun"}}));
  return {r.pass, "contiguous=" + num(r.metrics.at("max_contiguous_residual")) +
                      " closed_form=" + num(r.metrics.at("max_closed_form_error"))};
}

Outcome c2() {
  double worst = 0.0;
  for (double z : {1.5, 2.0, 10.0, 100.0})
    for (double re : {0.2, 0.5, 0.8})
      for (double im : {0.0, 1.0}) {
        const cplx s(re, im);
        const cplx q = power_integral_quadrature(z, s), c = power_integral_closed_form(z, s);
        worst = std::max(worst, std::abs(q - c) / std::abs(c));
      }
  return {worst <= 1e-8, "max_rel=" + num(worst)};
}

Outcome c3() {
  double worst = 0.0;
  for (double m : {2.0, std::sqrt(29.0) / 2.0}) {
    ModelParams p;
    p.m_c = m;
    const Liouville L = liouville(derive(p));
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      const double t = 1.001 + 60.0 * U(rng);
      const double r = 0.999 * U(rng) * (phi(t, p.ell) - phi(1.0, p.ell));
      const cplx k2 = kernel_K2(r, t, L);
      const cplx rhs = kernel_K0(r, t, L) + 2.0 * L.q * kernel_K1(r, t, L);
      worst = std::max(worst, std::abs(k2 - rhs) / std::abs(k2));
    }
  }
  return {worst <= 1e-9, "max_rel=" + num(worst)};
}

Outcome c4() {
  struct Case {
    const char* label;
    std::string m_c;
  };
  const Case cases[] = {{"M0", "2.5"}, {"M1", "2.6925824035672520"}, {"small_m2", "2"}};
  Outcome o{true, ""};
  for (const auto& c : cases) {
    const SuiteResult r =
        run_suite(config({{"suite", "kernel_bounds"}, {"m_c", c.m_c}, {"name", std::string("c4_") + c.label}}));
    o.pass = o.pass && r.pass;
    o.detail += std::string(c.label) + "[";
    for (const char* k : {"E", "K1", "K2"}) o.detail += std::string(k) + "=" + num(r.metrics.at(std::string("slope_") + k)) + " ";
    o.detail.back() = ']';
    o.detail += " ";
  }
  o.detail += "(slope_tol=0.02)";
  return o;
}

Outcome c5() {
  const SuiteResult r =
      run_suite(config({{"suite", "geodesic_table"}, {"r_sch", "1"}, {"r_id", "3"}, {"name", "c5_geodesic"}}));
  ModelParams p;
  p.R_Sch = 1.0;
  p.R_ID = 3.0;
  // independent bisection on z - ln(1 - z/2) = 1
  double lo = 0.0, hi = 2.0 - 1e-15;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid - std::log(1.0 - mid / 2.0) - 1.0 < 0.0 ? lo : hi) = mid;
  }
  const double oracle = 3.0 - 0.5 * (lo + hi) - 1.0;
  const double diff = std::abs(min_clearance(p) - oracle);
  return {r.pass && diff <= 1e-10, "r1_err=" + num(r.metrics.at("r_at_1_error")) + " max_residual=" +
                                       num(r.metrics.at("max_residual")) + " clearance_vs_bisection=" + num(diff)};
}

Outcome c6() {
  const SuiteResult r = run_suite(config({{"suite", "transform_verify"}, {"m_c", "2"}, {"name", "c6_transform"}}));
  return {r.pass, "max_l2_diff=" + num(r.metrics.at("max_l2_diff")) + " refinement=[" +
                      num(r.metrics.at("refinement_ratio_min")) + "," + num(r.metrics.at("refinement_ratio_max")) +
                      "] repro=" + num(r.metrics.at("repro_error"))};
}

Outcome c7() {
  const RadialGrid g = make_periodic_grid(0.0, 2.0 * kPi, 2048);
  const PeriodicOperator op(g, 4);
  const ComplexField f = sample_field(g, [](double x) { return cplx(std::sin(x)); });
  EvolveOptions eo;
  eo.sample_times = {2.0 * kPi};
  const Trajectory tr = evolve(op, f, ComplexField(g), 2.0 * kPi, eo);
  double wave_err = 0.0;
  for (int i = 0; i < g.n; ++i) wave_err = std::max(wave_err, std::abs(tr.fields.back()[i] - f[i]));
  const ModelParams flat;
  const double e0 = energy(f, ComplexField(g), flat);
  const double drift = std::abs(energy(tr.fields.back(), tr.rates.back(), flat) - e0) / e0 / (2.0 * kPi);

  ModelParams bh;
  bh.R_Sch = 1.0;
  bool sym_ok = true;
  std::string sym;
  for (int n : {201, 401, 801}) {
    const RadialGrid rg = make_radial_grid(2.0, 8.0, n);
    const ComplexField u = sample_field(rg, [](double r) { return cplx(std::exp(-4 * (r - 4.5) * (r - 4.5))); });
    const ComplexField w = sample_field(
        rg, [](double r) { return cplx(std::exp(-3 * (r - 5) * (r - 5)), 0.3 * std::exp(-5 * (r - 4) * (r - 4))); });
    const cplx a = weighted_inner(apply_A32_radial(u, bh), w), b = weighted_inner(u, apply_A32_radial(w, bh));
    const double res = std::abs(a - b) / std::abs(a);
    sym_ok = sym_ok && res <= rg.h() * rg.h();
    sym += num(res) + (n == 801 ? "" : ",");
  }
  return {wave_err <= 1e-6 && drift <= 1e-6 && sym_ok,
          "wave_err=" + num(wave_err) + " drift_per_time=" + num(drift) + " a32_sym=[" + sym + "] (bound h^2)"};
}

Outcome c8() {
  const SuiteResult a = run_suite(config({{"suite", "linear_decay"}, {"m_c", "2.6925824035672520"}, {"name", "c8_M1"}}));
  const SuiteResult b = run_suite(config({{"suite", "linear_decay"}, {"m_c", "2"}, {"name", "c8_small"}}));
  return {a.pass && b.pass, "slope_M1=" + num(a.metrics.at("slope")) + " slope_small=" + num(b.metrics.at("slope"))};
}

Outcome c9() {
  const SuiteResult r = run_suite(config({{"suite", "semilinear_decay"}, {"m_c", "2"}, {"name", "c9_semilinear"}}));
  const auto& m = r.metrics;
  return {r.pass, "iterations=" + num(m.at("iterations")) + " ratio=" + num(m.at("contraction_ratio")) +
                      " factor=" + num(m.at("ratio_factor")) + " gamma_fit=" + num(m.at("gamma_fit")) + " range=(" +
                      num(m.at("gamma_lower")) + "," + num(m.at("gamma_upper")) + "]"};
}

Outcome c10() {
  bool same = true;
  int files = 0;
  for (const char* suite : {"geodesic_table", "specfun_checks", "linear_decay", "semilinear_decay"}) {
    std::string text[2];
    for (int k = 0; k < 2; ++k) {
      const std::string dir = g_out + "/c10_run" + std::to_string(k);
      ExperimentConfig c = config({{"suite", suite}, {"m_c", "2"}, {"out_dir", dir}});
      if (std::string(suite) == "geodesic_table") c.model.R_Sch = 1.0;
      c.out_dir = dir;
      const SuiteResult r = run_suite(c, k == 0 ? 1 : 4);
      for (const std::string& a : r.artifacts) text[k] += slurp(a) + "\x1f";
      if (k == 0) files += static_cast<int>(r.artifacts.size());
    }
    same = same && text[0] == text[1] && !text[0].empty();
  }
  return {same, "files_compared=" + std::to_string(files) + " (jobs 1 vs 4)"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_out = argv[1];
  std::filesystem::create_directories(g_out);
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {1, "special functions", 10, c1},          {2, "power integral oracle", 30, c2},
      {3, "kernel identity", 0, c3},             {4, "bound conformance", 300, c4},
      {5, "geodesic", 0, c5},                    {6, "representation vs direct solve", 120, c6},
      {7, "wave solver", 0, c7},                 {8, "linear decay", 0, c8},
      {9, "semilinear fixed point", 600, c9},    {10, "determinism", 0, c10},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string("error ") + errc_name(e.code()) + ": " + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && sec > c.budget_s) {
      o.pass = false;
      o.detail += " over budget " + num(c.budget_s) + " s";
    }
    std::printf("C%-2d %s  %-32s %s  [%.2f s]\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), sec);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
