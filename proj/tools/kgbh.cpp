#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgbh/errors.hpp"
#include "kgbh/format.hpp"
#include "kgbh/geodesy.hpp"
#include "kgbh/harness.hpp"
#include "kgbh/kernels.hpp"
#include "kgbh/parallel.hpp"
#include "kgbh/quadrature.hpp"
#include "kgbh/semilinear.hpp"
#include "kgbh/specfun.hpp"
#include "kgbh/transform.hpp"

using namespace kgbh;

namespace {

struct Common {
  std::string config;
  std::vector<std::string> sets;
  std::string out_dir;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "key=value configuration file");
  app->add_option("--set", c.sets, "override key=value (repeatable)");
  app->add_option("--out", c.out_dir, "output directory for CSV and plot files");
}

ExperimentConfig build_config(const Common& c, Suite suite) {
  std::map<std::string, std::string> kv;
  if (!c.config.empty()) kv = load_keyvalue_file(c.config);
  if (!kv.count("suite")) kv["suite"] = suite_name(suite);
  for (const auto& s : c.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(Errc::ConfigError, "--set expects key=value: " + s);
    kv[s.substr(0, eq)] = s.substr(eq + 1);
  }
  if (!c.out_dir.empty()) kv["out_dir"] = c.out_dir;
  return make_config(kv);
}

ModelParams model_from(const Common& c) {
  std::map<std::string, std::string> kv;
  if (!c.config.empty()) kv = load_keyvalue_file(c.config);
  ExperimentConfig cfg;
  for (const auto& [k, v] : kv)
    if (k == "ell" || k == "m_c" || k == "r_sch" || k == "r_id" || k == "alpha_acc" || k == "c") set_config_value(cfg, k, v);
  for (const auto& s : c.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(Errc::ConfigError, "--set expects key=value: " + s);
    set_config_value(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  cfg.model.validate();
  return cfg.model;
}

cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return std::stod(s);
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

int report_suite(const SuiteResult& r) {
  std::cout << to_keyvalue(r);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon kernels, integral transforms and fixed-point solver in an expanding black hole space-time"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs,-j", jobs, "worker threads (0: KGBH_JOBS or 1)")->envname("KGBH_JOBS");

  // hyp2f1
  auto* hyp = app.add_subcommand("hyp2f1", "Gauss hypergeometric function F(a, b; c; z) for real z < 1");
  std::string ha, hb, hc;
  double hz = 0.0;
  hyp->add_option("--a", ha, "a as re or re,im")->required();
  hyp->add_option("--b", hb, "b as re or re,im")->required();
  hyp->add_option("--c", hc, "c as re or re,im")->required();
  hyp->add_option("--z", hz, "argument")->required();

  // geodesic
  Common geo_c;
  auto* geo = app.add_subcommand("geodesic", "Radial null geodesic table r(t) and minimal clearance");
  add_common(geo, geo_c);
  double geo_tmax = 1e4;
  int geo_n = 41;
  geo->add_option("--t-max", geo_tmax, "largest time");
  geo->add_option("--n", geo_n, "number of log-spaced times");

  // kernels
  Common ker_c;
  auto* ker = app.add_subcommand("kernels", "Kernel values and integral bounds");
  ker->require_subcommand(1);
  auto* ker_eval = ker->add_subcommand("eval", "CSV t,b,r,value_re,value_im");
  auto* ker_bounds = ker->add_subcommand("bounds", "CSV t,b,integral,envelope,ratio");
  std::string kind = "E", b_mode = "one";
  double kt = 2.0, kb = 1.0, tmax = 1e4;
  int nr = 11, nt = 41;
  for (auto* sc : {ker_eval, ker_bounds}) {
    add_common(sc, ker_c);
    sc->add_option("--kind", kind, "E, K0, K1, K2 (eval) or E, K1, K2 (bounds)");
  }
  ker_eval->add_option("--t", kt, "time");
  ker_eval->add_option("--b", kb, "source time for E");
  ker_eval->add_option("--nr", nr, "number of r points in [0, phi(t) - phi(b))");
  ker_bounds->add_option("--t-max", tmax, "largest time");
  ker_bounds->add_option("--n", nt, "number of log-spaced times");
  ker_bounds->add_option("--b-mode", b_mode, "one or sqrt (E only)");

  // linear-solve
  Common lin_c;
  auto* lin = app.add_subcommand("linear-solve", "Data-only EPD solution on a flat periodic grid; CSV x,re,im");
  add_common(lin, lin_c);
  double lin_t = 2.0, lin_half = 8.0, lin_width = 0.5;
  int lin_n = 256;
  bool lin_direct = false;
  lin->add_option("--t", lin_t, "time");
  lin->add_option("--n", lin_n, "grid nodes");
  lin->add_option("--x-half", lin_half, "half width of the periodic window");
  lin->add_option("--width", lin_width, "Gaussian width of u0");
  lin->add_flag("--direct", lin_direct, "also print the direct method-of-lines solution");

  Common tv_c, dl_c, sl_c, su_c, sw_c;
  auto* tv = app.add_subcommand("transform-verify", "Representation against the direct EPD solve");
  add_common(tv, tv_c);
  auto* dl = app.add_subcommand("decay-linear", "Decay of the data-only solution against its envelope");
  add_common(dl, dl_c);
  auto* sl = app.add_subcommand("semilinear", "Picard fixed point of the semilinear equation");
  add_common(sl, sl_c);
  auto* su = app.add_subcommand("suite", "Run the suite named in the configuration");
  add_common(su, su_c);
  auto* sw = app.add_subcommand("sweep", "Run a suite over a list of values of one key");
  add_common(sw, sw_c);
  std::string axis;
  std::vector<std::string> values;
  sw->add_option("--axis", axis, "model or suite key")->required();
  sw->add_option("--values", values, "values")->delimiter(',')->required();

  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) set_jobs(jobs);

  try {
    if (*hyp) {
      const cplx v = hyp2f1(parse_complex(ha), parse_complex(hb), parse_complex(hc), hz);
      std::cout << "value_re=" << fmt17(v.real()) << "\nvalue_im=" << fmt17(v.imag()) << "\n";
      return 0;
    }
    if (*geo) {
      const ModelParams p = model_from(geo_c);
      std::cout << "t,r,clearance,residual\n";
      for (double t : logspace(1.0, geo_tmax, geo_n)) {
        const GeodesicState g = radial_geodesic(t, p);
        std::cout << fmt17(t) << "," << fmt17(g.r) << "," << fmt17(g.clearance) << "," << fmt17(g.residual) << "\n";
      }
      std::cerr << "min_clearance=" << fmt17(min_clearance(p)) << "\n";
      return 0;
    }
    if (*ker_eval) {
      const ModelParams p = model_from(ker_c);
      const DerivedParams d = derive(p);
      const Liouville L = liouville(d);
      const double b = kind == "E" ? kb : 1.0;
      const double D = phi(kt, p.ell) - phi(b, p.ell);
      std::cout << "t,b,r,value_re,value_im\n";
      for (int i = 0; i < nr; ++i) {
        const double r = D * i / nr;
        cplx v;
        if (kind == "E") v = kernel_E(r, kt, b, L);
        else if (kind == "K0") v = kernel_K0(r, kt, L);
        else if (kind == "K1") v = kernel_K1(r, kt, L);
        else if (kind == "K2") v = kernel_K2(r, kt, L);
        else throw Error(Errc::ConfigError, "unknown kernel: " + kind);
        std::cout << fmt17(kt) << "," << fmt17(b) << "," << fmt17(r) << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
      }
      return 0;
    }
    if (*ker_bounds) {
      const ModelParams p = model_from(ker_c);
      const DerivedParams d = derive(p);
      KernelKind k;
      if (kind == "E") k = KernelKind::E;
      else if (kind == "K1") k = KernelKind::K1;
      else if (kind == "K2") k = KernelKind::K2;
      else throw Error(Errc::ConfigError, "bounds kernel must be E, K1 or K2");
      const auto s = bound_sweep(k, d, logspace(1.0, tmax, nt), b_mode == "sqrt" ? SourceTime::Sqrt : SourceTime::One);
      std::cout << "t,b,integral,envelope,ratio\n";
      for (const auto& x : s)
        std::cout << fmt17(x.t) << "," << fmt17(x.b) << "," << fmt17(x.integral) << "," << fmt17(x.envelope) << ","
                  << fmt17(x.ratio) << "\n";
      std::cerr << "slope=" << fmt17(log_log_slope(s, 10.0)) << "\n";
      return 0;
    }
    if (*lin) {
      const ModelParams p = model_from(lin_c);
      const Liouville L = liouville(derive(p));
      const RadialGrid g = make_periodic_grid(-lin_half, lin_half, lin_n);
      const ComplexField u0 = make_profile(g, Profile::Gaussian, 0.0, lin_width, 1.0);
      const SpectralPropagator prop(g);
      const EPDProblem prob{u0, ComplexField(g), {}, false, L};
      TransformOptions topt;
      topt.jobs = jobs;
      const ComplexField u = linear_solution(prob, prop, lin_t, topt);
      ComplexField ud;
      if (lin_direct) ud = epd_direct_solve(prob, PeriodicOperator(g, 2), lin_t, {lin_t}).fields.back();
      std::cout << (lin_direct ? "x,re,im,direct_re,direct_im\n" : "x,re,im\n");
      for (int i = 0; i < g.n; ++i) {
        std::cout << fmt17(g.r(i)) << "," << fmt17(u[i].real()) << "," << fmt17(u[i].imag());
        if (lin_direct) std::cout << "," << fmt17(ud[i].real()) << "," << fmt17(ud[i].imag());
        std::cout << "\n";
      }
      return 0;
    }
    if (*tv) return report_suite(run_suite(build_config(tv_c, Suite::TransformVerify), jobs));
    if (*dl) return report_suite(run_suite(build_config(dl_c, Suite::LinearDecay), jobs));
    if (*sl) return report_suite(run_suite(build_config(sl_c, Suite::SemilinearDecay), jobs));
    if (*su) {
      if (su_c.config.empty() && su_c.sets.empty()) throw Error(Errc::ConfigError, "suite needs --config or --set suite=...");
      return report_suite(run_suite(build_config(su_c, Suite::SpecfunChecks), jobs));
    }
    if (*sw) {
      const ExperimentConfig cfg = build_config(sw_c, Suite::SpecfunChecks);
      const auto results = sweep(cfg, axis, values, jobs);
      std::cout << "index," << axis << ",regime,pass,error\n";
      bool all = true;
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto reg = results[i].info.find("regime");
        std::cout << i << "," << values[i] << "," << (reg == results[i].info.end() ? "" : reg->second) << ","
                  << (results[i].pass ? 1 : 0) << "," << results[i].error << "\n";
        all = all && results[i].pass;
      }
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
