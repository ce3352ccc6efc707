#include "kgbh/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "kgbh/errors.hpp"
#include "kgbh/format.hpp"
#include "kgbh/geodesy.hpp"
#include "kgbh/kernels.hpp"
#include "kgbh/parallel.hpp"
#include "kgbh/quadrature.hpp"
#include "kgbh/semilinear.hpp"
#include "kgbh/specfun.hpp"
#include "kgbh/transform.hpp"
#include "kgbh/wavesolver.hpp"

namespace kgbh {

namespace {

const std::pair<Suite, const char*> kSuiteNames[] = {
    {Suite::KernelBounds, "kernel_bounds"},     {Suite::TransformVerify, "transform_verify"},
    {Suite::LinearDecay, "linear_decay"},       {Suite::SemilinearDecay, "semilinear_decay"},
    {Suite::GeodesicTable, "geodesic_table"},   {Suite::SpecfunChecks, "specfun_checks"},
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (trim(v.substr(pos)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw Error(Errc::ConfigError, "not a number for " + key + ": " + v);
}

const std::vector<std::string> kModelKeys = {"ell", "m_c", "r_sch", "r_id", "alpha_acc", "c"};

}  // namespace

Suite parse_suite(const std::string& s) {
  for (const auto& [suite, name] : kSuiteNames)
    if (s == name) return suite;
  static const std::pair<const char*, Suite> alt[] = {
      {"KernelBounds", Suite::KernelBounds},       {"TransformVerify", Suite::TransformVerify},
      {"LinearDecay", Suite::LinearDecay},         {"SemilinearDecay", Suite::SemilinearDecay},
      {"GeodesicTable", Suite::GeodesicTable},     {"SpecfunChecks", Suite::SpecfunChecks},
  };
  for (const auto& [name, suite] : alt)
    if (s == name) return suite;
  throw Error(Errc::ConfigError, "unknown suite: " + s);
}

const char* suite_name(Suite s) {
  for (const auto& [suite, name] : kSuiteNames)
    if (suite == s) return name;
  return "unknown";
}

std::map<std::string, std::string> parse_keyvalue(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ConfigError, "line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw Error(Errc::ConfigError, "line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::map<std::string, std::string> load_keyvalue_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_keyvalue(ss.str());
}

const std::map<std::string, std::string>& suite_defaults(Suite s) {
  static const std::map<Suite, std::map<std::string, std::string>> defaults = {
      {Suite::SpecfunChecks,
       {{"samples", "1000"}, {"seed", "1"}, {"m_max", "3"}, {"z_min", "0.01"}, {"z_max", "0.95"},
        {"contiguous_tol", "1e-9"}, {"closed_form_tol", "1e-10"}, {"n_closed", "95"}}},
      {Suite::KernelBounds,
       {{"t_max", "1e4"}, {"n_t", "41"}, {"t_fit_min", "10"}, {"slope_tol", "0.02"}, {"kernels", "E,K1,K2"},
        {"b_mode", "one"}}},
      {Suite::TransformVerify,
       {{"n", "256"}, {"levels", "2"}, {"x_half", "8"}, {"width", "0.5"}, {"times", "1.5,2,4"},
        {"diff_tol", "1e-3"}, {"ratio_lo", "3.5"}, {"ratio_hi", "4.5"}, {"repro_tol", "1e-6"},
        {"repro_dt", "1e-8"}, {"residual_delta", "1e-3"}}},
      {Suite::LinearDecay,
       {{"n", "256"}, {"x_half", "8"}, {"width", "0.5"}, {"t_min", "10"}, {"t_max", "100"}, {"n_t", "21"},
        {"s", "2"}, {"slope_tol", "0.05"}}},
      {Suite::SemilinearDecay,
       {{"n", "256"}, {"x_half", "8"}, {"width", "0.5"}, {"alpha", "3"}, {"form", "powabs"}, {"gamma", "0.9"},
        {"scale", "1e-3"}, {"t_max", "100"}, {"n_samples", "64"}, {"tol_rel", "1e-12"}, {"max_iter", "50"},
        {"iter_limit", "10"}, {"s", "2"}, {"delta", "2"}, {"gamma_slack", "0.15"}, {"factor_slack", "1.5"}}},
      {Suite::GeodesicTable, {{"t_max", "1e4"}, {"n_t", "41"}, {"residual_tol", "1e-12"}}},
  };
  return defaults.at(s);
}

double ExperimentConfig::get(const std::string& key) const { return to_double(key, get_string(key)); }

std::string ExperimentConfig::get_string(const std::string& key) const {
  const auto it = options.find(key);
  if (it != options.end()) return it->second;
  const auto& def = suite_defaults(suite);
  const auto d = def.find(key);
  if (d == def.end()) throw Error(Errc::ConfigError, "unknown option for " + std::string(suite_name(suite)) + ": " + key);
  return d->second;
}

std::vector<double> ExperimentConfig::get_list(const std::string& key) const {
  std::vector<double> out;
  std::istringstream in(get_string(key));
  std::string item;
  while (std::getline(in, item, ','))
    if (!trim(item).empty()) out.push_back(to_double(key, trim(item)));
  return out;
}

std::string ExperimentConfig::stem() const { return name.empty() ? suite_name(suite) : name; }

void ExperimentConfig::validate() const {
  const auto& def = suite_defaults(suite);
  for (const auto& [k, v] : options) {
    if (!def.count(k)) throw Error(Errc::ConfigError, "unknown option for " + std::string(suite_name(suite)) + ": " + k);
    if (k == "kernels" || k == "b_mode" || k == "form" || k == "times") continue;
    const double x = to_double(k, v);
    if ((k.find("tol") != std::string::npos || k.find("slack") != std::string::npos) && !(x > 0.0))
      throw Error(Errc::ConfigError, "tolerance must be positive: " + k);
  }
  try {
    model.validate();
  } catch (const Error& e) {
    throw Error(Errc::ConfigError, e.what());
  }
}

void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "ell") cfg.model.ell = to_double(key, value);
  else if (key == "m_c") cfg.model.m_c = to_double(key, value);
  else if (key == "r_sch") cfg.model.R_Sch = to_double(key, value);
  else if (key == "r_id") cfg.model.R_ID = to_double(key, value);
  else if (key == "alpha_acc") cfg.model.alpha_acc = to_double(key, value);
  else if (key == "c") cfg.model.c = to_double(key, value);
  else if (key == "suite") cfg.suite = parse_suite(value);
  else if (key == "name") cfg.name = value;
  else if (key == "out_dir") cfg.out_dir = value;
  else if (suite_defaults(cfg.suite).count(key)) cfg.options[key] = value;
  else throw Error(Errc::ConfigError, "unknown key: " + key);
}

ExperimentConfig make_config(const std::map<std::string, std::string>& kv) {
  ExperimentConfig cfg;
  const auto s = kv.find("suite");
  if (s != kv.end()) cfg.suite = parse_suite(s->second);
  for (const auto& [k, v] : kv)
    if (k != "suite") set_config_value(cfg, k, v);
  cfg.validate();
  return cfg;
}

namespace {

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(const std::vector<std::string>& cells) { rows_.push_back(cells); }
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "\n";
    }
    return os.str();
  }
  const std::vector<std::string>& header() const { return header_; }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct SuiteOutput {
  CsvTable main{{}};
  std::vector<std::pair<std::string, CsvTable>> extra;  // suffix, table
  std::map<std::string, double> metrics;
  std::map<std::string, std::string> info;
  std::string plot;  // gnuplot plot command body referencing the main CSV
};

std::string i2s(long long v) { return std::to_string(v); }

ComplexField gaussian_data(const ExperimentConfig& cfg) {
  const RadialGrid g = make_periodic_grid(-cfg.get("x_half"), cfg.get("x_half"), static_cast<int>(cfg.get("n")));
  return make_profile(g, Profile::Gaussian, 0.0, cfg.get("width"), 1.0);
}

SuiteOutput run_specfun(const ExperimentConfig& cfg, int jobs) {
  SuiteOutput out;
  out.main = CsvTable({"index", "a_re", "a_im", "z", "residual"});
  const int n = static_cast<int>(cfg.get("samples"));
  std::mt19937_64 rng(static_cast<std::uint64_t>(cfg.get("seed")));
  std::uniform_real_distribution<double> um(0.0, cfg.get("m_max")), uz(cfg.get("z_min"), cfg.get("z_max")), us(0.0, 1.0);
  std::vector<cplx> as(n);
  std::vector<double> zs(n), res(n);
  for (int i = 0; i < n; ++i) {
    as[i] = cplx(us(rng) < 0.5 ? -0.5 : 0.5, um(rng));
    zs[i] = uz(rng);
  }
  parallel_for(n, [&](std::size_t i) {
    const cplx a = as[i];
    const double z = zs[i];
    const cplx lhs = hyp2f1(a + 1.0, a, 1.0, z);
    const cplx rhs = -((1.0 - a) * hyp2f1(a - 1.0, a, 1.0, z) + (2.0 * a - 1.0) * hyp2f1(a, a, 1.0, z)) / (a * (z - 1.0));
    res[i] = std::abs(lhs - rhs) / std::abs(lhs);
  }, jobs);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, res[i]);
    out.main.row({i2s(i), fmt17(as[i].real()), fmt17(as[i].imag()), fmt17(zs[i]), fmt17(res[i])});
  }
  CsvTable closed({"z", "err_log", "err_arcsin"});
  double worst_closed = 0.0;
  const int nc = static_cast<int>(cfg.get("n_closed"));
  for (int i = 1; i <= nc; ++i) {
    const double z = static_cast<double>(i) / (nc + 1);
    const double e1 = std::abs(hyp2f1(1.0, 1.0, 2.0, z) - (-std::log1p(-z) / z)) / (-std::log1p(-z) / z);
    const double e2 = std::abs(hyp2f1(0.5, 0.5, 1.5, z * z) - std::asin(z) / z) / (std::asin(z) / z);
    worst_closed = std::max({worst_closed, e1, e2});
    closed.row({fmt17(z), fmt17(e1), fmt17(e2)});
  }
  out.extra.emplace_back("_closed_form", closed);
  out.metrics["max_contiguous_residual"] = worst;
  out.metrics["max_closed_form_error"] = worst_closed;
  out.metrics["samples"] = n;
  out.plot = "set logscale y\nplot '{csv}' using 4:5 with points title 'contiguous residual'\n";
  return out;
}

SuiteOutput run_kernel_bounds(const ExperimentConfig& cfg, int jobs) {
  SuiteOutput out;
  out.main = CsvTable({"kernel", "t", "b", "integral", "envelope", "ratio"});
  const DerivedParams d = derive(cfg.model);
  out.info["regime"] = regime_name(d.regime);
  const std::vector<double> ts = logspace(1.0, cfg.get("t_max"), static_cast<int>(cfg.get("n_t")));
  const std::string bm = cfg.get_string("b_mode");
  if (bm != "one" && bm != "sqrt") throw Error(Errc::ConfigError, "b_mode must be one or sqrt");
  const SourceTime mode = bm == "one" ? SourceTime::One : SourceTime::Sqrt;
  std::vector<std::pair<std::string, KernelKind>> kinds;
  std::istringstream in(cfg.get_string("kernels"));
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item == "E") kinds.emplace_back(item, KernelKind::E);
    else if (item == "K1") kinds.emplace_back(item, KernelKind::K1);
    else if (item == "K2") kinds.emplace_back(item, KernelKind::K2);
    else throw Error(Errc::ConfigError, "unknown kernel: " + item);
  }
  std::vector<BoundSample> samples(kinds.size() * ts.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    samples[i] = bound_sweep(kinds[i / ts.size()].second, d, {ts[i % ts.size()]}, mode)[0];
  }, jobs);
  const double t_fit = cfg.get("t_fit_min");
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    std::vector<BoundSample> s(samples.begin() + k * ts.size(), samples.begin() + (k + 1) * ts.size());
    double max_ratio = 0.0;
    for (const auto& x : s) {
      out.main.row({kinds[k].first, fmt17(x.t), fmt17(x.b), fmt17(x.integral), fmt17(x.envelope), fmt17(x.ratio)});
      if (x.t >= t_fit) max_ratio = std::max(max_ratio, x.ratio);
    }
    out.metrics["slope_" + kinds[k].first] = log_log_slope(s, t_fit);
    out.metrics["max_ratio_" + kinds[k].first] = max_ratio;
  }
  out.plot = "set logscale xy\nplot '{csv}' using 2:(strcol(1) eq 'E' ? $6 : NaN) with linespoints title 'E', \\\n"
             "     '{csv}' using 2:(strcol(1) eq 'K1' ? $6 : NaN) with linespoints title 'K1', \\\n"
             "     '{csv}' using 2:(strcol(1) eq 'K2' ? $6 : NaN) with linespoints title 'K2'\n";
  return out;
}

SuiteOutput run_transform_verify(const ExperimentConfig& cfg, int jobs) {
  SuiteOutput out;
  out.main = CsvTable({"n", "t", "l2_diff_vs_direct", "residual_norm", "support_lo", "norm"});
  const DerivedParams d = derive(cfg.model);
  const Liouville L = liouville(d);
  out.info["regime"] = regime_name(d.regime);
  const std::vector<double> times = cfg.get_list("times");
  if (times.empty()) throw Error(Errc::ConfigError, "times must be non-empty");
  const int levels = static_cast<int>(cfg.get("levels"));
  const int n0 = static_cast<int>(cfg.get("n"));
  std::vector<std::vector<double>> diffs(levels, std::vector<double>(times.size()));
  std::vector<std::vector<double>> resid(levels, std::vector<double>(times.size()));
  std::vector<std::vector<double>> supp(levels, std::vector<double>(times.size()));
  std::vector<std::vector<double>> norms(levels, std::vector<double>(times.size()));
  double repro = 0.0;
  TransformOptions topt;
  topt.jobs = jobs;
  for (int lv = 0; lv < levels; ++lv) {
    const int n = n0 << lv;
    const RadialGrid g = make_periodic_grid(-cfg.get("x_half"), cfg.get("x_half"), n);
    const ComplexField u0 = make_profile(g, Profile::Gaussian, 0.0, cfg.get("width"), 1.0);
    const SpectralPropagator prop(g);
    const PeriodicOperator op2(g, 2), op4(g, 4);
    const EPDProblem prob{u0, ComplexField(g), {}, false, L};
    const Trajectory direct = epd_direct_solve(prob, op2, *std::max_element(times.begin(), times.end()), times);
    parallel_for(times.size(), [&](std::size_t i) {
      const ComplexField u = linear_solution(prob, prop, times[i], topt);
      diffs[lv][i] = l2_norm(u - direct.at(times[i]));
      norms[lv][i] = l2_norm(u);
      resid[lv][i] = epd_residual(prob, prop, op4, times[i], cfg.get("residual_delta"), topt);
      const auto sp = u.support(1e-12);
      supp[lv][i] = sp.first >= 0 ? g.r(sp.first) : 0.0;
    }, jobs);
    if (lv == 0) {
      const ComplexField u = linear_solution(prob, prop, 1.0 + cfg.get("repro_dt"), topt);
      repro = l2_norm(u - u0) / l2_norm(u0);
    }
    for (std::size_t i = 0; i < times.size(); ++i)
      out.main.row({i2s(n), fmt17(times[i]), fmt17(diffs[lv][i]), fmt17(resid[lv][i]), fmt17(supp[lv][i]),
                    fmt17(norms[lv][i])});
  }
  double max_diff = 0.0;
  for (double x : diffs[0]) max_diff = std::max(max_diff, x);
  out.metrics["max_l2_diff"] = max_diff;
  out.metrics["repro_error"] = repro;
  if (levels >= 2) {
    double lo = 1e300, hi = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double r = diffs[0][i] / diffs[1][i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    out.metrics["refinement_ratio_min"] = lo;
    out.metrics["refinement_ratio_max"] = hi;
  }
  out.plot = "set logscale y\nplot '{csv}' using 2:3 with points title 'L2 difference'\n";
  return out;
}

SuiteOutput run_linear_decay(const ExperimentConfig& cfg, int jobs) {
  SuiteOutput out;
  out.main = CsvTable({"t", "norm", "envelope", "ratio"});
  const DerivedParams d = derive(cfg.model);
  const Liouville L = liouville(d);
  out.info["regime"] = regime_name(d.regime);
  const ComplexField psi0 = gaussian_data(cfg);
  const RadialGrid& g = psi0.grid;
  const SpectralPropagator prop(g);
  const double s = cfg.get("s");
  ComplexField u1 = psi0;
  u1 *= -L.k;  // psi1 = 0
  const double n0 = sobolev_norm(psi0, s), n1 = 0.0;
  const std::vector<double> ts = logspace(cfg.get("t_min"), cfg.get("t_max"), static_cast<int>(cfg.get("n_t")));
  std::vector<BoundSample> samples(ts.size());
  TransformOptions topt;
  topt.jobs = 1;
  parallel_for(ts.size(), [&](std::size_t i) {
    const ComplexField psi = psi_from_u(data_solution(psi0, u1, L, prop, ts[i], topt), ts[i], L, cfg.model);
    const double nrm = sobolev_norm(psi, s);
    const double env = id_envelope(ts[i], d, n0, n1);
    samples[i] = {ts[i], 1.0, nrm, env, nrm / env};
  }, jobs);
  double max_ratio = 0.0;
  for (const auto& x : samples) {
    out.main.row({fmt17(x.t), fmt17(x.integral), fmt17(x.envelope), fmt17(x.ratio)});
    max_ratio = std::max(max_ratio, x.ratio);
  }
  out.metrics["slope"] = log_log_slope(samples, cfg.get("t_min"));
  out.metrics["max_ratio"] = max_ratio;
  out.plot = "set logscale xy\nplot '{csv}' using 1:2 with linespoints title 'norm', '{csv}' using 1:3 with lines title 'envelope'\n";
  return out;
}

struct PicardRun {
  PicardResult res;
  double scale;
};

PicardRun picard_at(const ExperimentConfig& cfg, double scale, int jobs) {
  ComplexField psi0 = gaussian_data(cfg);
  const double s = cfg.get("s");
  psi0 *= scale / sobolev_norm(psi0, s);
  const SpectralPropagator prop(psi0.grid);
  PotentialModel pm;
  pm.delta = cfg.get("delta");
  Nonlinearity nl;
  nl.alpha = cfg.get("alpha");
  nl.form = parse_nonlinear_form(cfg.get_string("form"));
  PicardOptions opt;
  opt.T_max = cfg.get("t_max");
  opt.n_samples = static_cast<int>(cfg.get("n_samples"));
  opt.max_iterations = static_cast<int>(cfg.get("max_iter"));
  opt.s = s;
  opt.jobs = jobs;
  opt.tol = cfg.get("tol_rel") * scale;
  return {picard_solve(psi0, ComplexField(psi0.grid), pm, nl, cfg.get("gamma"), cfg.model, prop, opt), scale};
}

SuiteOutput run_semilinear(const ExperimentConfig& cfg, int jobs) {
  SuiteOutput out;
  out.main = CsvTable({"t", "norm"});
  const DerivedParams d = derive(cfg.model);
  out.info["regime"] = regime_name(d.regime);
  const double scale = cfg.get("scale");
  const PicardRun a = picard_at(cfg, scale, jobs);
  const PicardRun b = picard_at(cfg, 0.5 * scale, jobs);
  const FixedPointReport& r = a.res.report;
  for (std::size_t j = 0; j < a.res.psi.times.size(); ++j)
    out.main.row({fmt17(a.res.psi.times[j]), fmt17(a.res.norms[j])});
  CsvTable it({"scale", "iteration", "diff_norm", "ratio"});
  for (const PicardRun* run : {&a, &b}) {
    const auto& rep = run->res.report;
    for (std::size_t i = 0; i < rep.diff_norms.size(); ++i)
      it.row({fmt17(run->scale), i2s(static_cast<long long>(i)), fmt17(rep.diff_norms[i]),
              i == 0 ? std::string("nan") : fmt17(rep.ratios.size() >= i ? rep.ratios[i - 1] : 0.0)});
  }
  out.extra.emplace_back("_iterations", it);
  out.metrics["converged"] = r.converged ? 1.0 : 0.0;
  out.metrics["iterations"] = r.iterations;
  out.metrics["contraction_ratio"] = r.contraction_ratio;
  out.metrics["contraction_ratio_half"] = b.res.report.contraction_ratio;
  out.metrics["ratio_factor"] =
      b.res.report.contraction_ratio > 0.0 ? r.contraction_ratio / b.res.report.contraction_ratio : 0.0;
  out.metrics["alpha"] = cfg.get("alpha");
  out.metrics["gamma_used"] = r.gamma_used;
  out.metrics["radius_R"] = r.radius_R;
  out.metrics["data_size"] = r.data_size;
  out.metrics["fixed_point_residual"] = r.fixed_point_residual;
  out.metrics["tol"] = cfg.get("tol_rel") * scale;
  out.metrics["gamma_fit"] = a.res.decay.gamma_fit;
  out.metrics["gamma_exp"] = a.res.decay.gamma_exp;
  out.metrics["log_flag"] = a.res.decay.log_flag ? 1.0 : 0.0;
  out.metrics["gamma_lower"] = r.range.lower;
  out.metrics["gamma_upper"] = r.range.upper;
  out.plot = "set logscale xy\nplot '{csv}' using 1:2 with linespoints title 'norm'\n";
  return out;
}

SuiteOutput run_geodesic(const ExperimentConfig& cfg, int) {
  SuiteOutput out;
  out.main = CsvTable({"t", "r", "clearance", "residual"});
  std::vector<double> ts = logspace(1.0, cfg.get("t_max"), static_cast<int>(cfg.get("n_t")));
  double max_res = 0.0, r1 = 0.0;
  for (double t : ts) {
    const GeodesicState g = radial_geodesic(t, cfg.model);
    if (t == 1.0) r1 = g.r;
    max_res = std::max(max_res, std::abs(g.residual));
    out.main.row({fmt17(t), fmt17(g.r), fmt17(g.clearance), fmt17(g.residual)});
  }
  const GeodesicState inf = radial_geodesic(std::numeric_limits<double>::infinity(), cfg.model);
  out.main.row({"inf", fmt17(inf.r), fmt17(inf.clearance), fmt17(inf.residual)});
  max_res = std::max(max_res, std::abs(inf.residual));
  out.metrics["r_at_1_error"] = std::abs(r1 - cfg.model.R_ID);
  out.metrics["max_residual"] = max_res;
  out.metrics["min_clearance"] = min_clearance(cfg.model);
  out.plot = "set logscale x\nplot '{csv}' using 1:2 with linespoints title 'r(t)'\n";
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(Errc::ConfigError, "cannot write " + p.string());
  f << text;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

double metric(const std::map<std::string, double>& m, const std::string& k) {
  const auto it = m.find(k);
  return it == m.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
}

}  // namespace

bool suite_pass(const ExperimentConfig& cfg, const std::map<std::string, double>& m) {
  switch (cfg.suite) {
    case Suite::SpecfunChecks:
      return metric(m, "max_contiguous_residual") <= cfg.get("contiguous_tol") &&
             metric(m, "max_closed_form_error") <= cfg.get("closed_form_tol");
    case Suite::KernelBounds: {
      bool ok = false;
      for (const auto& [k, v] : m)
        if (k.rfind("slope_", 0) == 0) {
          if (!(v <= cfg.get("slope_tol"))) return false;
          ok = true;
        }
      return ok;
    }
    case Suite::TransformVerify: {
      bool ok = metric(m, "max_l2_diff") <= cfg.get("diff_tol") && metric(m, "repro_error") <= cfg.get("repro_tol");
      if (cfg.get("levels") >= 2)
        ok = ok && metric(m, "refinement_ratio_min") >= cfg.get("ratio_lo") &&
             metric(m, "refinement_ratio_max") <= cfg.get("ratio_hi");
      return ok;
    }
    case Suite::LinearDecay: return metric(m, "slope") <= cfg.get("slope_tol");
    case Suite::SemilinearDecay: {
      const double two_a = std::pow(2.0, metric(m, "alpha"));
      const double slack = cfg.get("factor_slack"), gs = cfg.get("gamma_slack");
      const double g = metric(m, "gamma_fit");
      return metric(m, "converged") == 1.0 && metric(m, "contraction_ratio") < 1.0 &&
             metric(m, "iterations") <= cfg.get("iter_limit") && metric(m, "ratio_factor") >= two_a / slack &&
             metric(m, "ratio_factor") <= slack * two_a && g >= metric(m, "gamma_lower") - gs &&
             g <= metric(m, "gamma_upper") + gs;
    }
    case Suite::GeodesicTable:
      return metric(m, "r_at_1_error") <= 1e-12 && metric(m, "max_residual") <= cfg.get("residual_tol");
  }
  return false;
}

SuiteResult run_suite(const ExperimentConfig& cfg, int jobs) {
  cfg.validate();
  if (jobs <= 0) jobs = default_jobs();
  SuiteOutput out;
  switch (cfg.suite) {
    case Suite::SpecfunChecks: out = run_specfun(cfg, jobs); break;
    case Suite::KernelBounds: out = run_kernel_bounds(cfg, jobs); break;
    case Suite::TransformVerify: out = run_transform_verify(cfg, jobs); break;
    case Suite::LinearDecay: out = run_linear_decay(cfg, jobs); break;
    case Suite::SemilinearDecay: out = run_semilinear(cfg, jobs); break;
    case Suite::GeodesicTable: out = run_geodesic(cfg, jobs); break;
  }
  SuiteResult res;
  res.suite = suite_name(cfg.suite);
  res.name = cfg.stem();
  res.metrics = out.metrics;
  res.info = out.info;
  res.pass = suite_pass(cfg, out.metrics);

  namespace fs = std::filesystem;
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  const std::string stem = cfg.stem();
  const fs::path csv = dir / (stem + ".csv");
  write_file(csv, out.main.str());
  res.artifacts.push_back(csv.string());
  for (const auto& [suffix, table] : out.extra) {
    const fs::path p = dir / (stem + suffix + ".csv");
    write_file(p, table.str());
    res.artifacts.push_back(p.string());
  }
  CsvTable mt({"metric", "value"});
  for (const auto& [k, v] : out.metrics) mt.row({k, fmt17(v)});
  const fs::path mp = dir / (stem + "_metrics.csv");
  write_file(mp, mt.str());
  res.artifacts.push_back(mp.string());
  const fs::path gp = dir / (stem + ".gp");
  std::string plot = "set datafile separator ','\nset key autotitle columnhead\nset terminal pngcairo size 900,600\n"
                     "set output '" + stem + ".png'\nset title '" + stem + "'\n" +
                     replace_all(out.plot, "{csv}", stem + ".csv");
  write_file(gp, plot);
  res.artifacts.push_back(gp.string());
  return res;
}

std::vector<SuiteResult> sweep(const ExperimentConfig& cfg, const std::string& axis,
                               const std::vector<std::string>& values, int jobs) {
  if (std::find(kModelKeys.begin(), kModelKeys.end(), axis) == kModelKeys.end() &&
      !suite_defaults(cfg.suite).count(axis))
    throw Error(Errc::ConfigError, "unknown sweep axis: " + axis);
  std::vector<SuiteResult> results(values.size());
  if (values.empty()) return results;
  if (jobs <= 0) jobs = default_jobs();
  parallel_for(values.size(), [&](std::size_t i) {
    ExperimentConfig c = cfg;
    SuiteResult& r = results[i];
    r.suite = suite_name(cfg.suite);
    r.name = cfg.stem() + "_" + axis + "_" + std::to_string(i);
    c.name = r.name;
    std::string regime;
    try {
      set_config_value(c, axis, values[i]);
      regime = regime_name(derive(c.model).regime);
      r = run_suite(c, 1);
    } catch (const Error& e) {
      r.pass = false;
      r.error = errc_name(e.code());
    }
    if (!regime.empty()) r.info["regime"] = regime;
  }, jobs);
  CsvTable t({"index", axis, "regime", "pass", "error"});
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto reg = results[i].info.find("regime");
    t.row({i2s(static_cast<long long>(i)), values[i], reg == results[i].info.end() ? "" : reg->second,
           results[i].pass ? "1" : "0", results[i].error});
  }
  std::filesystem::create_directories(cfg.out_dir);
  write_file(std::filesystem::path(cfg.out_dir) / (cfg.stem() + "_sweep.csv"), t.str());
  return results;
}

std::string to_keyvalue(const SuiteResult& r) {
  std::ostringstream os;
  os << "suite=" << r.suite << "\n"
     << "name=" << r.name << "\n"
     << "pass=" << (r.pass ? "true" : "false") << "\n";
  if (!r.error.empty()) os << "error=" << r.error << "\n";
  for (const auto& [k, v] : r.info) os << k << "=" << v << "\n";
  for (const auto& [k, v] : r.metrics) os << k << "=" << fmt17(v) << "\n";
  for (const auto& a : r.artifacts) os << "artifact=" << a << "\n";
  return os.str();
}

}  // namespace kgbh
