#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "kgbh/errors.hpp"
#include "kgbh/geodesy.hpp"
#include "kgbh/harness.hpp"
#include "kgbh/kernels.hpp"
#include "kgbh/params.hpp"
#include "kgbh/parallel.hpp"
#include "kgbh/semilinear.hpp"
#include "kgbh/specfun.hpp"

namespace py = pybind11;
using namespace kgbh;

namespace {

ModelParams model(double ell, double m_c, double r_sch, double r_id, double alpha_acc, double c) {
  ModelParams p;
  p.ell = ell;
  p.m_c = m_c;
  p.R_Sch = r_sch;
  p.R_ID = r_id;
  p.alpha_acc = alpha_acc;
  p.c = c;
  p.validate();
  return p;
}

#define MODEL_ARGS                                                                                     \
  py::arg("ell") = 2.0, py::arg("m_c") = 0.0, py::arg("r_sch") = 0.0, py::arg("r_id") = 3.0,            \
      py::arg("alpha_acc") = 1.0, py::arg("c") = 1.0

py::dict derived_dict(const DerivedParams& d) {
  py::dict out;
  out["ell"] = d.ell;
  out["k_plus"] = d.k_plus;
  out["k_minus"] = d.k_minus;
  out["M_big"] = d.M_big ? py::cast(*d.M_big) : py::none();
  out["regime"] = regime_name(d.regime);
  out["A_inf"] = d.A_inf;
  out["phi_1"] = d.phi_1;
  const Liouville L = liouville(d);
  out["branch"] = branch_name(L.branch);
  out["k"] = L.k;
  out["mu"] = L.mu;
  out["q"] = L.q;
  return out;
}

py::dict result_dict(const SuiteResult& r) {
  py::dict out;
  out["suite"] = r.suite;
  out["name"] = r.name;
  out["pass"] = r.pass;
  out["error"] = r.error;
  out["metrics"] = r.metrics;
  out["info"] = r.info;
  out["artifacts"] = r.artifacts;
  return out;
}

KernelKind kernel_kind(const std::string& k) {
  if (k == "E") return KernelKind::E;
  if (k == "K0") return KernelKind::K0;
  if (k == "K1") return KernelKind::K1;
  if (k == "K2") return KernelKind::K2;
  throw Error(Errc::ConfigError, "unknown kernel: " + k);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Klein-Gordon kernels, integral transforms and fixed-point solver in an expanding black hole space-time";

  static py::exception<Error> kgbh_error(m, "KgbhError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = kgbh_error;
      py::object inst = exc(e.what());
      inst.attr("code") = errc_name(e.code());
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  m.def("set_jobs", &set_jobs, py::arg("jobs"));
  m.def("default_jobs", &default_jobs);

  m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("log_gamma", &log_gamma, py::arg("w"));

  m.def("derive", [](double ell, double m_c, double r_sch, double r_id, double alpha_acc, double c) {
    return derived_dict(derive(model(ell, m_c, r_sch, r_id, alpha_acc, c)));
  }, MODEL_ARGS);
  m.def("phi", py::overload_cast<double, double>(&phi), py::arg("t"), py::arg("ell") = 2.0);
  m.def("lookback", [](double t, double ell, double alpha_acc, double c) {
    return lookback(t, model(ell, 0.0, 0.0, 3.0, alpha_acc, c));
  }, py::arg("t"), py::arg("ell") = 2.0, py::arg("alpha_acc") = 1.0, py::arg("c") = 1.0);
  m.def("admissible_gamma", [](double alpha, double delta, double ell, double m_c) {
    const ModelParams p = model(ell, m_c, 0.0, 3.0, 1.0, 1.0);
    const GammaRange g = admissible_gamma(derive(p), alpha, delta, p);
    py::dict out;
    out["lower"] = g.lower;
    out["upper"] = g.upper;
    out["lower_strict"] = g.lower_strict;
    out["upper_strict"] = g.upper_strict;
    out["log_correction"] = g.log_correction;
    out["case"] = std::string(1, g.theorem_case);
    return out;
  }, py::arg("alpha"), py::arg("delta") = 0.0, py::arg("ell") = 2.0, py::arg("m_c") = 0.0);

  m.def("radial_geodesic", [](double t, double ell, double m_c, double r_sch, double r_id, double alpha_acc, double c) {
    const GeodesicState s = radial_geodesic(t, model(ell, m_c, r_sch, r_id, alpha_acc, c));
    py::dict out;
    out["t"] = s.t;
    out["r"] = s.r;
    out["clearance"] = s.clearance;
    out["residual"] = s.residual;
    return out;
  }, py::arg("t"), MODEL_ARGS);
  m.def("min_clearance", [](double ell, double m_c, double r_sch, double r_id, double alpha_acc, double c) {
    return min_clearance(model(ell, m_c, r_sch, r_id, alpha_acc, c));
  }, MODEL_ARGS);

  m.def("kernel", [](const std::string& kind, double r, double t, double b, double ell, double m_c) {
    const Liouville L = liouville(derive(model(ell, m_c, 0.0, 3.0, 1.0, 1.0)));
    switch (kernel_kind(kind)) {
      case KernelKind::E: return kernel_E(r, t, b, L);
      case KernelKind::K0: return kernel_K0(r, t, L);
      case KernelKind::K1: return kernel_K1(r, t, L);
      case KernelKind::K2: return kernel_K2(r, t, L);
    }
    return cplx(0.0);
  }, py::arg("kind"), py::arg("r"), py::arg("t"), py::arg("b") = 1.0, py::arg("ell") = 2.0, py::arg("m_c") = 0.0);
  m.def("kernel_abs_integral", [](const std::string& kind, double t, double b, double ell, double m_c) {
    const Liouville L = liouville(derive(model(ell, m_c, 0.0, 3.0, 1.0, 1.0)));
    switch (kernel_kind(kind)) {
      case KernelKind::E: return integral_abs_E(t, b, L);
      case KernelKind::K1: return integral_abs_K1(t, L);
      case KernelKind::K2: return integral_abs_K2(t, L);
      default: throw Error(Errc::ConfigError, "integrals are defined for E, K1 and K2");
    }
  }, py::arg("kind"), py::arg("t"), py::arg("b") = 1.0, py::arg("ell") = 2.0, py::arg("m_c") = 0.0);
  m.def("power_integral", [](double z, cplx s) {
    return std::make_pair(power_integral_quadrature(z, s), power_integral_closed_form(z, s));
  }, py::arg("z"), py::arg("s"));

  m.def("decay_fit", [](const std::vector<double>& t, const std::vector<double>& norm) {
    const DecayReport r = decay_fit(t, norm);
    py::dict out;
    out["gamma_fit"] = r.gamma_fit;
    out["gamma_plain"] = r.gamma_plain;
    out["log_beta"] = r.log_beta;
    out["log_flag"] = r.log_flag;
    out["residual"] = r.residual;
    out["residual_log"] = r.residual_log;
    out["gamma_exp"] = r.gamma_exp;
    out["residual_exp"] = r.residual_exp;
    out["samples"] = r.samples;
    return out;
  }, py::arg("t"), py::arg("norm"));

  m.def("suite_defaults", [](const std::string& suite) { return suite_defaults(parse_suite(suite)); },
        py::arg("suite"));
  m.def("run_suite", [](const std::map<std::string, std::string>& cfg, int jobs) {
    const ExperimentConfig c = make_config(cfg);
    SuiteResult r;
    {
      py::gil_scoped_release release;
      r = run_suite(c, jobs);
    }
    return result_dict(r);
  }, py::arg("config"), py::arg("jobs") = 0);
  m.def("sweep", [](const std::map<std::string, std::string>& cfg, const std::string& axis,
                    const std::vector<std::string>& values, int jobs) {
    const ExperimentConfig c = make_config(cfg);
    std::vector<SuiteResult> rs;
    {
      py::gil_scoped_release release;
      rs = sweep(c, axis, values, jobs);
    }
    py::list out;
    for (const auto& r : rs) out.append(result_dict(r));
    return out;
  }, py::arg("config"), py::arg("axis"), py::arg("values"), py::arg("jobs") = 0);
}
