#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kgbh/errors.hpp"
#include "kgbh/harness.hpp"

using namespace kgbh;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig config(std::map<std::string, std::string> kv) {
  kv.emplace("out_dir", "harness_out");
  return make_config(kv);
}

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ConfigError;
}

}  // namespace

TEST_CASE("key=value parsing") {
  const auto kv = parse_keyvalue("# comment\n ell = 2.5 \n\nm_c=1 # trailing\nsuite=geodesic_table\n");
  CHECK(kv.at("ell") == "2.5");
  CHECK(kv.at("m_c") == "1");
  CHECK(kv.size() == 3);
  const ExperimentConfig c = make_config(kv);
  CHECK(c.model.ell == 2.5);
  CHECK(c.suite == Suite::GeodesicTable);
  CHECK(c.get("n_t") == 41);
}

TEST_CASE("configuration errors") {
  CHECK(error_of([] { config({{"suite", "geodesic_table"}, {"bogus", "1"}}); }) == Errc::ConfigError);
  CHECK(error_of([] { config({{"suite", "nope"}}); }) == Errc::ConfigError);
  CHECK(error_of([] { config({{"suite", "geodesic_table"}, {"residual_tol", "-1"}}).validate(); }) == Errc::ConfigError);
  CHECK(error_of([] { config({{"suite", "geodesic_table"}, {"ell", "abc"}}); }) == Errc::ConfigError);
}

TEST_CASE("geodesic table starts at R_ID") {
  const ExperimentConfig c = config({{"suite", "geodesic_table"}, {"r_sch", "1"}, {"r_id", "3"}});
  const SuiteResult r = run_suite(c);
  CHECK(r.pass);
  const std::string csv = slurp("harness_out/geodesic_table.csv");
  CHECK(csv.rfind("t,r,clearance,residual\n1,3,2,", 0) == 0);
  CHECK(std::filesystem::exists("harness_out/geodesic_table.gp"));
  CHECK(std::filesystem::exists("harness_out/geodesic_table_metrics.csv"));
}

TEST_CASE("specfun suite passes on defaults") {
  const SuiteResult r = run_suite(config({{"suite", "specfun_checks"}}));
  CHECK(r.pass);
  CHECK(r.metrics.count("max_contiguous_residual") == 1);
  CHECK(r.metrics.at("max_contiguous_residual") <= 1e-9);
}

TEST_CASE("pass predicate is a function of the metrics") {
  const ExperimentConfig c = config({{"suite", "geodesic_table"}, {"r_sch", "1"}, {"r_id", "3"}, {"name", "pred"}});
  const SuiteResult r = run_suite(c);
  CHECK(suite_pass(c, r.metrics) == r.pass);
  std::map<std::string, double> m;
  std::istringstream in(slurp("harness_out/pred_metrics.csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    m[line.substr(0, comma)] = std::stod(line.substr(comma + 1));
  }
  CHECK(m == r.metrics);
  CHECK(suite_pass(c, m) == r.pass);
}

TEST_CASE("repeated runs are byte identical") {
  ExperimentConfig c = config({{"suite", "linear_decay"}, {"m_c", "2"}, {"n", "128"}, {"n_t", "9"}});
  c.name = "det_a";
  run_suite(c, 1);
  c.name = "det_b";
  run_suite(c, 4);
  CHECK(slurp("harness_out/det_a.csv") == slurp("harness_out/det_b.csv"));
  CHECK(slurp("harness_out/det_a_metrics.csv") == slurp("harness_out/det_b_metrics.csv"));
}

TEST_CASE("sweep: empty list and unknown axis") {
  const ExperimentConfig c = config({{"suite", "geodesic_table"}, {"r_sch", "1"}});
  CHECK(sweep(c, "r_id", {}).empty());
  CHECK(error_of([&] { sweep(c, "nonsense", {"1"}); }) == Errc::ConfigError);
}

TEST_CASE("sweep over m_c flips the regime at the boundary") {
  const ExperimentConfig c = config({{"suite", "geodesic_table"}, {"name", "mc"}});
  const std::vector<std::string> v = {"2", "2.4999999", "2.5", "2.6", "3"};
  const auto res = sweep(c, "m_c", v, 3);
  REQUIRE(res.size() == v.size());
  const char* expect[] = {"SmallMass", "SmallMass", "LargeMass", "LargeMass", "LargeMass"};
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(res[i].info.at("regime") == expect[i]);
    CHECK(res[i].name == "mc_m_c_" + std::to_string(i));
  }
  const std::string csv = slurp("harness_out/mc_sweep.csv");
  CHECK(csv.find("2,2.5,LargeMass,1,") != std::string::npos);
}

TEST_CASE("sweep over alpha reports NoContraction up to the threshold") {
  const ExperimentConfig c = config({{"suite", "semilinear_decay"}, {"m_c", "2"}, {"n", "128"}, {"t_max", "30"},
                                     {"n_samples", "40"}, {"name", "alpha"}});
  const std::vector<std::string> v = {"1.5", "2", "2.5", "3"};
  const auto res = sweep(c, "alpha", v, 2);
  CHECK(res[0].error == "NoContraction");
  CHECK(res[1].error == "NoContraction");
  CHECK(res[2].error.empty());
  CHECK(res[3].error.empty());
  CHECK(res[3].metrics.at("converged") == 1.0);
}
