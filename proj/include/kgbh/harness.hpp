#pragma once

#include <map>
#include <string>
#include <vector>

#include "kgbh/params.hpp"

namespace kgbh {

enum class Suite { KernelBounds, TransformVerify, LinearDecay, SemilinearDecay, GeodesicTable, SpecfunChecks };

Suite parse_suite(const std::string& s);
const char* suite_name(Suite s);

// Flat key=value text; '#' starts a comment, blank lines are ignored.
std::map<std::string, std::string> parse_keyvalue(const std::string& text);
std::map<std::string, std::string> load_keyvalue_file(const std::string& path);

struct ExperimentConfig {
  ModelParams model;
  Suite suite = Suite::SpecfunChecks;
  std::string name;        // output file stem; defaults to the suite name
  std::string out_dir = ".";
  std::map<std::string, std::string> options;  // suite-specific keys

  double get(const std::string& key) const;    // option value or the suite default
  std::string get_string(const std::string& key) const;
  std::vector<double> get_list(const std::string& key) const;
  std::string stem() const;
  // Throws ConfigError on unknown keys, non-numeric values or non-positive tolerances.
  void validate() const;
};

// Recognizes model keys (ell, m_c, r_sch, r_id, alpha_acc, c), suite, name, out_dir and the
// option keys of the selected suite.
ExperimentConfig make_config(const std::map<std::string, std::string>& kv);
// Sets a model key or an option key.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);
// Option keys of a suite with their defaults.
const std::map<std::string, std::string>& suite_defaults(Suite s);

struct SuiteResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string error;  // error code name when the run threw
  std::map<std::string, double> metrics;
  std::map<std::string, std::string> info;
  std::vector<std::string> artifacts;
};

// Pass predicate of a suite from its metrics and configured tolerances.
bool suite_pass(const ExperimentConfig& cfg, const std::map<std::string, double>& metrics);

// Runs the suite and writes <stem>.csv, <stem>_metrics.csv and <stem>.gp (plus extra tables)
// into out_dir.
SuiteResult run_suite(const ExperimentConfig& cfg, int jobs = 0);

// One run per value of the axis, executed by a pool of `jobs` workers; results keep input order.
// Errors of individual runs are recorded in SuiteResult::error. Writes <stem>_sweep.csv.
std::vector<SuiteResult> sweep(const ExperimentConfig& cfg, const std::string& axis,
                               const std::vector<std::string>& values, int jobs = 0);

std::string to_keyvalue(const SuiteResult& r);

}  // namespace kgbh
