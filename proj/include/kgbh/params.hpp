#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <string>

namespace kgbh {

using cplx = std::complex<double>;

struct ModelParams {
  double ell = 2.0;
  double m_c = 0.0;
  double R_Sch = 0.0;
  double R_ID = 3.0;
  double alpha_acc = 1.0;
  double c = 1.0;

  // Throws InvalidParams on ell <= 1, negative mass or radius, non-positive alpha_acc or c.
  void validate() const;
  // Data support clears the total lookback: R_ID > c/(alpha_acc (ell-1)) + R_Sch.
  bool support_clears_horizon() const;
};

enum class MassRegime { SmallMass, LargeMass };
enum class Branch { KPlus, KMinus };

const char* regime_name(MassRegime r);
const char* branch_name(Branch b);

struct DerivedParams {
  double ell = 2.0;
  cplx k_plus;
  cplx k_minus;
  std::optional<double> M_big;
  MassRegime regime = MassRegime::SmallMass;
  double A_inf = 1.0;
  double phi_1 = -1.0;
  // sqrt((1-3l)^2 - 4 m_c^2), principal branch
  cplx sqrt_disc;

  // M_pm from l + 2 i M_pm = 1 +- sqrt(disc)
  cplx script_M(Branch b) const;
};

DerivedParams derive(const ModelParams& p);

// Exponents used by the kernels for one Liouville branch.
struct Liouville {
  double ell = 2.0;
  Branch branch = Branch::KPlus;
  cplx k;   // t^k factor in psi = t^k u
  cplx mu;  // damping coefficient of u_t / t
  cplx q;   // i M / (1 - l)
};

// SmallMass uses k_plus, LargeMass uses k_minus.
Branch default_branch(const DerivedParams& d);
Liouville liouville(const DerivedParams& d, Branch b);
Liouville liouville(const DerivedParams& d);

double phi(double t, double ell);
double phi(double t, const ModelParams& p);
double lookback(double t, const ModelParams& p);

struct GammaRange {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = 0.0;
  bool lower_strict = true;
  bool upper_strict = false;
  bool log_correction = false;
  char theorem_case = '-';  // 'a', 'b' for large mass, 's' for small mass

  bool contains(double gamma, double slack = 0.0) const;
};

GammaRange admissible_gamma(const DerivedParams& d, double alpha, double delta, const ModelParams& p);

// Minimal nonlinearity exponent for the small mass theorem.
double small_mass_alpha_threshold(const DerivedParams& d);

std::string to_keyvalue(const ModelParams& p);
std::string to_keyvalue(const DerivedParams& d);

}  // namespace kgbh
