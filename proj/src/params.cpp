#include "kgbh/params.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "kgbh/errors.hpp"
#include "kgbh/format.hpp"

namespace kgbh {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ModelParams::validate() const {
  if (!(ell > 1.0)) throw Error(Errc::InvalidParams, "ell must exceed 1");
  if (!(m_c >= 0.0)) throw Error(Errc::InvalidParams, "m_c must be non-negative");
  if (!(R_Sch >= 0.0)) throw Error(Errc::InvalidParams, "r_sch must be non-negative");
  if (!(alpha_acc > 0.0)) throw Error(Errc::InvalidParams, "alpha_acc must be positive");
  if (!(c > 0.0)) throw Error(Errc::InvalidParams, "c must be positive");
}

bool ModelParams::support_clears_horizon() const {
  return R_ID > c / (alpha_acc * (ell - 1.0)) + R_Sch;
}

const char* regime_name(MassRegime r) {
  return r == MassRegime::SmallMass ? "SmallMass" : "LargeMass";
}

const char* branch_name(Branch b) { return b == Branch::KPlus ? "KPlus" : "KMinus"; }

cplx DerivedParams::script_M(Branch b) const {
  const cplx mu = b == Branch::KPlus ? 1.0 + sqrt_disc : 1.0 - sqrt_disc;
  return (mu - ell) / cplx(0.0, 2.0);
}

DerivedParams derive(const ModelParams& p) {
  p.validate();
  DerivedParams d;
  d.ell = p.ell;
  const double b = 1.0 - 3.0 * p.ell;
  const double disc = b * b - 4.0 * p.m_c * p.m_c;
  if (disc > 0.0) {
    d.regime = MassRegime::SmallMass;
    d.sqrt_disc = cplx(std::sqrt(disc), 0.0);
  } else {
    d.regime = MassRegime::LargeMass;
    d.sqrt_disc = cplx(0.0, std::sqrt(-disc));
    d.M_big = std::sqrt(-disc) / (2.0 * (p.ell - 1.0));
  }
  d.k_plus = 0.5 * (b + d.sqrt_disc);
  d.k_minus = 0.5 * (b - d.sqrt_disc);
  d.A_inf = p.c / (p.alpha_acc * (p.ell - 1.0));
  d.phi_1 = 1.0 / (1.0 - p.ell);
  return d;
}

Branch default_branch(const DerivedParams& d) {
  return d.regime == MassRegime::SmallMass ? Branch::KPlus : Branch::KMinus;
}

Liouville liouville(const DerivedParams& d, Branch b) {
  Liouville L;
  L.ell = d.ell;
  L.branch = b;
  L.k = b == Branch::KPlus ? d.k_plus : d.k_minus;
  L.mu = b == Branch::KPlus ? 1.0 + d.sqrt_disc : 1.0 - d.sqrt_disc;
  L.q = (L.mu - d.ell) / (2.0 * (1.0 - d.ell));
  return L;
}

Liouville liouville(const DerivedParams& d) { return liouville(d, default_branch(d)); }

double phi(double t, double ell) { return std::pow(t, 1.0 - ell) / (1.0 - ell); }

double phi(double t, const ModelParams& p) { return phi(t, p.ell); }

double lookback(double t, const ModelParams& p) {
  // -expm1 keeps A(t) accurate for t close to 1
  const double x = (1.0 - p.ell) * std::log(t);
  return p.c / p.alpha_acc * std::expm1(x) / (1.0 - p.ell);
}

bool GammaRange::contains(double gamma, double slack) const {
  const bool lo_ok = lower_strict ? gamma > lower - slack : gamma >= lower - slack;
  const bool hi_ok = upper_strict ? gamma < upper + slack : gamma <= upper + slack;
  return lo_ok && hi_ok;
}

double small_mass_alpha_threshold(const DerivedParams& d) {
  const double s = d.sqrt_disc.real();
  return 4.0 / (3.0 * d.ell - 1.0 - s);
}

GammaRange admissible_gamma(const DerivedParams& d, double alpha, double delta,
                            const ModelParams& p) {
  if (!(alpha > 0.0)) throw Error(Errc::InvalidParams, "alpha must be positive");
  const double l = p.ell;
  GammaRange g;
  if (d.regime == MassRegime::LargeMass) {
    const bool massless_osc = d.M_big.value_or(0.0) == 0.0;
    const double crit = 3.0 * (l + 1.0) / (2.0 * (alpha + 1.0));
    if (alpha > (l + 3.0) / (2.0 * l)) {
      g.theorem_case = 'a';
      g.lower = crit;
      g.lower_strict = true;
      g.upper = l;
      g.upper_strict = massless_osc;
    } else if (alpha > 4.0 / (3.0 * l - 1.0)) {
      g.theorem_case = 'b';
      g.lower = 2.0 / alpha;
      g.lower_strict = false;
      g.upper = std::min(crit, l);
      g.upper_strict = massless_osc && crit >= l;
      g.log_correction = true;
    } else {
      throw Error(Errc::EmptyRange, "alpha below the large mass threshold");
    }
    if (g.lower > g.upper || (g.lower == g.upper && (g.lower_strict || g.upper_strict)))
      throw Error(Errc::EmptyRange, "empty gamma interval");
    return g;
  }
  const double thr = small_mass_alpha_threshold(d);
  if (!(alpha > thr)) throw Error(Errc::EmptyRange, "alpha below the small mass threshold");
  const double kp = 0.5 * (3.0 * l - 1.0 - d.sqrt_disc.real());
  g.theorem_case = 's';
  if (delta > 0.0) {
    g.upper = std::min(l, kp);
    g.upper_strict = false;
  } else if (kp <= l) {
    g.upper = kp;
    g.upper_strict = true;
  } else {
    g.upper = l;
    g.upper_strict = false;
  }
  return g;
}

std::string to_keyvalue(const ModelParams& p) {
  std::ostringstream os;
  os << "ell=" << fmt17(p.ell) << "\n"
     << "m_c=" << fmt17(p.m_c) << "\n"
     << "r_sch=" << fmt17(p.R_Sch) << "\n"
     << "r_id=" << fmt17(p.R_ID) << "\n"
     << "alpha_acc=" << fmt17(p.alpha_acc) << "\n"
     << "c=" << fmt17(p.c) << "\n";
  return os.str();
}

std::string to_keyvalue(const DerivedParams& d) {
  std::ostringstream os;
  os << "k_plus_re=" << fmt17(d.k_plus.real()) << "\n"
     << "k_plus_im=" << fmt17(d.k_plus.imag()) << "\n"
     << "k_minus_re=" << fmt17(d.k_minus.real()) << "\n"
     << "k_minus_im=" << fmt17(d.k_minus.imag()) << "\n"
     << "M_big=" << (d.M_big ? fmt17(*d.M_big) : std::string("none")) << "\n"
     << "regime=" << regime_name(d.regime) << "\n"
     << "A_inf=" << fmt17(d.A_inf) << "\n"
     << "phi_1=" << fmt17(d.phi_1) << "\n";
  return os.str();
}

}  // namespace kgbh
