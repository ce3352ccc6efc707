#include "kgbh/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kgbh/errors.hpp"

namespace kgbh {

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = r(i);
  return x;
}

RadialGrid make_radial_grid(double r_min, double r_max, int n) {
  if (n < 16) throw Error(Errc::GridTooCoarse, "grid needs at least 16 nodes");
  if (!(r_max > r_min)) throw Error(Errc::InvalidParams, "empty grid interval");
  return RadialGrid{r_min, r_max, n, false};
}

RadialGrid make_periodic_grid(double x_min, double x_max, int n) {
  if (n < 16) throw Error(Errc::GridTooCoarse, "grid needs at least 16 nodes");
  if (!(x_max > x_min)) throw Error(Errc::InvalidParams, "empty grid interval");
  return RadialGrid{x_min, x_max, n, true};
}

std::pair<int, int> ComplexField::support(double thresh) const {
  const double m = max_abs(*this);
  if (m == 0.0) return {-1, -1};
  int lo = 0, hi = size() - 1;
  while (std::abs(values[lo]) <= thresh * m) ++lo;
  while (std::abs(values[hi]) <= thresh * m) --hi;
  return {lo, hi};
}

ComplexField& ComplexField::operator+=(const ComplexField& o) {
  for (int i = 0; i < size(); ++i) values[i] += o.values[i];
  return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& o) {
  for (int i = 0; i < size(); ++i) values[i] -= o.values[i];
  return *this;
}

ComplexField& ComplexField::operator*=(cplx a) {
  for (auto& v : values) v *= a;
  return *this;
}

ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
ComplexField operator*(cplx a, ComplexField f) { return f *= a; }

double l2_norm(const ComplexField& f) {
  double s = 0.0;
  for (const auto& v : f.values) s += std::norm(v);
  return std::sqrt(s * f.grid.h());
}

double l2_norm_r2(const ComplexField& f) {
  double s = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double r = f.grid.r(i);
    s += std::norm(f[i]) * r * r;
  }
  return std::sqrt(s * f.grid.h());
}

double max_abs(const ComplexField& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

void Trajectory::push(double t, ComplexField v) {
  if (!times.empty() && !(t > times.back()))
    throw Error(Errc::InvalidParams, "trajectory times must increase");
  times.push_back(t);
  fields.push_back(std::move(v));
}

void Trajectory::push(double t, ComplexField v, ComplexField vt) {
  push(t, std::move(v));
  rates.push_back(std::move(vt));
}

ComplexField Trajectory::at(double t) const {
  if (times.empty() || t < times.front() || t > times.back())
    throw Error(Errc::MissingTrajectorySamples, "time outside trajectory range");
  auto it = std::upper_bound(times.begin(), times.end(), t);
  std::size_t k = it == times.begin() ? 0 : static_cast<std::size_t>(it - times.begin()) - 1;
  if (k + 1 >= times.size()) return fields.back();
  if (t == times[k]) return fields[k];
  const RadialGrid& g = fields[k].grid;
  ComplexField out(g);
  if (rates.size() == times.size()) {
    const double h = times[k + 1] - times[k];
    const double s = (t - times[k]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    for (int i = 0; i < g.n; ++i)
      out[i] = h00 * fields[k][i] + h10 * h * rates[k][i] + h01 * fields[k + 1][i] +
               h11 * h * rates[k + 1][i];
    return out;
  }
  if (times.size() < 4) {
    const double s = (t - times[k]) / (times[k + 1] - times[k]);
    for (int i = 0; i < g.n; ++i) out[i] = (1 - s) * fields[k][i] + s * fields[k + 1][i];
    return out;
  }
  std::size_t j0 = k == 0 ? 0 : k - 1;
  if (j0 + 3 >= times.size()) j0 = times.size() - 4;
  double w[4];
  for (int a = 0; a < 4; ++a) {
    w[a] = 1.0;
    for (int b = 0; b < 4; ++b)
      if (a != b) w[a] *= (t - times[j0 + b]) / (times[j0 + a] - times[j0 + b]);
  }
  for (int i = 0; i < g.n; ++i) {
    cplx v = 0.0;
    for (int a = 0; a < 4; ++a) v += w[a] * fields[j0 + a][i];
    out[i] = v;
  }
  return out;
}

Profile parse_profile(const std::string& s) {
  if (s == "gaussian") return Profile::Gaussian;
  if (s == "bump") return Profile::Bump;
  if (s == "sine") return Profile::Sine;
  throw Error(Errc::ConfigError, "unknown profile '" + s + "'");
}

double profile_value(Profile p, double x, double center, double width) {
  const double y = (x - center) / width;
  switch (p) {
    case Profile::Gaussian: return std::exp(-0.5 * y * y);
    case Profile::Bump: return std::abs(y) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - y * y)) : 0.0;
    case Profile::Sine: return std::sin(x);
  }
  return 0.0;
}

ComplexField make_profile(const RadialGrid& g, Profile p, double center, double width,
                          double amplitude) {
  return sample_field(g, [&](double x) { return cplx(amplitude * profile_value(p, x, center, width)); });
}

}  // namespace kgbh
