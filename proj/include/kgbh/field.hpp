#pragma once

#include <complex>
#include <vector>

namespace kgbh {

using cplx = std::complex<double>;

// Uniform grid. Non-periodic: n nodes including both ends. Periodic: n nodes on
// [r_min, r_max), the node r_max being identified with r_min.
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 1.0;
  int n = 16;
  bool periodic = false;

  double h() const { return periodic ? (r_max - r_min) / n : (r_max - r_min) / (n - 1); }
  double r(int i) const { return r_min + i * h(); }
  double length() const { return r_max - r_min; }
  std::vector<double> nodes() const;
  bool operator==(const RadialGrid& o) const = default;
};

RadialGrid make_radial_grid(double r_min, double r_max, int n);
RadialGrid make_periodic_grid(double x_min, double x_max, int n);

struct ComplexField {
  RadialGrid grid;
  std::vector<cplx> values;

  ComplexField() = default;
  explicit ComplexField(const RadialGrid& g) : grid(g), values(g.n, cplx(0.0)) {}
  ComplexField(const RadialGrid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {}

  int size() const { return static_cast<int>(values.size()); }
  cplx& operator[](int i) { return values[i]; }
  const cplx& operator[](int i) const { return values[i]; }

  // First and last node with |v| > thresh * max|v|; (-1, -1) for the zero field.
  std::pair<int, int> support(double thresh = 1e-12) const;

  ComplexField& operator+=(const ComplexField& o);
  ComplexField& operator-=(const ComplexField& o);
  ComplexField& operator*=(cplx a);
};

ComplexField operator+(ComplexField a, const ComplexField& b);
ComplexField operator-(ComplexField a, const ComplexField& b);
ComplexField operator*(cplx a, ComplexField f);

// Discrete L2 norm sqrt(h sum |v|^2), and the r^2-weighted variant.
double l2_norm(const ComplexField& f);
double l2_norm_r2(const ComplexField& f);
double max_abs(const ComplexField& f);

template <class F>
ComplexField sample_field(const RadialGrid& g, F&& fn) {
  ComplexField f(g);
  for (int i = 0; i < g.n; ++i) f[i] = fn(g.r(i));
  return f;
}

// Time-indexed fields with optional time derivatives (Hermite interpolation when present).
struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexField> fields;
  std::vector<ComplexField> rates;

  void push(double t, ComplexField v);
  void push(double t, ComplexField v, ComplexField vt);
  bool empty() const { return times.empty(); }
  std::size_t size() const { return times.size(); }
  // Cubic Hermite in time when rates are stored, else cubic Lagrange on the
  // four nearest samples. Throws MissingTrajectorySamples outside the range.
  ComplexField at(double t) const;
};

// Standard profiles used by the CLI and tests.
enum class Profile { Gaussian, Bump, Sine };
Profile parse_profile(const std::string& s);
double profile_value(Profile p, double x, double center, double width);
ComplexField make_profile(const RadialGrid& g, Profile p, double center, double width, double amplitude);

}  // namespace kgbh
