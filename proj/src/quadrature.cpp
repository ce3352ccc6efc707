#include "kgbh/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

#include "kgbh/errors.hpp"

namespace kgbh {

namespace {

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx k = fc * wgk[7];
  cplx g = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const cplx f1 = f(c - dx), f2 = f(c + dx);
    k += wgk[j] * (f1 + f2);
    if (j % 2 == 1) g += wg[j / 2] * (f1 + f2);
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                        const QuadOptions& opt) {
  QuadResult res;
  if (a == b) return res;
  std::priority_queue<Segment> heap;
  Segment s0 = gk15(f, a, b);
  cplx total = s0.value;
  double err = s0.error;
  heap.push(s0);
  res.evaluations = 15;
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (res.subdivisions >= opt.max_subdivisions)
      throw Error(Errc::QuadratureFail, "subdivision cap reached");
    Segment s = heap.top();
    heap.pop();
    const double m = 0.5 * (s.a + s.b);
    Segment l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
    res.evaluations += 30;
    ++res.subdivisions;
    if (m == s.a || m == s.b) break;
  }
  // re-sum to shed accumulated rounding from the running updates
  cplx sum = 0.0;
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  res.value = sum;
  res.error = esum;
  return res;
}

QuadResult integrate_gk_real(const std::function<double(double)>& f, double a, double b,
                             const QuadOptions& opt) {
  return integrate_gk([&](double x) { return cplx(f(x), 0.0); }, a, b, opt);
}

const Rule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(r)).first->second;
}

Rule composite_rule(const std::vector<double>& breaks, int order) {
  const Rule& g = gauss_legendre(order);
  Rule r;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
      r.x.push_back(c + h * g.x[i]);
      r.w.push_back(h * g.w[i]);
    }
  }
  return r;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = a;
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  v[n - 1] = b;
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v(n);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) v[i] = std::exp(la + (lb - la) * i / std::max(1, n - 1));
  v[0] = a;
  v[n - 1] = b;
  return v;
}

}  // namespace kgbh
