#pragma once

#include <memory>
#include <vector>

#include "kgbh/field.hpp"
#include "kgbh/params.hpp"

namespace kgbh {

// Quintic smoothstep: 0 below R + eps/2, 1 above R + eps. eps = 0 disables the cutoff.
double aux_cutoff(double r, double R_Sch, double eps);
// 1 - chi(r) R_Sch / r
double aux_F(double r, double R_Sch, double eps);

// (c/alpha)^2 [F^2 v_rr + (2/r)(1 - R/(2r)) F v_r] with central differences, one-sided at the ends.
ComplexField apply_A_radial(const ComplexField& v, const ModelParams& p, double eps = 0.0);
// F^{3/2} (sqrt(F) v)_rr + sqrt(F) (2/r)(1 - R/(2r)) (sqrt(F) v)_r
ComplexField apply_A32_radial(const ComplexField& v, const ModelParams& p, double eps = 0.0);

// Sum u w* r^2 h over interior nodes.
cplx weighted_inner(const ComplexField& u, const ComplexField& w);

// 1/2 sum (|v_t|^2 / F + F |v_r|^2) r^2 h on radial grids; 1/2 sum (|v_t|^2 + |v_x|^2) h on
// periodic grids (fourth-order gradient).
double energy(const ComplexField& v, const ComplexField& vt, const ModelParams& p, double eps = 0.0);

class SpatialOperator {
 public:
  virtual ~SpatialOperator() = default;
  virtual const RadialGrid& grid() const = 0;
  virtual void apply(const std::vector<cplx>& v, std::vector<cplx>& out) const = 0;
  virtual double max_speed() const = 0;
  virtual int stencil_width() const = 0;
};

class PeriodicOperator final : public SpatialOperator {
 public:
  // speed^2 d^2/dx^2 on a periodic grid, order 2 or 4
  PeriodicOperator(const RadialGrid& g, int order, double speed = 1.0);
  const RadialGrid& grid() const override { return g_; }
  void apply(const std::vector<cplx>& v, std::vector<cplx>& out) const override;
  double max_speed() const override { return speed_; }
  int stencil_width() const override { return order_ / 2; }

 private:
  RadialGrid g_;
  int order_;
  double speed_;
};

class RadialOperator final : public SpatialOperator {
 public:
  RadialOperator(const RadialGrid& g, const ModelParams& p, double eps = 0.0);
  const RadialGrid& grid() const override { return g_; }
  void apply(const std::vector<cplx>& v, std::vector<cplx>& out) const override;
  double max_speed() const override { return speed_; }
  int stencil_width() const override { return 1; }

 private:
  RadialGrid g_;
  std::vector<double> c2_, c1_;
  double speed_;
};

double default_dt(const SpatialOperator& op);

struct EvolveOptions {
  std::vector<double> sample_times;  // empty: every step
  double dt = 0.0;                   // <= 0: 0.4 h / max speed
  bool check_support = true;
  bool check_energy = false;
  ModelParams params;  // for the energy diagnostic
  double eps = 0.0;
};

// Method of lines with classical RK4 on (v, v_t); periodic grids wrap, radial grids
// keep the end nodes frozen. Stores v and v_t at the sample times.
Trajectory evolve(const SpatialOperator& op, const ComplexField& f, const ComplexField& g, double T,
                  const EvolveOptions& opt = {});

// v_tt = A v with data (f, 0) on a radial grid.
Trajectory ee_evolve(const ComplexField& f, double T, const ModelParams& p, double dt,
                     const std::vector<double>& sample_times = {}, double eps = 0.0);

struct SuperposeTerm {
  const ComplexField* f = nullptr;
  std::vector<double> s;
  std::vector<cplx> c;
};

// Wave evolution v_ss = A v, v(0) = f, v_s(0) = 0 as used by the integral transform.
class Propagator {
 public:
  virtual ~Propagator() = default;
  virtual const RadialGrid& grid() const = 0;
  // For each weight set c: sum_j c_j v_f(., s_j). Nodes s_j >= 0.
  virtual std::vector<ComplexField> superpose(const ComplexField& f, const std::vector<double>& s,
                                              const std::vector<std::vector<cplx>>& c) const = 0;
  ComplexField superpose(const ComplexField& f, const std::vector<double>& s,
                         const std::vector<cplx>& c) const;
  ComplexField at(const ComplexField& f, double s) const;
  // Sum over terms of superpose(f, s, c).
  virtual ComplexField superpose_sum(const std::vector<SuperposeTerm>& terms) const;
};

// Exact solution of v_ss = speed^2 v_xx on a periodic grid by Fourier multipliers.
class SpectralPropagator final : public Propagator {
 public:
  explicit SpectralPropagator(const RadialGrid& g, double speed = 1.0);
  const RadialGrid& grid() const override { return g_; }
  using Propagator::superpose;
  std::vector<ComplexField> superpose(const ComplexField& f, const std::vector<double>& s,
                                      const std::vector<std::vector<cplx>>& c) const override;
  ComplexField superpose_sum(const std::vector<SuperposeTerm>& terms) const override;

 private:
  // acc[k] += sum_j c_j cos(xi_k speed s_j)
  void add_multiplier(std::vector<cplx>& acc, const std::vector<double>& s, const std::vector<cplx>& c) const;

  RadialGrid g_;
  double speed_;
  std::vector<double> xi_;
};

// RK4 evolution of a spatial operator; values between steps by cubic Hermite interpolation.
class FDPropagator final : public Propagator {
 public:
  explicit FDPropagator(std::shared_ptr<const SpatialOperator> op, double dt = 0.0);
  const RadialGrid& grid() const override { return op_->grid(); }
  using Propagator::superpose;
  std::vector<ComplexField> superpose(const ComplexField& f, const std::vector<double>& s,
                                      const std::vector<std::vector<cplx>>& c) const override;

 private:
  std::shared_ptr<const SpatialOperator> op_;
  double dt_;
};

}  // namespace kgbh
