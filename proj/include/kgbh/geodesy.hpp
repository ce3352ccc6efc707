#pragma once

#include "kgbh/params.hpp"

namespace kgbh {

struct GeodesicState {
  double t = 1.0;
  double r = 0.0;
  double clearance = 0.0;  // r - R_Sch
  double residual = 0.0;   // of the implicit equation at r
};

// Ingoing radial null geodesic starting at R_ID at t = 1. t = +inf gives the limit radius.
GeodesicState radial_geodesic(double t, const ModelParams& p);

// Residual of R_ID - r - R_Sch ln(1 - (R_ID - r)/(R_ID - R_Sch)) - A at the given r.
double geodesic_residual(double r, double lookback_value, const ModelParams& p);

double min_clearance(const ModelParams& p);

double inner_support_radius(double t, const ModelParams& p);

}  // namespace kgbh
