#pragma once

#include <vector>

#include "cfs/quadrature.hpp"

namespace cfs {

/// Value of the k-times termwise-differentiated 1D partial sum at x,
/// with the kind's mu_m weights applied.
double trig_series_value(const FourierCoefficients1D& q, const Domain1D& domain, int k, double x);

/// 2D analogue with lambda_mn weights; (k1,k2) = (0,0) gives the plain sum.
double trig_series_value(const FourierCoefficients2D& q, const Domain2D& domain, int k1, int k2,
                         double x1, double x2);

/// Batched 2D evaluation on a tensor grid; result is xs.size() x ys.size(),
/// row-major. Matches trig_series_value up to reassociation.
std::vector<double> trig_series_grid(const FourierCoefficients2D& q, const Domain2D& domain,
                                     int k1, int k2, const std::vector<double>& xs,
                                     const std::vector<double>& ys);

} // namespace cfs
