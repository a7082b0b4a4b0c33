#pragma once

#include "cfs/basis.hpp"
#include "cfs/quadrature.hpp"

namespace cfs {

/// Constraint right-hand side q1 (length 2r), in boundary_orders_1d row order.
struct BoundaryData1D {
  std::vector<double> q1;
};

using InternalCoefficients1D = FourierCoefficients1D;

/// Immutable composite expansion u ~ phi0 + phi1 with derivative evaluation
/// for k = 0..2r: u^(k)(x) = Phi0^(k)T q0 + Phi1^(k)T q1.
class CompositeSeries1D {
public:
  CompositeSeries1D(SmoothnessOrder r, SeriesKind1D kind, Domain1D domain,
                    SupplementaryFamily1D family, std::vector<double> boundary_constants,
                    BoundaryData1D q1, InternalCoefficients1D q0, int truncation,
                    double r_condition);

  double evaluate(int k, double x) const;
  double boundary_part(int k, double x) const;
  double internal_part(int k, double x) const;

  SmoothnessOrder order() const { return r_; }
  SeriesKind1D kind() const { return kind_; }
  const Domain1D& domain() const { return domain_; }
  int truncation() const { return truncation_; }
  const BoundaryData1D& boundary_data() const { return q1_; }
  const InternalCoefficients1D& internal_coefficients() const { return q0_; }
  const std::vector<double>& boundary_constants() const { return a1_; }
  double constraint_condition() const { return r_condition_; }

private:
  SmoothnessOrder r_;
  SeriesKind1D kind_;
  Domain1D domain_;
  SupplementaryFamily1D family_;
  std::vector<double> a1_;
  BoundaryData1D q1_;
  InternalCoefficients1D q0_;
  int truncation_ = 0;
  double r_condition_ = 0.0;
};

/// Boundary values of Eq-style constraints: FullRange takes differences
/// u^(k)(a) - u^(k)(-a) for k = 0..2r-1; half-range kinds take the
/// constrained-order values at x = a then at x = 0.
BoundaryData1D boundary_data_1d(const FunctionSpec1D& f, SeriesKind1D kind, SmoothnessOrder r);

CompositeSeries1D build_composite_1d(const FunctionSpec1D& f, SeriesKind1D kind, SmoothnessOrder r,
                                     int truncation, const QuadratureRule& rule = {});

double evaluate_1d(const CompositeSeries1D& s, int k, double x);

} // namespace cfs
