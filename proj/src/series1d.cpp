#include "cfs/series1d.hpp"

#include <utility>

#include "cfs/trig_series.hpp"

namespace cfs {

CompositeSeries1D::CompositeSeries1D(SmoothnessOrder r, SeriesKind1D kind, Domain1D domain,
                                     SupplementaryFamily1D family,
                                     std::vector<double> boundary_constants, BoundaryData1D q1,
                                     InternalCoefficients1D q0, int truncation, double r_condition)
    : r_(r),
      kind_(kind),
      domain_(domain),
      family_(std::move(family)),
      a1_(std::move(boundary_constants)),
      q1_(std::move(q1)),
      q0_(std::move(q0)),
      truncation_(truncation),
      r_condition_(r_condition) {}

double CompositeSeries1D::boundary_part(int k, double x) const {
  double acc = 0.0;
  for (int j = 0; j < family_.size; ++j) acc += a1_[j] * family_.eval(j, k, x);
  return acc;
}

double CompositeSeries1D::internal_part(int k, double x) const {
  return trig_series_value(q0_, domain_, k, x);
}

double CompositeSeries1D::evaluate(int k, double x) const {
  if (k < 0 || k > r_.two_r()) throw OrderOutOfRangeError("evaluate: k must lie in 0..2r");
  return internal_part(k, x) + boundary_part(k, x);
}

BoundaryData1D boundary_data_1d(const FunctionSpec1D& f, SeriesKind1D kind, SmoothnessOrder r) {
  require_compatible(kind, f.domain);
  const std::vector<int> orders = boundary_orders_1d(kind, r);
  BoundaryData1D q;
  if (kind == SeriesKind1D::FullRange) {
    q.q1.reserve(orders.size());
    for (int k : orders) q.q1.push_back(f.deriv(k, f.domain.a) - f.deriv(k, -f.domain.a));
  } else {
    q.q1.reserve(2 * orders.size());
    for (int k : orders) q.q1.push_back(f.deriv(k, f.domain.a));
    for (int k : orders) q.q1.push_back(f.deriv(k, 0.0));
  }
  return q;
}

CompositeSeries1D build_composite_1d(const FunctionSpec1D& f, SeriesKind1D kind, SmoothnessOrder r,
                                     int truncation, const QuadratureRule& rule) {
  if (truncation < 0) throw ConfigError("build_composite_1d: truncation must be >= 0");
  require_compatible(kind, f.domain);
  SupplementaryFamily1D family = polynomial_family_1d(kind, r, f.domain.a);
  const Matrix R = build_boundary_matrix_1d(family, kind, r, f.domain.a);
  LuFactorization lu(R);
  BoundaryData1D q1 = boundary_data_1d(f, kind, r);
  std::vector<double> a1 = lu.solve(q1.q1);

  const SupplementaryFamily1D& fam = family;
  auto residual = [&f, &fam, &a1](double x) {
    double phi1 = 0.0;
    for (int j = 0; j < fam.size; ++j) phi1 += a1[j] * fam.eval(j, 0, x);
    return f.deriv(0, x) - phi1;
  };
  InternalCoefficients1D q0 = fourier_coefficients_1d(residual, kind, f.domain, truncation, rule);
  return CompositeSeries1D(r, kind, f.domain, std::move(family), std::move(a1), std::move(q1),
                           std::move(q0), truncation, lu.condition_estimate());
}

double evaluate_1d(const CompositeSeries1D& s, int k, double x) { return s.evaluate(k, x); }

} // namespace cfs
