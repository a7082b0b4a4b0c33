#include "cfs/direct.hpp"

#include <utility>

#include "cfs/trig_series.hpp"

namespace cfs {

DirectExpansion1D::DirectExpansion1D(SeriesKind1D kind, Domain1D domain, int truncation,
                                     std::vector<FourierCoefficients1D> per_order)
    : kind_(kind), domain_(domain), truncation_(truncation), per_order_(std::move(per_order)) {}

const FourierCoefficients1D& DirectExpansion1D::coefficients(int k) const {
  if (k < 0 || k >= static_cast<int>(per_order_.size()))
    throw OrderNotBuiltError("direct expansion: order was not built");
  return per_order_[k];
}

double DirectExpansion1D::evaluate(int k, double x) const {
  return trig_series_value(coefficients(k), domain_, 0, x);
}

namespace {

// The series a derivative order "corresponds" to: termwise differentiation
// of a half-range basis alternates sine and cosine with the order's parity;
// the full-range basis maps to itself.
SeriesKind1D direct_kind_for_order(SeriesKind1D kind, int k) {
  if (kind == SeriesKind1D::FullRange || k % 2 == 0) return kind;
  return kind == SeriesKind1D::HalfSine ? SeriesKind1D::HalfCosine : SeriesKind1D::HalfSine;
}

} // namespace

DirectExpansion1D build_direct_1d(const FunctionSpec1D& f, SeriesKind1D kind, SmoothnessOrder r,
                                  int truncation, const QuadratureRule& rule) {
  if (truncation < 0) throw ConfigError("build_direct_1d: truncation must be >= 0");
  require_compatible(kind, f.domain);
  std::vector<FourierCoefficients1D> per_order;
  per_order.reserve(r.two_r() + 1);
  for (int k = 0; k <= r.two_r(); ++k) {
    auto g = [&f, k](double x) { return f.deriv(k, x); };
    per_order.push_back(
        fourier_coefficients_1d(g, direct_kind_for_order(kind, k), f.domain, truncation, rule));
  }
  return DirectExpansion1D(kind, f.domain, truncation, std::move(per_order));
}

DirectExpansion2D::DirectExpansion2D(SeriesKind2D kind, Domain2D domain, int M, int N,
                                     std::vector<FourierCoefficients2D> per_order, int max_total)
    : kind_(kind), domain_(domain), M_(M), N_(N), per_order_(std::move(per_order)),
      max_total_(max_total) {}

int DirectExpansion2D::order_slot(int k1, int k2) const {
  if (k1 < 0 || k2 < 0 || k1 + k2 > max_total_)
    throw OrderNotBuiltError("direct expansion: order was not built");
  // Graded layout with k1 descending inside a grade.
  const int g = k1 + k2;
  return g * (g + 1) / 2 + (g - k1);
}

const FourierCoefficients2D& DirectExpansion2D::coefficients(int k1, int k2) const {
  return per_order_[order_slot(k1, k2)];
}

double DirectExpansion2D::evaluate(int k1, int k2, double x1, double x2) const {
  return trig_series_value(coefficients(k1, k2), domain_, 0, 0, x1, x2);
}

std::vector<double> DirectExpansion2D::evaluate_grid(int k1, int k2, const std::vector<double>& xs,
                                                     const std::vector<double>& ys) const {
  return trig_series_grid(coefficients(k1, k2), domain_, 0, 0, xs, ys);
}

DirectExpansion2D build_direct_2d(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r,
                                  int M, int N, const QuadratureRule& rule) {
  if (M < 0 || N < 0) throw ConfigError("build_direct_2d: truncations must be >= 0");
  require_compatible(kind, f.domain);
  if (!kind_constructible(kind))
    throw UnsupportedKindError("build_direct_2d: kind has no coefficient extraction");
  std::vector<FourierCoefficients2D> per_order;
  const std::vector<MultiIndex> orders = enumerate_graded(r.two_r());
  per_order.reserve(orders.size());
  for (const MultiIndex& k : orders) {
    auto g = [&f, &k](double x1, double x2) { return f.deriv(k.k1, k.k2, x1, x2); };
    if (kind == SeriesKind2D::FullRange) {
      per_order.push_back(fourier_coefficients_2d(g, kind, f.domain, M, N, rule));
    } else {
      // Parity-matched half-range series per axis (cosine for odd orders).
      per_order.push_back(
          half_range_coefficients_2d(g, k.k1 % 2 == 1, k.k2 % 2 == 1, f.domain, M, N, rule));
    }
  }
  return DirectExpansion2D(kind, f.domain, M, N, std::move(per_order), r.two_r());
}

double evaluate_direct(const DirectExpansion1D& d, int k, double x) { return d.evaluate(k, x); }

double evaluate_direct(const DirectExpansion2D& d, int k1, int k2, double x1, double x2) {
  return d.evaluate(k1, k2, x1, x2);
}

} // namespace cfs
