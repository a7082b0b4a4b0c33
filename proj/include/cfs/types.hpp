#pragma once

#include <functional>
#include <vector>

#include "cfs/errors.hpp"

namespace cfs {

/// Smoothness parameter r; the expansion supports derivatives up to order 2r.
struct SmoothnessOrder {
  int r = 1;

  explicit SmoothnessOrder(int r_) : r(r_) {
    if (r < 1) throw ConfigError("smoothness order r must be >= 1");
  }
  int two_r() const { return 2 * r; }
};

enum class IntervalKind { Symmetric, Nonnegative };

/// Expansion interval: [-a,a] (Symmetric) or [0,a] (Nonnegative).
struct Domain1D {
  IntervalKind kind = IntervalKind::Symmetric;
  double a = 1.0;

  double lo() const { return kind == IntervalKind::Symmetric ? -a : 0.0; }
  double hi() const { return a; }
  double length() const { return hi() - lo(); }
};

Domain1D symmetric_interval(double a);
Domain1D nonnegative_interval(double a);

/// Expansion rectangle: [-a,a]x[-b,b] or [0,a]x[0,b].
struct Domain2D {
  IntervalKind kind = IntervalKind::Symmetric;
  double a = 1.0;
  double b = 1.0;

  Domain1D axis1() const { return Domain1D{kind, a}; }
  Domain1D axis2() const { return Domain1D{kind, b}; }
};

Domain2D symmetric_rectangle(double a, double b);
Domain2D nonnegative_rectangle(double a, double b);

enum class SeriesKind1D { FullRange, HalfCosine, HalfSine };
enum class SeriesKind2D { FullRange, CosCos, SinCos, CosSin, SinSin };

const char* to_string(SeriesKind1D kind);
const char* to_string(SeriesKind2D kind);

/// True for the kinds that ship supplementary families (FullRange, SinSin).
bool kind_constructible(SeriesKind2D kind);

/// Throws if the kind does not match the domain's interval kind.
void require_compatible(SeriesKind1D kind, const Domain1D& domain);
void require_compatible(SeriesKind2D kind, const Domain2D& domain);

/// Pair of partial-derivative orders (k1 along x1, k2 along x2).
struct MultiIndex {
  int k1 = 0;
  int k2 = 0;

  int grade() const { return k1 + k2; }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// All pairs with k1+k2 <= max_total, by ascending grade, k1 descending
/// within a grade. Length (max_total+1)(max_total+2)/2.
std::vector<MultiIndex> enumerate_graded(int max_total);

/// Exponent set of the sine-sine corner family: all (j,l) with
/// j+l <= 2r-1, plus the j+l = 2r entries with j (or l) running to
/// floor(r/2) (even r) or (r-1)/2 (odd r), plus (r,r) when r is odd.
std::vector<MultiIndex> enumerate_sinsin_corner_set(SmoothnessOrder r);

/// User-supplied function with exact derivatives: deriv(k, x) = u^(k)(x).
struct FunctionSpec1D {
  Domain1D domain;
  std::function<double(int k, double x)> deriv;

  double operator()(double x) const { return deriv(0, x); }
};

/// 2D analogue: deriv(k1, k2, x1, x2) = u^(k1,k2)(x1, x2).
struct FunctionSpec2D {
  Domain2D domain;
  std::function<double(int k1, int k2, double x1, double x2)> deriv;

  double operator()(double x1, double x2) const { return deriv(0, 0, x1, x2); }
};

/// Max mismatch between deriv(k,.) and a central finite difference of
/// deriv(k-1,.), over interior probe points and 1 <= k <= max_order.
/// Mismatch is |fd - exact| / max(1, |exact|); step h = 1e-4 * a.
double finite_difference_mismatch(const FunctionSpec1D& f, int max_order, int probes = 10);
double finite_difference_mismatch(const FunctionSpec2D& f, int max_order, int probes = 10);

} // namespace cfs
