#pragma once

#include <string>
#include <utility>

#include "cfs/dense.hpp"
#include "cfs/types.hpp"

namespace cfs {

/// Ordered list of smooth supplementary functions on an interval.
/// eval(member, k, x) is the exact k-th derivative of member (0-based).
struct SupplementaryFamily1D {
  int size = 0;
  std::string label;
  std::function<double(int member, int k, double x)> eval;
  /// Monomial degrees when the family is polynomial (used for fast paths);
  /// empty for user-supplied non-polynomial families.
  std::vector<int> degrees;
};

/// 2D corner family; eval(member, k1, k2, x1, x2).
struct SupplementaryFamily2D {
  int size = 0;
  std::string label;
  std::function<double(int member, int k1, int k2, double x1, double x2)> eval;
  /// (j,l) exponent pairs of (x1/a)^j (x2/b)^l members when polynomial.
  std::vector<MultiIndex> exponents;
};

/// Monomial families of Table-row defaults:
///   FullRange/HalfCosine: (x/a)^j, j = 1..2r;
///   HalfSine:             (x/a)^(j-1), j = 1..2r.
SupplementaryFamily1D polynomial_family_1d(SeriesKind1D kind, SmoothnessOrder r, double a);

/// Corner families:
///   FullRange: the four blocks with exponents (2j+2,2l+2), (2j+1,2l+2),
///              (2j+2,2l+1) over j+l <= r-2 and (2j+1,2l+1) over j+l <= r-1;
///   SinSin:    (x1/a)^j (x2/b)^l over the sine-sine corner exponent set.
SupplementaryFamily2D polynomial_family_corner(SeriesKind2D kind, SmoothnessOrder r, double a,
                                               double b);

/// Constraint matrix of the 1D boundary system R a = q.
/// Rows: FullRange   p^(k)(a) - p^(k)(-a), k = 0..2r-1;
///       HalfCosine  p^(k)(a) for odd k = 1,3,..,2r-1, then the same at 0;
///       HalfSine    p^(k)(a) for even k = 0,2,..,2r-2, then the same at 0.
Matrix build_boundary_matrix_1d(const SupplementaryFamily1D& family, SeriesKind1D kind,
                                SmoothnessOrder r, double a);

/// Constraint matrix of the corner system.
/// FullRange rows: four-corner alternating sums for (k1,k2) in graded order
/// over k1+k2 <= 2r-2. SinSin rows: per-corner values for even-even (k1,k2)
/// with k1+k2 <= 2r-2, corner-major over (a,b), (a,0), (0,b), (0,0).
Matrix build_corner_matrix(const SupplementaryFamily2D& family, SeriesKind2D kind,
                           SmoothnessOrder r, double a, double b);

/// Derivative orders constrained by the 1D system, in row order.
std::vector<int> boundary_orders_1d(SeriesKind1D kind, SmoothnessOrder r);

/// Corner points in the fixed order used for SinSin rows.
std::vector<std::pair<double, double>> corner_points(SeriesKind2D kind, double a, double b);

/// Even-even derivative pairs with k1+k2 <= 2r-2 (SinSin per-corner rows).
std::vector<MultiIndex> sinsin_corner_orders(SmoothnessOrder r);

/// Family paired with the factored constraint matrix: the basis vector is
/// Phi^(k)(x) = R^{-T} p^(k)(x) and constants are a = R^{-1} q.
class BasisOperator {
public:
  BasisOperator(SupplementaryFamily1D family, const Matrix& R);

  int size() const { return family_.size; }
  double condition() const { return lu_.condition_estimate(); }
  const SupplementaryFamily1D& family() const { return family_; }

  std::vector<double> basis_vector(int k, double x) const;
  std::vector<double> constants_for(std::span<const double> q) const { return lu_.solve(q); }

private:
  SupplementaryFamily1D family_;
  LuFactorization lu_;
};

BasisOperator basis_operator(SupplementaryFamily1D family, const Matrix& R);

class CornerBasisOperator {
public:
  CornerBasisOperator(SupplementaryFamily2D family, const Matrix& R);

  int size() const { return family_.size; }
  double condition() const { return lu_.condition_estimate(); }
  const SupplementaryFamily2D& family() const { return family_; }

  std::vector<double> basis_vector(int k1, int k2, double x1, double x2) const;
  std::vector<double> constants_for(std::span<const double> q) const { return lu_.solve(q); }

private:
  SupplementaryFamily2D family_;
  LuFactorization lu_;
};

/// Derivative of a scaled monomial: d^k/dx^k (x/s)^p.
double monomial_deriv(int p, int k, double x, double scale);

} // namespace cfs
