#include "cfs/basis.hpp"

#include <cmath>

#include "cfs/quadrature.hpp"

namespace cfs {

double monomial_deriv(int p, int k, double x, double scale) {
  if (k > p) return 0.0;
  double coef = 1.0;
  for (int i = 0; i < k; ++i) coef *= (p - i);
  const double t = x / scale;
  return coef * int_pow(t, p - k) / int_pow(scale, k);
}

SupplementaryFamily1D polynomial_family_1d(SeriesKind1D kind, SmoothnessOrder r, double a) {
  if (!(a > 0.0)) throw ConfigError("polynomial_family_1d: a must be positive");
  const int two_r = r.two_r();
  SupplementaryFamily1D family;
  family.size = two_r;
  family.degrees.resize(two_r);
  const int offset = (kind == SeriesKind1D::HalfSine) ? 0 : 1;
  for (int j = 0; j < two_r; ++j) family.degrees[j] = j + offset;
  family.label = std::string("monomials (x/a)^j over ") + to_string(kind);
  const std::vector<int> degrees = family.degrees;
  family.eval = [degrees, a](int member, int k, double x) {
    return monomial_deriv(degrees[member], k, x, a);
  };
  return family;
}

SupplementaryFamily2D polynomial_family_corner(SeriesKind2D kind, SmoothnessOrder r, double a,
                                               double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("polynomial_family_corner: sides must be positive");
  if (!kind_constructible(kind))
    throw UnsupportedKindError("no corner family for this 2D series kind");
  SupplementaryFamily2D family;
  if (kind == SeriesKind2D::FullRange) {
    // Blocks 31/32/33 over j+l <= r-2, block 34 over j+l <= r-1.
    if (r.r >= 2) {
      const std::vector<MultiIndex> inner = enumerate_graded(r.r - 2);
      const int offsets[3][2] = {{2, 2}, {1, 2}, {2, 1}};
      for (const auto& off : offsets)
        for (const MultiIndex& jl : inner)
          family.exponents.push_back({2 * jl.k1 + off[0], 2 * jl.k2 + off[1]});
    }
    for (const MultiIndex& jl : enumerate_graded(r.r - 1))
      family.exponents.push_back({2 * jl.k1 + 1, 2 * jl.k2 + 1});
    family.label = "full-range corner monomial blocks";
  } else {
    family.exponents = enumerate_sinsin_corner_set(r);
    family.label = "sine-sine corner monomials";
  }
  family.size = static_cast<int>(family.exponents.size());
  const std::vector<MultiIndex> exps = family.exponents;
  family.eval = [exps, a, b](int member, int k1, int k2, double x1, double x2) {
    return monomial_deriv(exps[member].k1, k1, x1, a) * monomial_deriv(exps[member].k2, k2, x2, b);
  };
  return family;
}

std::vector<int> boundary_orders_1d(SeriesKind1D kind, SmoothnessOrder r) {
  std::vector<int> orders;
  switch (kind) {
    case SeriesKind1D::FullRange:
      for (int k = 0; k < r.two_r(); ++k) orders.push_back(k);
      break;
    case SeriesKind1D::HalfCosine:
      for (int k = 1; k < r.two_r(); k += 2) orders.push_back(k);
      break;
    case SeriesKind1D::HalfSine:
      for (int k = 0; k < r.two_r(); k += 2) orders.push_back(k);
      break;
  }
  return orders;
}

Matrix build_boundary_matrix_1d(const SupplementaryFamily1D& family, SeriesKind1D kind,
                                SmoothnessOrder r, double a) {
  if (family.size != r.two_r())
    throw ConfigError("boundary matrix: family size must equal 2r");
  const std::vector<int> orders = boundary_orders_1d(kind, r);
  Matrix R(family.size, family.size);
  if (kind == SeriesKind1D::FullRange) {
    for (size_t row = 0; row < orders.size(); ++row)
      for (int j = 0; j < family.size; ++j)
        R(static_cast<int>(row), j) = family.eval(j, orders[row], a) - family.eval(j, orders[row], -a);
  } else {
    const int half = static_cast<int>(orders.size());
    for (int row = 0; row < half; ++row)
      for (int j = 0; j < family.size; ++j) {
        R(row, j) = family.eval(j, orders[row], a);
        R(row + half, j) = family.eval(j, orders[row], 0.0);
      }
  }
  return R;
}

std::vector<std::pair<double, double>> corner_points(SeriesKind2D kind, double a, double b) {
  if (kind == SeriesKind2D::FullRange)
    return {{a, b}, {a, -b}, {-a, b}, {-a, -b}};
  return {{a, b}, {a, 0.0}, {0.0, b}, {0.0, 0.0}};
}

std::vector<MultiIndex> sinsin_corner_orders(SmoothnessOrder r) {
  std::vector<MultiIndex> orders;
  for (const MultiIndex& k : enumerate_graded(r.two_r() - 2))
    if (k.k1 % 2 == 0 && k.k2 % 2 == 0) orders.push_back(k);
  return orders;
}

Matrix build_corner_matrix(const SupplementaryFamily2D& family, SeriesKind2D kind,
                           SmoothnessOrder r, double a, double b) {
  if (!kind_constructible(kind))
    throw UnsupportedKindError("no corner system for this 2D series kind");
  if (kind == SeriesKind2D::FullRange) {
    const std::vector<MultiIndex> rows = enumerate_graded(r.two_r() - 2);
    if (family.size != static_cast<int>(rows.size()))
      throw ConfigError("corner matrix: family size mismatch");
    Matrix R(family.size, family.size);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < family.size; ++j) {
        const int k1 = rows[i].k1, k2 = rows[i].k2;
        R(static_cast<int>(i), j) = family.eval(j, k1, k2, a, b) - family.eval(j, k1, k2, a, -b) -
                                    family.eval(j, k1, k2, -a, b) + family.eval(j, k1, k2, -a, -b);
      }
    return R;
  }
  const std::vector<MultiIndex> orders = sinsin_corner_orders(r);
  const auto corners = corner_points(kind, a, b);
  if (family.size != static_cast<int>(orders.size() * corners.size()))
    throw ConfigError("corner matrix: family size mismatch");
  Matrix R(family.size, family.size);
  int row = 0;
  for (const auto& [cx, cy] : corners)
    for (const MultiIndex& k : orders) {
      for (int j = 0; j < family.size; ++j) R(row, j) = family.eval(j, k.k1, k.k2, cx, cy);
      ++row;
    }
  return R;
}

BasisOperator::BasisOperator(SupplementaryFamily1D family, const Matrix& R)
    : family_(std::move(family)), lu_(R) {
  if (R.rows != family_.size) throw ConfigError("basis operator: R size must match family");
}

std::vector<double> BasisOperator::basis_vector(int k, double x) const {
  std::vector<double> p(family_.size);
  for (int j = 0; j < family_.size; ++j) p[j] = family_.eval(j, k, x);
  return lu_.solve_transposed(p);
}

BasisOperator basis_operator(SupplementaryFamily1D family, const Matrix& R) {
  return BasisOperator(std::move(family), R);
}

CornerBasisOperator::CornerBasisOperator(SupplementaryFamily2D family, const Matrix& R)
    : family_(std::move(family)), lu_(R) {
  if (R.rows != family_.size) throw ConfigError("corner basis operator: R size must match family");
}

std::vector<double> CornerBasisOperator::basis_vector(int k1, int k2, double x1, double x2) const {
  std::vector<double> p(family_.size);
  for (int j = 0; j < family_.size; ++j) p[j] = family_.eval(j, k1, k2, x1, x2);
  return lu_.solve_transposed(p);
}

} // namespace cfs
