#include "cfs/dense.hpp"

#include <cmath>

namespace cfs {

namespace {

double max_abs(const Matrix& A) {
  double m = 0.0;
  for (double v : A.data) m = std::max(m, std::abs(v));
  return m;
}

double one_norm(const Matrix& A) {
  double norm = 0.0;
  for (int j = 0; j < A.cols; ++j) {
    double col = 0.0;
    for (int i = 0; i < A.rows; ++i) col += std::abs(A(i, j));
    norm = std::max(norm, col);
  }
  return norm;
}

} // namespace

LuFactorization::LuFactorization(const Matrix& A) : n_(A.rows), lu_(A), original_(A), pivot_(A.rows) {
  if (A.rows != A.cols) throw ConfigError("LU requires a square matrix");
  const double tiny = 1e-14 * max_abs(A);
  for (int col = 0; col < n_; ++col) {
    int p = col;
    for (int i = col + 1; i < n_; ++i)
      if (std::abs(lu_(i, col)) > std::abs(lu_(p, col))) p = i;
    if (std::abs(lu_(p, col)) <= tiny)
      throw SingularMatrixError("singular constraint matrix (pivot below threshold)");
    pivot_[col] = p;
    if (p != col)
      for (int j = 0; j < n_; ++j) std::swap(lu_(col, j), lu_(p, j));
    const double inv = 1.0 / lu_(col, col);
    for (int i = col + 1; i < n_; ++i) {
      const double m = lu_(i, col) * inv;
      lu_(i, col) = m;
      if (m != 0.0)
        for (int j = col + 1; j < n_; ++j) lu_(i, j) -= m * lu_(col, j);
    }
  }
  // Exact 1-norm of the inverse, column by column.
  double inv_norm = 0.0;
  std::vector<double> e(n_, 0.0);
  for (int j = 0; j < n_; ++j) {
    e[j] = 1.0;
    std::vector<double> col = substitute(e);
    e[j] = 0.0;
    double sum = 0.0;
    for (double v : col) sum += std::abs(v);
    inv_norm = std::max(inv_norm, sum);
  }
  condition_ = one_norm(original_) * inv_norm;
}

std::vector<double> LuFactorization::substitute(std::span<const double> rhs) const {
  std::vector<double> x(rhs.begin(), rhs.end());
  // P A = L U: permute the right-hand side first, then the triangular solves.
  for (int col = 0; col < n_; ++col) std::swap(x[col], x[pivot_[col]]);
  for (int col = 0; col < n_; ++col) {
    for (int i = col + 1; i < n_; ++i)
      if (lu_(i, col) != 0.0) x[i] -= lu_(i, col) * x[col];
  }
  for (int i = n_ - 1; i >= 0; --i) {
    for (int j = i + 1; j < n_; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
  if (static_cast<int>(rhs.size()) != n_) throw ConfigError("solve: rhs length mismatch");
  std::vector<double> x = substitute(rhs);
  std::vector<double> residual(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = rhs[i];
    for (int j = 0; j < n_; ++j) acc -= original_(i, j) * x[j];
    residual[i] = acc;
  }
  std::vector<double> dx = substitute(residual);
  for (int i = 0; i < n_; ++i) x[i] += dx[i];
  return x;
}

std::vector<double> LuFactorization::solve_transposed(std::span<const double> rhs) const {
  if (static_cast<int>(rhs.size()) != n_) throw ConfigError("solve_transposed: rhs length mismatch");
  // A = P^T L U, so A^T x = rhs means U^T y = rhs, L^T z = y, x = P^T z.
  std::vector<double> x(rhs.begin(), rhs.end());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < i; ++j) x[i] -= lu_(j, i) * x[j];
    x[i] /= lu_(i, i);
  }
  for (int i = n_ - 1; i >= 0; --i)
    for (int j = i + 1; j < n_; ++j) x[i] -= lu_(j, i) * x[j];
  for (int col = n_ - 1; col >= 0; --col) std::swap(x[col], x[pivot_[col]]);
  return x;
}

SolveReport solve(const Matrix& R, const std::vector<double>& q) {
  LuFactorization lu(R);
  return SolveReport{lu.solve(q), lu.condition_estimate()};
}

std::vector<SolveReport> solve_multi(const Matrix& R, const std::vector<std::vector<double>>& rhs) {
  LuFactorization lu(R);
  std::vector<SolveReport> out;
  out.reserve(rhs.size());
  for (const auto& q : rhs) out.push_back(SolveReport{lu.solve(q), lu.condition_estimate()});
  return out;
}

} // namespace cfs
