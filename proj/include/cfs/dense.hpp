#pragma once

#include <span>
#include <vector>

#include "cfs/errors.hpp"

namespace cfs {

/// Small dense row-major matrix.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int rows_, int cols_) : rows(rows_), cols(cols_), data(static_cast<size_t>(rows_) * cols_, 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

struct SolveReport {
  std::vector<double> solution;
  double condition_estimate = 0.0;

  bool ill_conditioned() const { return condition_estimate > 1e12; }
};

/// Partial-pivoting LU of a square matrix with an exact 1-norm condition
/// number (computed from n extra triangular solves; sizes here are <= ~40).
/// Elimination never mixes rows across structurally-zero pivot columns, so
/// exact zero blocks of checkerboard-sparse constraint matrices survive into
/// the solution (parity-pure boundary data yields exactly zero cross-parity
/// constants).
class LuFactorization {
public:
  explicit LuFactorization(const Matrix& A);

  /// Solve A x = rhs with one step of iterative refinement.
  std::vector<double> solve(std::span<const double> rhs) const;
  /// Solve A^T x = rhs.
  std::vector<double> solve_transposed(std::span<const double> rhs) const;

  double condition_estimate() const { return condition_; }
  int size() const { return n_; }

private:
  std::vector<double> substitute(std::span<const double> rhs) const;

  int n_ = 0;
  Matrix lu_;
  Matrix original_;
  std::vector<int> pivot_;
  double condition_ = 0.0;
};

/// One-shot solve of R a = q.
SolveReport solve(const Matrix& R, const std::vector<double>& q);

/// Shared factorization across several right-hand sides; each entry is
/// bitwise identical to the corresponding one-shot solve.
std::vector<SolveReport> solve_multi(const Matrix& R, const std::vector<std::vector<double>>& rhs);

} // namespace cfs
