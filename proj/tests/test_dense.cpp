#include <cmath>
#include <random>

#include "doctest.h"

#include "cfs/basis.hpp"
#include "cfs/dense.hpp"

using namespace cfs;

namespace {

Matrix identity(int n) {
  Matrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

std::vector<double> apply(const Matrix& A, const std::vector<double>& x) {
  std::vector<double> y(A.rows, 0.0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
  return y;
}

} // namespace

TEST_CASE("solve basics") {
  const SolveReport id = solve(identity(2), {3.0, 4.0});
  CHECK(id.solution == std::vector<double>{3.0, 4.0});
  CHECK(id.condition_estimate == doctest::Approx(1.0));

  Matrix D(2, 2);
  D(0, 0) = 2.0;
  D(1, 1) = 4.0;
  // Hand back-substitution: x = (0/2, -2/4).
  const SolveReport d = solve(D, {0.0, -2.0});
  CHECK(d.solution[0] == 0.0);
  CHECK(d.solution[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK_FALSE(d.ill_conditioned());

  Matrix singular(2, 2);
  singular(0, 0) = 1.0;
  singular(0, 1) = 2.0;
  singular(1, 0) = 2.0;
  singular(1, 1) = 4.0;
  CHECK_THROWS_AS(solve(singular, {1.0, 1.0}), SingularMatrixError);
}

TEST_CASE("random recovery up to 30x30") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n : {3, 8, 17, 30}) {
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = dist(rng) + (i == j ? 2.0 * n : 0.0);
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);
    const SolveReport rep = solve(A, apply(A, x));
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(rep.solution[i] - x[i]) <= 1e-9 * std::max(1.0, std::abs(x[i])));
  }
}

TEST_CASE("pivoting handles row exchanges beyond the first column") {
  // Regression: the sine-sine corner matrix needs interchanges at interior
  // elimination steps.
  const SmoothnessOrder r(3);
  const SupplementaryFamily2D fam = polynomial_family_corner(SeriesKind2D::SinSin, r, 1.0, 1.0);
  const Matrix R = build_corner_matrix(fam, SeriesKind2D::SinSin, r, 1.0, 1.0);
  std::vector<double> x(R.rows);
  for (int i = 0; i < R.rows; ++i) x[i] = 1.0 + 0.1 * i;
  const SolveReport rep = solve(R, apply(R, x));
  for (int i = 0; i < R.rows; ++i) CHECK(rep.solution[i] == doctest::Approx(x[i]).epsilon(1e-11));
}

TEST_CASE("solve residual bound") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 12;
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = dist(rng) + (i == j ? 4.0 : 0.0);
  std::vector<double> q(n);
  for (double& v : q) v = 10.0 * dist(rng);
  const SolveReport rep = solve(A, q);
  const std::vector<double> back = apply(A, rep.solution);
  double qmax = 0.0, res = 0.0;
  for (int i = 0; i < n; ++i) {
    qmax = std::max(qmax, std::abs(q[i]));
    res = std::max(res, std::abs(back[i] - q[i]));
  }
  CHECK(res <= 1e-10 * (1.0 + qmax));
}

TEST_CASE("solve_multi matches repeated solve bitwise") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 6;
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = dist(rng) + (i == j ? 3.0 : 0.0);
  std::vector<std::vector<double>> rhs(3, std::vector<double>(n));
  for (auto& q : rhs)
    for (double& v : q) v = dist(rng);
  const std::vector<SolveReport> multi = solve_multi(A, rhs);
  for (size_t i = 0; i < rhs.size(); ++i) {
    const SolveReport single = solve(A, rhs[i]);
    CHECK(multi[i].solution == single.solution);
  }
  // Identity matrix: solutions are the right-hand sides themselves.
  const std::vector<SolveReport> id = solve_multi(identity(3), {{1.0, 2.0, 3.0}, {0.0, -1.0, 5.0}});
  CHECK(id[0].solution == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(id[1].solution == std::vector<double>{0.0, -1.0, 5.0});
  // Linearity: doubling the RHS doubles the solution exactly.
  std::vector<double> twice = rhs[0];
  for (double& v : twice) v *= 2.0;
  const SolveReport sx = solve(A, rhs[0]);
  const SolveReport s2x = solve(A, twice);
  for (int i = 0; i < n; ++i) CHECK(s2x.solution[i] == 2.0 * sx.solution[i]);
}

TEST_CASE("transpose solve") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 9;
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = dist(rng) + (i == j ? 3.0 : 0.0);
  std::vector<double> x(n);
  for (double& v : x) v = dist(rng);
  std::vector<double> b(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) b[j] += A(i, j) * x[i];
  const LuFactorization lu(A);
  const std::vector<double> got = lu.solve_transposed(b);
  for (int i = 0; i < n; ++i) CHECK(got[i] == doctest::Approx(x[i]).epsilon(1e-12));
}
