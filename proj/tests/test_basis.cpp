#include <cmath>

#include "doctest.h"

#include "cfs/basis.hpp"

using namespace cfs;

TEST_CASE("1D polynomial families") {
  const SupplementaryFamily1D full = polynomial_family_1d(SeriesKind1D::FullRange, SmoothnessOrder(3), 1.0);
  CHECK(full.size == 6);
  CHECK(full.eval(1, 0, 0.5) == doctest::Approx(0.25)); // member index 1 is (x/a)^2
  const SupplementaryFamily1D sine = polynomial_family_1d(SeriesKind1D::HalfSine, SmoothnessOrder(3), 1.0);
  CHECK(sine.eval(0, 0, 0.37) == 1.0); // first member is the constant
  CHECK(sine.degrees.front() == 0);
  CHECK(sine.degrees.back() == 5);
  const SupplementaryFamily1D scaled = polynomial_family_1d(SeriesKind1D::FullRange, SmoothnessOrder(1), 2.0);
  CHECK(scaled.eval(1, 1, 2.0) == doctest::Approx(1.0)); // d/dx (x/2)^2 at x=2
}

TEST_CASE("1D family derivative consistency") {
  for (SeriesKind1D kind : {SeriesKind1D::FullRange, SeriesKind1D::HalfCosine, SeriesKind1D::HalfSine}) {
    const SupplementaryFamily1D fam = polynomial_family_1d(kind, SmoothnessOrder(2), 1.3);
    const double h = 1e-5;
    for (int j = 0; j < fam.size; ++j)
      for (int k = 1; k <= 4; ++k)
        for (double x : {0.2, 0.61, 1.0}) {
          const double fd = (fam.eval(j, k - 1, x + h) - fam.eval(j, k - 1, x - h)) / (2.0 * h);
          const double exact = fam.eval(j, k, x);
          CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
  }
}

TEST_CASE("corner families") {
  CHECK(polynomial_family_corner(SeriesKind2D::FullRange, SmoothnessOrder(3), 1.0, 1.0).size == 15);
  CHECK(polynomial_family_corner(SeriesKind2D::SinSin, SmoothnessOrder(3), 1.0, 1.0).size == 24);
  const SupplementaryFamily2D tiny = polynomial_family_corner(SeriesKind2D::FullRange, SmoothnessOrder(1), 1.0, 1.0);
  CHECK(tiny.size == 1);
  CHECK(tiny.exponents[0] == MultiIndex{1, 1});
  CHECK(tiny.eval(0, 0, 0, 0.5, 0.25) == doctest::Approx(0.125));
  CHECK_THROWS_AS(polynomial_family_corner(SeriesKind2D::SinCos, SmoothnessOrder(2), 1.0, 1.0),
                  UnsupportedKindError);
}

TEST_CASE("boundary matrices") {
  const SmoothnessOrder r1(1);
  const SupplementaryFamily1D full = polynomial_family_1d(SeriesKind1D::FullRange, r1, 1.0);
  const Matrix Rf = build_boundary_matrix_1d(full, SeriesKind1D::FullRange, r1, 1.0);
  CHECK(Rf(0, 0) == 2.0);
  CHECK(Rf(0, 1) == 0.0);
  CHECK(Rf(1, 0) == 0.0);
  CHECK(Rf(1, 1) == 4.0);

  const SupplementaryFamily1D hs = polynomial_family_1d(SeriesKind1D::HalfSine, r1, 1.0);
  const Matrix Rs = build_boundary_matrix_1d(hs, SeriesKind1D::HalfSine, r1, 1.0);
  CHECK(Rs(0, 0) == 1.0);
  CHECK(Rs(0, 1) == 1.0);
  CHECK(Rs(1, 0) == 1.0);
  CHECK(Rs(1, 1) == 0.0);
}

TEST_CASE("full-range r=3 boundary system reproduces the sample-1 constants") {
  const SmoothnessOrder r(3);
  const SupplementaryFamily1D fam = polynomial_family_1d(SeriesKind1D::FullRange, r, 1.0);
  const Matrix R = build_boundary_matrix_1d(fam, SeriesKind1D::FullRange, r, 1.0);
  const SolveReport rep = solve(R, {0.0, -2.0, 12.0, 0.0, 0.0, 0.0});
  const std::vector<double> want = {-1.0, -0.5, 1.0, 0.0, 0.0, 0.0};
  for (int j = 0; j < 6; ++j) CHECK(rep.solution[j] == doctest::Approx(want[j]).epsilon(1e-12));
  // Basis-weighted boundary data evaluates the cubic -x - x^2/2 + x^3.
  const BasisOperator op = basis_operator(fam, R);
  const std::vector<double> phi = op.basis_vector(0, 0.3);
  const std::vector<double> q1 = {0.0, -2.0, 12.0, 0.0, 0.0, 0.0};
  double value = 0.0;
  for (int j = 0; j < 6; ++j) value += phi[j] * q1[j];
  CHECK(value == doctest::Approx(-0.318).epsilon(1e-12));
}

TEST_CASE("corner matrices") {
  const SupplementaryFamily2D tiny = polynomial_family_corner(SeriesKind2D::FullRange, SmoothnessOrder(1), 1.0, 1.0);
  const Matrix R1 = build_corner_matrix(tiny, SeriesKind2D::FullRange, SmoothnessOrder(1), 1.0, 1.0);
  CHECK(R1.rows == 1);
  CHECK(R1(0, 0) == 4.0);

  const SupplementaryFamily2D f2 = polynomial_family_corner(SeriesKind2D::FullRange, SmoothnessOrder(2), 1.0, 1.0);
  const Matrix R2 = build_corner_matrix(f2, SeriesKind2D::FullRange, SmoothnessOrder(2), 1.0, 1.0);
  CHECK(R2.rows == 6);
  const LuFactorization lu(R2); // nonsingular
  CHECK(lu.condition_estimate() < 1e8);
}

TEST_CASE("basis operator with identity matrix returns the family") {
  SupplementaryFamily1D fam = polynomial_family_1d(SeriesKind1D::FullRange, SmoothnessOrder(1), 1.0);
  Matrix I(2, 2);
  I(0, 0) = I(1, 1) = 1.0;
  const BasisOperator op = basis_operator(fam, I);
  const std::vector<double> phi = op.basis_vector(0, 0.7);
  CHECK(phi[0] == doctest::Approx(0.7));
  CHECK(phi[1] == doctest::Approx(0.49));
}

TEST_CASE("interpolation property of every default basis") {
  // Applying the constraint rows to the basis vector gives the identity.
  for (int rr = 1; rr <= 4; ++rr) {
    const SmoothnessOrder r(rr);
    for (SeriesKind1D kind :
         {SeriesKind1D::FullRange, SeriesKind1D::HalfCosine, SeriesKind1D::HalfSine}) {
      const double a = 1.0;
      const SupplementaryFamily1D fam = polynomial_family_1d(kind, r, a);
      const Matrix R = build_boundary_matrix_1d(fam, kind, r, a);
      const BasisOperator op = basis_operator(fam, R);
      CHECK(op.condition() < 1e10);
      const std::vector<int> orders = boundary_orders_1d(kind, r);
      int row = 0;
      auto check_row = [&](const std::vector<double>& l_of_phi) {
        for (int j = 0; j < fam.size; ++j) {
          const double want = (j == row) ? 1.0 : 0.0;
          CHECK(std::abs(l_of_phi[j] - want) <= 1e-9);
        }
        ++row;
      };
      if (kind == SeriesKind1D::FullRange) {
        for (int k : orders) {
          std::vector<double> l = op.basis_vector(k, a);
          const std::vector<double> at_lo = op.basis_vector(k, -a);
          for (int j = 0; j < fam.size; ++j) l[j] -= at_lo[j];
          check_row(l);
        }
      } else {
        for (int k : orders) check_row(op.basis_vector(k, a));
        for (int k : orders) check_row(op.basis_vector(k, 0.0));
      }
    }
    for (SeriesKind2D kind : {SeriesKind2D::FullRange, SeriesKind2D::SinSin}) {
      const double a = 1.0, b = 1.0;
      const SupplementaryFamily2D fam = polynomial_family_corner(kind, r, a, b);
      const Matrix R = build_corner_matrix(fam, kind, r, a, b);
      const CornerBasisOperator op(fam, R);
      CHECK(op.condition() < 1e10);
      int row = 0;
      auto check_row = [&](const std::vector<double>& l_of_phi) {
        for (int j = 0; j < fam.size; ++j) {
          const double want = (j == row) ? 1.0 : 0.0;
          CHECK(std::abs(l_of_phi[j] - want) <= 1e-9);
        }
        ++row;
      };
      if (kind == SeriesKind2D::FullRange) {
        for (const MultiIndex& k : enumerate_graded(r.two_r() - 2)) {
          std::vector<double> l = op.basis_vector(k.k1, k.k2, a, b);
          const std::vector<double> t2 = op.basis_vector(k.k1, k.k2, a, -b);
          const std::vector<double> t3 = op.basis_vector(k.k1, k.k2, -a, b);
          const std::vector<double> t4 = op.basis_vector(k.k1, k.k2, -a, -b);
          for (int j = 0; j < fam.size; ++j) l[j] += -t2[j] - t3[j] + t4[j];
          check_row(l);
        }
      } else {
        for (const auto& [cx, cy] : corner_points(kind, a, b))
          for (const MultiIndex& k : sinsin_corner_orders(r))
            check_row(op.basis_vector(k.k1, k.k2, cx, cy));
      }
    }
  }
}
