#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "cfs/samples.hpp"
#include "cfs/series1d.hpp"
#include "test_support.hpp"

using namespace cfs;

TEST_CASE("boundary data") {
  const SmoothnessOrder r(3);
  const SampleCase s1 = get_sample(1);
  const BoundaryData1D q1 = boundary_data_1d(s1.f1, SeriesKind1D::FullRange, r);
  CHECK(q1.q1 == std::vector<double>{0.0, -2.0, 12.0, 0.0, 0.0, 0.0});

  const SampleCase s3 = get_sample(3);
  const BoundaryData1D q3 = boundary_data_1d(s3.f1, SeriesKind1D::HalfSine, r);
  CHECK(q3.q1 == std::vector<double>{0.0, 5.0, 0.0, 0.5, -1.0, 0.0});

  const FunctionSpec1D constant{symmetric_interval(1.0), [](int k, double) {
                                  return k == 0 ? 3.25 : 0.0;
                                }};
  for (double v : boundary_data_1d(constant, SeriesKind1D::FullRange, r).q1) CHECK(v == 0.0);

  // Sample 2: differences of sin(pi x/2) derivatives; odd orders vanish.
  const SampleCase s2 = get_sample(2);
  const BoundaryData1D q2 = boundary_data_1d(s2.f1, SeriesKind1D::FullRange, r);
  const double c = std::numbers::pi / 2.0;
  CHECK(q2.q1[0] == doctest::Approx(2.0));
  CHECK(q2.q1[1] == 0.0);
  CHECK(q2.q1[2] == doctest::Approx(-2.0 * c * c));
  CHECK(q2.q1[3] == 0.0);
  CHECK(q2.q1[4] == doctest::Approx(2.0 * c * c * c * c));
  CHECK(q2.q1[5] == 0.0);
}

TEST_CASE("sample 1 build reproduces the constant-plus-cubic split") {
  const SampleCase s = get_sample(1);
  const CompositeSeries1D series = build_composite_1d(s.f1, s.kind1d, SmoothnessOrder(3), 40);
  const InternalCoefficients1D& q0 = series.internal_coefficients();
  CHECK(q0.cosine[0] == doctest::Approx(1.0).epsilon(1e-10));
  for (int m = 1; m <= 40; ++m) {
    CHECK(std::abs(q0.cosine[m]) < 1e-10);
    CHECK(std::abs(q0.sine[m]) < 1e-10);
  }
  // The boundary part alone is the cubic -x - x^2/2 + x^3.
  CHECK(series.boundary_part(0, 0.3) == doctest::Approx(-0.318).epsilon(1e-12));
}

TEST_CASE("zero function gives all-zero constants") {
  const FunctionSpec1D zero{symmetric_interval(1.0), [](int, double) { return 0.0; }};
  const CompositeSeries1D series = build_composite_1d(zero, SeriesKind1D::FullRange, SmoothnessOrder(2), 6);
  for (double v : series.boundary_constants()) CHECK(v == 0.0);
  for (double v : series.internal_coefficients().cosine) CHECK(v == 0.0);
  for (double v : series.internal_coefficients().sine) CHECK(v == 0.0);
}

TEST_CASE("sample 2 series evaluation") {
  const SampleCase s = get_sample(2);
  const CompositeSeries1D series = build_composite_1d(s.f1, s.kind1d, SmoothnessOrder(3), 40);
  CHECK(std::abs(series.evaluate(0, 0.0)) < 1e-10);
  // First derivative against a central finite difference of the series.
  const double h = 1e-5;
  const double fd = (series.evaluate(0, 0.5 + h) - series.evaluate(0, 0.5 - h)) / (2.0 * h);
  const double d1 = series.evaluate(1, 0.5);
  CHECK(std::abs(fd - d1) <= 1e-6 * std::max(1.0, std::abs(d1)));
  CHECK_THROWS_AS(series.evaluate(7, 0.0), OrderOutOfRangeError);
  CHECK_THROWS_AS(series.evaluate(-1, 0.0), OrderOutOfRangeError);
  CHECK(evaluate_1d(series, 0, 0.25) == series.evaluate(0, 0.25));
}

TEST_CASE("polynomial reproduction across kinds") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    // FullRange and HalfCosine reproduce degree 2r; HalfSine degree 2r-1.
    struct Case {
      SeriesKind1D kind;
      Domain1D domain;
      int degree;
    };
    const SmoothnessOrder r(3);
    const Case cases[] = {
        {SeriesKind1D::FullRange, symmetric_interval(1.0), 6},
        {SeriesKind1D::HalfCosine, nonnegative_interval(1.0), 6},
        {SeriesKind1D::HalfSine, nonnegative_interval(1.0), 5},
    };
    for (const Case& c : cases) {
      const FunctionSpec1D f =
          testing::poly_spec_1d(c.domain, testing::random_coefficients(rng, c.degree + 1));
      const CompositeSeries1D series = build_composite_1d(f, c.kind, r, 4);
      double worst = 0.0;
      for (int k = 0; k <= 6; ++k)
        for (int i = 0; i <= 100; ++i) {
          const double x = c.domain.lo() + i * c.domain.length() / 100.0;
          worst = std::max(worst, std::abs(series.evaluate(k, x) - f.deriv(k, x)));
        }
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("termwise differentiation consistency on the samples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pick(0.05, 0.95);
  for (int id : {1, 2, 3, 4}) {
    const SampleCase s = get_sample(id);
    const CompositeSeries1D series = build_composite_1d(s.f1, s.kind1d, SmoothnessOrder(3), 40);
    const double lo = s.f1.domain.lo(), len = s.f1.domain.length();
    for (int k = 1; k <= 6; ++k) {
      double scale = 1.0;
      for (int i = 0; i < 20; ++i) {
        const double x = lo + pick(rng) * len;
        scale = std::max(scale, std::abs(series.evaluate(k, x)));
      }
      for (int i = 0; i < 20; ++i) {
        const double x = lo + pick(rng) * len;
        const double h = 1e-5 * s.f1.domain.a;
        const double fd = (series.evaluate(k - 1, x + h) - series.evaluate(k - 1, x - h)) / (2.0 * h);
        CHECK(std::abs(fd - series.evaluate(k, x)) <= 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("residual boundary conditions hold for the samples") {
  for (int id : {1, 2, 3, 4}) {
    const SampleCase s = get_sample(id);
    const SmoothnessOrder r(3);
    const CompositeSeries1D series = build_composite_1d(s.f1, s.kind1d, r, 10);
    const double a = s.f1.domain.a;
    auto residual_deriv = [&](int k, double x) {
      return s.f1.deriv(k, x) - series.boundary_part(k, x);
    };
    for (int k : boundary_orders_1d(s.kind1d, r)) {
      const double scale = std::max(1.0, std::abs(s.f1.deriv(k, a)));
      if (s.kind1d == SeriesKind1D::FullRange)
        CHECK(std::abs(residual_deriv(k, a) - residual_deriv(k, -a)) <= 1e-8 * scale);
      else {
        CHECK(std::abs(residual_deriv(k, a)) <= 1e-8 * scale);
        CHECK(std::abs(residual_deriv(k, 0.0)) <= 1e-8 * scale);
      }
    }
  }
}
