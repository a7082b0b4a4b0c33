#include <cmath>
#include <numbers>

#include "doctest.h"

#include "cfs/error_metrics.hpp"
#include "cfs/samples.hpp"
#include "cfs/series1d.hpp"
#include "test_support.hpp"

using namespace cfs;

TEST_CASE("sample values") {
  CHECK(get_sample(1).f1.deriv(0, 0.0) == doctest::Approx(0.5));
  CHECK(get_sample(2).f1.deriv(0, 1.0) == doctest::Approx(1.0)); // sin(pi/2)
  CHECK(get_sample(5).f2.deriv(1, 1, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(get_sample(4).f1.deriv(0, 0.0) == doctest::Approx(1.0)); // cos(0)
  CHECK_THROWS_AS(get_sample(0), UnknownSampleError);
  CHECK_THROWS_AS(get_sample(9), UnknownSampleError);
}

TEST_CASE("kind assignments") {
  CHECK(get_sample(1).kind1d == SeriesKind1D::FullRange);
  CHECK(get_sample(2).kind1d == SeriesKind1D::FullRange);
  CHECK(get_sample(3).kind1d == SeriesKind1D::HalfSine);
  CHECK(get_sample(4).kind1d == SeriesKind1D::HalfSine);
  CHECK(get_sample(5).kind2d == SeriesKind2D::FullRange);
  CHECK(get_sample(6).kind2d == SeriesKind2D::FullRange);
  CHECK(get_sample(7).kind2d == SeriesKind2D::SinSin);
  CHECK(get_sample(8).kind2d == SeriesKind2D::SinSin);
  for (int id = 1; id <= 4; ++id) CHECK_FALSE(get_sample(id).two_dim);
  for (int id = 5; id <= 8; ++id) CHECK(get_sample(id).two_dim);
}

TEST_CASE("finite-difference consistency of every sample") {
  for (int id = 1; id <= 8; ++id) {
    const SampleCase s = get_sample(id);
    const double worst = s.two_dim ? finite_difference_mismatch(s.f2, kSampleMaxOrder)
                                   : finite_difference_mismatch(s.f1, kSampleMaxOrder);
    CHECK(worst < 1e-5);
  }
}

namespace {

// sin(pi x / 2a) on [-a, a] with exact derivatives.
FunctionSpec1D scaled_sine(double a) {
  const double c = std::numbers::pi / (2.0 * a);
  return FunctionSpec1D{symmetric_interval(a), [c](int k, double x) {
                          double amp = 1.0;
                          for (int i = 0; i < k; ++i) amp *= c;
                          switch (k % 4) {
                            case 0: return amp * std::sin(c * x);
                            case 1: return amp * std::cos(c * x);
                            case 2: return -amp * std::sin(c * x);
                            default: return -amp * std::cos(c * x);
                          }
                        }};
}

} // namespace

TEST_CASE("normalized errors are scale invariant") {
  // The same sine profile expanded over a = 1 and a = 2 produces identical
  // normalized error indexes.
  const SmoothnessOrder r(3);
  const FunctionSpec1D f1 = scaled_sine(1.0);
  const FunctionSpec1D f2 = scaled_sine(2.0);
  const CompositeSeries1D s1 = build_composite_1d(f1, SeriesKind1D::FullRange, r, 10);
  const CompositeSeries1D s2 = build_composite_1d(f2, SeriesKind1D::FullRange, r, 10);
  const SamplingGrid1D g1 = make_grid(f1.domain, 51);
  const SamplingGrid1D g2 = make_grid(f2.domain, 51);
  for (int k = 0; k <= 4; ++k) {
    for (Subset subset : {Subset::All, Subset::Interior}) {
      const double e1 =
          single_component_error([&s1, k](double x) { return s1.evaluate(k, x); }, f1, k, g1, subset);
      const double e2 =
          single_component_error([&s2, k](double x) { return s2.evaluate(k, x); }, f2, k, g2, subset);
      CHECK(std::abs(e1 - e2) <= 1e-12);
    }
  }
}
