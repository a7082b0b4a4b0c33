#include <cmath>

#include "doctest.h"

#include "cfs/error_metrics.hpp"

using namespace cfs;

TEST_CASE("grid construction and counts") {
  const SamplingGrid2D g101 = make_grid(symmetric_rectangle(1.0, 1.0), 101, 101);
  CHECK(g101.total_count() == 10201);
  CHECK(g101.interior_count() == 9801);
  CHECK(g101.boundary_count() == 396);
  CHECK(g101.corner_count() == 4);

  const SamplingGrid2D g3 = make_grid(symmetric_rectangle(1.0, 1.0), 3, 3);
  CHECK(g3.total_count() == 9);
  CHECK(g3.interior_count() == 1);
  CHECK(g3.boundary_count() == 4);
  CHECK(g3.corner_count() == 4);

  const SamplingGrid1D g5 = make_grid(symmetric_interval(1.0), 5);
  CHECK(g5.points == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK(g5.boundary_count() == 2);
  CHECK(g5.is_boundary(0));
  CHECK(g5.is_boundary(4));
  CHECK_FALSE(g5.is_boundary(2));
  CHECK_THROWS_AS(make_grid(symmetric_interval(1.0), 2), ConfigError);
}

TEST_CASE("single-component error definition") {
  const FunctionSpec1D f{symmetric_interval(1.0), [](int k, double x) {
                           return k == 0 ? 2.0 + x : (k == 1 ? 1.0 : 0.0);
                         }};
  const SamplingGrid1D grid = make_grid(f.domain, 11);
  // Exact approximation: zero error.
  CHECK(single_component_error([&f](double x) { return f.deriv(0, x); }, f, 0, grid, Subset::All) ==
        0.0);
  // Constant absolute offset delta: error = delta / u_max everywhere.
  const double delta = 0.03;
  const double u_max = 3.0; // max |2 + x| on the grid
  for (Subset s : {Subset::All, Subset::Interior, Subset::Boundary}) {
    const double e = single_component_error([&f, delta](double x) { return f.deriv(0, x) + delta; },
                                            f, 0, grid, s);
    CHECK(e == doctest::Approx(delta / u_max).epsilon(1e-14));
  }
  CHECK_THROWS_AS(single_component_error([](double) { return 0.0; }, f, 2, grid, Subset::All),
                  DegenerateNormalizerError);
  CHECK_THROWS_AS(single_component_error([](double) { return 0.0; }, f, 0, grid, Subset::Corner),
                  ConfigError);
}

TEST_CASE("2D subset decomposition is exact") {
  const FunctionSpec2D f{symmetric_rectangle(1.0, 1.0), [](int k1, int k2, double x1, double x2) {
                           return k1 == 0 && k2 == 0 ? std::cos(x1) * (2.0 + x2) : 1.0;
                         }};
  const SamplingGrid2D grid = make_grid(f.domain, 7, 9);
  const int n1 = grid.n1(), n2 = grid.n2();
  std::vector<double> approx(static_cast<size_t>(n1) * n2), exact(approx.size());
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      exact[static_cast<size_t>(i) * n2 + j] = f.deriv(0, 0, grid.x1[i], grid.x2[j]);
      approx[static_cast<size_t>(i) * n2 + j] =
          exact[static_cast<size_t>(i) * n2 + j] + 0.01 * std::sin(3.0 * i + j);
    }
  const ComponentErrors e = component_errors(approx, exact, grid);
  // Independently recompute the raw subset sums and recombine.
  double si = 0.0, sb = 0.0, sc = 0.0, umax = 0.0;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      umax = std::max(umax, std::abs(exact[static_cast<size_t>(i) * n2 + j]));
      const double d = std::abs(approx[static_cast<size_t>(i) * n2 + j] -
                                exact[static_cast<size_t>(i) * n2 + j]);
      switch (grid.classify(i, j)) {
        case Subset::Interior: si += d; break;
        case Subset::Boundary: sb += d; break;
        default: sc += d; break;
      }
    }
  CHECK(e.interior == si / (grid.interior_count() * umax));
  CHECK(e.boundary == sb / (grid.boundary_count() * umax));
  CHECK(e.corner == sc / (grid.corner_count() * umax));
  CHECK(e.overall == (si + sb + sc) / (grid.total_count() * umax));
}

TEST_CASE("aggregates") {
  // All singles equal: every aggregate equals the common value.
  std::vector<std::pair<MultiIndex, double>> singles;
  for (const MultiIndex& k : enumerate_graded(4)) singles.emplace_back(k, 0.125);
  CHECK(aggregate_errors(singles, 3, AggregateMode::OrderP, true) == doctest::Approx(0.125));
  CHECK(aggregate_errors(singles, 4, AggregateMode::UpToP, true) == doctest::Approx(0.125));

  // Mixed values: check Eq-style definitions directly.
  std::vector<std::pair<MultiIndex, double>> mixed;
  double value = 1.0;
  for (const MultiIndex& k : enumerate_graded(3)) {
    mixed.emplace_back(k, value);
    value *= 0.5;
  }
  double order2 = 0.0;
  int count = 0;
  for (const auto& [k, v] : mixed)
    if (k.grade() == 2) {
      order2 += v;
      ++count;
    }
  order2 /= count;
  CHECK(aggregate_errors(mixed, 2, AggregateMode::OrderP, true) == doctest::Approx(order2).epsilon(1e-15));

  // Recomposition identity: ||e||^p == (2/((p+1)(p+2))) sum (q+1)|e|^q, exactly.
  for (int p = 0; p <= 3; ++p) {
    double acc = 0.0;
    for (int q = 0; q <= p; ++q)
      acc += (q + 1) * aggregate_errors(mixed, q, AggregateMode::OrderP, true);
    const double recomposed = 2.0 * acc / ((p + 1) * (p + 2));
    CHECK(aggregate_errors(mixed, p, AggregateMode::UpToP, true) == recomposed);
  }

  // 1D: order-p is the single component; up-to-p averages k = 0..p.
  std::vector<std::pair<MultiIndex, double>> singles1d;
  for (int k = 0; k <= 3; ++k) singles1d.emplace_back(MultiIndex{k, 0}, 0.1 * (k + 1));
  CHECK(aggregate_errors(singles1d, 2, AggregateMode::OrderP, false) == doctest::Approx(0.3));
  CHECK(aggregate_errors(singles1d, 3, AggregateMode::UpToP, false) == doctest::Approx(0.25));

  CHECK_THROWS_AS(aggregate_errors(singles1d, 5, AggregateMode::OrderP, false),
                  MissingComponentError);
}
