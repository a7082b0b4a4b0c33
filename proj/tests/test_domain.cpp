#include <algorithm>
#include <set>

#include "doctest.h"

#include "cfs/samples.hpp"
#include "cfs/types.hpp"

using namespace cfs;

TEST_CASE("graded enumeration order and length") {
  CHECK(enumerate_graded(0) == std::vector<MultiIndex>{{0, 0}});
  // Brute-force oracle: all pairs sorted by (grade, -k1).
  for (int p = 0; p <= 10; ++p) {
    std::vector<MultiIndex> oracle;
    for (int k1 = 0; k1 <= p; ++k1)
      for (int k2 = 0; k2 + k1 <= p; ++k2) oracle.push_back({k1, k2});
    std::sort(oracle.begin(), oracle.end(), [](const MultiIndex& a, const MultiIndex& b) {
      if (a.grade() != b.grade()) return a.grade() < b.grade();
      return a.k1 > b.k1;
    });
    const std::vector<MultiIndex> got = enumerate_graded(p);
    CHECK(got.size() == static_cast<size_t>((p + 1) * (p + 2) / 2));
    CHECK(got == oracle);
    std::set<std::pair<int, int>> unique;
    for (const MultiIndex& k : got) unique.emplace(k.k1, k.k2);
    CHECK(unique.size() == got.size());
  }
  const std::vector<MultiIndex> two = enumerate_graded(2);
  CHECK(two == std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  CHECK(enumerate_graded(4).size() == 15);
}

TEST_CASE("sine-sine corner exponent set") {
  auto as_set = [](const std::vector<MultiIndex>& v) {
    std::set<std::pair<int, int>> s;
    for (const MultiIndex& k : v) s.emplace(k.k1, k.k2);
    REQUIRE(s.size() == v.size());
    return s;
  };
  // r = 1 (odd): j+l <= 1 plus (1,1).
  CHECK(as_set(enumerate_sinsin_corner_set(SmoothnessOrder(1))) ==
        std::set<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  // r = 2 (even): j+l <= 3 plus (1,3) and (3,1).
  std::set<std::pair<int, int>> want2;
  for (const MultiIndex& k : enumerate_graded(3)) want2.emplace(k.k1, k.k2);
  want2.emplace(1, 3);
  want2.emplace(3, 1);
  const auto got2 = as_set(enumerate_sinsin_corner_set(SmoothnessOrder(2)));
  CHECK(got2 == want2);
  CHECK(got2.size() == 12);
  CHECK(enumerate_sinsin_corner_set(SmoothnessOrder(3)).size() == 24);
  // The family size always matches the even-even corner constraint count.
  for (int r = 1; r <= 5; ++r)
    CHECK(enumerate_sinsin_corner_set(SmoothnessOrder(r)).size() ==
          static_cast<size_t>(2 * r * (r + 1)));
}

TEST_CASE("domains and kind compatibility") {
  CHECK(symmetric_interval(2.0).lo() == -2.0);
  CHECK(nonnegative_interval(2.0).lo() == 0.0);
  CHECK_THROWS_AS(symmetric_interval(0.0), ConfigError);
  CHECK_THROWS_AS(nonnegative_rectangle(1.0, -1.0), ConfigError);
  CHECK_NOTHROW(require_compatible(SeriesKind1D::FullRange, symmetric_interval(1.0)));
  CHECK_THROWS_AS(require_compatible(SeriesKind1D::FullRange, nonnegative_interval(1.0)),
                  ConfigError);
  CHECK_THROWS_AS(require_compatible(SeriesKind1D::HalfSine, symmetric_interval(1.0)), ConfigError);
  CHECK(kind_constructible(SeriesKind2D::FullRange));
  CHECK(kind_constructible(SeriesKind2D::SinSin));
  CHECK_FALSE(kind_constructible(SeriesKind2D::CosCos));
  CHECK_FALSE(kind_constructible(SeriesKind2D::SinCos));
  CHECK_FALSE(kind_constructible(SeriesKind2D::CosSin));
  CHECK_THROWS_AS(SmoothnessOrder(0), ConfigError);
}

TEST_CASE("finite-difference consistency of function specs") {
  const SampleCase s2 = get_sample(2);
  CHECK(finite_difference_mismatch(s2.f1, kSampleMaxOrder) < 1e-5);
  const SampleCase s6 = get_sample(6);
  CHECK(finite_difference_mismatch(s6.f2, kSampleMaxOrder) < 1e-5);
  // A deliberately wrong derivative is caught.
  FunctionSpec1D bad{symmetric_interval(1.0), [](int k, double x) {
                       if (k == 0) return x * x;
                       if (k == 1) return x; // should be 2x
                       return k == 2 ? 2.0 : 0.0;
                     }};
  CHECK(finite_difference_mismatch(bad, 2) > 1e-2);
}
