#include "cfs/types.hpp"

#include <cmath>

namespace cfs {

Domain1D symmetric_interval(double a) {
  if (!(a > 0.0)) throw ConfigError("interval half-width must be positive");
  return Domain1D{IntervalKind::Symmetric, a};
}

Domain1D nonnegative_interval(double a) {
  if (!(a > 0.0)) throw ConfigError("interval length must be positive");
  return Domain1D{IntervalKind::Nonnegative, a};
}

Domain2D symmetric_rectangle(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("rectangle half-widths must be positive");
  return Domain2D{IntervalKind::Symmetric, a, b};
}

Domain2D nonnegative_rectangle(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("rectangle side lengths must be positive");
  return Domain2D{IntervalKind::Nonnegative, a, b};
}

const char* to_string(SeriesKind1D kind) {
  switch (kind) {
    case SeriesKind1D::FullRange: return "full_range";
    case SeriesKind1D::HalfCosine: return "half_cosine";
    case SeriesKind1D::HalfSine: return "half_sine";
  }
  return "?";
}

const char* to_string(SeriesKind2D kind) {
  switch (kind) {
    case SeriesKind2D::FullRange: return "full_range";
    case SeriesKind2D::CosCos: return "cos_cos";
    case SeriesKind2D::SinCos: return "sin_cos";
    case SeriesKind2D::CosSin: return "cos_sin";
    case SeriesKind2D::SinSin: return "sin_sin";
  }
  return "?";
}

bool kind_constructible(SeriesKind2D kind) {
  return kind == SeriesKind2D::FullRange || kind == SeriesKind2D::SinSin;
}

void require_compatible(SeriesKind1D kind, const Domain1D& domain) {
  const bool need_symmetric = (kind == SeriesKind1D::FullRange);
  const bool is_symmetric = (domain.kind == IntervalKind::Symmetric);
  if (need_symmetric != is_symmetric)
    throw ConfigError("series kind does not match the interval kind");
}

void require_compatible(SeriesKind2D kind, const Domain2D& domain) {
  const bool need_symmetric = (kind == SeriesKind2D::FullRange);
  const bool is_symmetric = (domain.kind == IntervalKind::Symmetric);
  if (need_symmetric != is_symmetric)
    throw ConfigError("series kind does not match the domain kind");
}

std::vector<MultiIndex> enumerate_graded(int max_total) {
  if (max_total < 0) throw ConfigError("enumerate_graded: max_total must be >= 0");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<size_t>((max_total + 1) * (max_total + 2) / 2));
  for (int grade = 0; grade <= max_total; ++grade)
    for (int k1 = grade; k1 >= 0; --k1) out.push_back({k1, grade - k1});
  return out;
}

std::vector<MultiIndex> enumerate_sinsin_corner_set(SmoothnessOrder r) {
  const int two_r = r.two_r();
  std::vector<MultiIndex> out = enumerate_graded(two_r - 1);
  const int cap = (r.r % 2 == 0) ? r.r / 2 : (r.r - 1) / 2;
  for (int j = 1; j <= cap; ++j) out.push_back({j, two_r - j});
  for (int l = 1; l <= cap; ++l) out.push_back({two_r - l, l});
  if (r.r % 2 == 1) out.push_back({r.r, r.r});
  return out;
}

namespace {

double fd_denominator(double exact) { return std::max(1.0, std::abs(exact)); }

} // namespace

double finite_difference_mismatch(const FunctionSpec1D& f, int max_order, int probes) {
  const double h = 1e-4 * f.domain.a;
  const double lo = f.domain.lo(), len = f.domain.length();
  double worst = 0.0;
  for (int k = 1; k <= max_order; ++k) {
    for (int i = 0; i < probes; ++i) {
      const double x = lo + (i + 0.5) * len / probes;
      const double fd = (f.deriv(k - 1, x + h) - f.deriv(k - 1, x - h)) / (2.0 * h);
      const double exact = f.deriv(k, x);
      worst = std::max(worst, std::abs(fd - exact) / fd_denominator(exact));
    }
  }
  return worst;
}

double finite_difference_mismatch(const FunctionSpec2D& f, int max_order, int probes) {
  const double h1 = 1e-4 * f.domain.a;
  const double h2 = 1e-4 * f.domain.b;
  const double lo1 = f.domain.axis1().lo(), len1 = f.domain.axis1().length();
  const double lo2 = f.domain.axis2().lo(), len2 = f.domain.axis2().length();
  double worst = 0.0;
  for (const MultiIndex& k : enumerate_graded(max_order)) {
    if (k.grade() == 0) continue;
    for (int i = 0; i < probes; ++i) {
      const double x1 = lo1 + (i + 0.5) * len1 / probes;
      const double x2 = lo2 + ((probes - 1 - i) + 0.5) * len2 / probes;
      const double exact = f.deriv(k.k1, k.k2, x1, x2);
      double fd;
      if (k.k1 > 0)
        fd = (f.deriv(k.k1 - 1, k.k2, x1 + h1, x2) - f.deriv(k.k1 - 1, k.k2, x1 - h1, x2)) /
             (2.0 * h1);
      else
        fd = (f.deriv(k.k1, k.k2 - 1, x1, x2 + h2) - f.deriv(k.k1, k.k2 - 1, x1, x2 - h2)) /
             (2.0 * h2);
      worst = std::max(worst, std::abs(fd - exact) / fd_denominator(exact));
    }
  }
  return worst;
}

} // namespace cfs
