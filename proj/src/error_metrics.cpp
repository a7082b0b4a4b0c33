#include "cfs/error_metrics.hpp"

#include <cmath>

namespace cfs {

const char* to_string(Subset subset) {
  switch (subset) {
    case Subset::All: return "overall";
    case Subset::Interior: return "interior";
    case Subset::Boundary: return "boundary";
    case Subset::Corner: return "corner";
  }
  return "?";
}

SamplingGrid1D make_grid(const Domain1D& domain, int n) {
  if (n < 3) throw ConfigError("sampling grid needs at least 3 points per axis");
  SamplingGrid1D grid;
  grid.domain = domain;
  grid.points.resize(n);
  const double lo = domain.lo(), h = domain.length() / (n - 1);
  for (int i = 0; i < n; ++i) grid.points[i] = lo + i * h;
  grid.points.back() = domain.hi();
  return grid;
}

SamplingGrid2D make_grid(const Domain2D& domain, int n1, int n2) {
  if (n1 < 3 || n2 < 3) throw ConfigError("sampling grid needs at least 3 points per axis");
  SamplingGrid2D grid;
  grid.domain = domain;
  grid.x1 = make_grid(domain.axis1(), n1).points;
  grid.x2 = make_grid(domain.axis2(), n2).points;
  return grid;
}

double ComponentErrors::get(Subset subset) const {
  switch (subset) {
    case Subset::All: return overall;
    case Subset::Interior: return interior;
    case Subset::Boundary: return boundary;
    case Subset::Corner: return corner;
  }
  return 0.0;
}

namespace {

double checked_u_max(double u_max) {
  if (u_max < 1e-300)
    throw DegenerateNormalizerError("u_max vanishes on the sampling grid");
  return u_max;
}

} // namespace

ComponentErrors component_errors(const std::vector<double>& approx,
                                 const std::vector<double>& exact, const SamplingGrid1D& grid) {
  const int n = grid.total_count();
  double u_max = 0.0;
  for (int i = 0; i < n; ++i) u_max = std::max(u_max, std::abs(exact[i]));
  checked_u_max(u_max);
  double sum_interior = 0.0, sum_boundary = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(approx[i] - exact[i]);
    (grid.is_boundary(i) ? sum_boundary : sum_interior) += d;
  }
  ComponentErrors e;
  e.u_max = u_max;
  e.interior = sum_interior / (grid.interior_count() * u_max);
  e.boundary = sum_boundary / (grid.boundary_count() * u_max);
  e.overall = (sum_interior + sum_boundary) / (n * u_max);
  return e;
}

ComponentErrors component_errors(const std::vector<double>& approx,
                                 const std::vector<double>& exact, const SamplingGrid2D& grid) {
  const int n1 = grid.n1(), n2 = grid.n2();
  double u_max = 0.0;
  for (double v : exact) u_max = std::max(u_max, std::abs(v));
  checked_u_max(u_max);
  double sum_interior = 0.0, sum_boundary = 0.0, sum_corner = 0.0;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      const double d = std::abs(approx[static_cast<size_t>(i) * n2 + j] -
                                exact[static_cast<size_t>(i) * n2 + j]);
      switch (grid.classify(i, j)) {
        case Subset::Interior: sum_interior += d; break;
        case Subset::Boundary: sum_boundary += d; break;
        default: sum_corner += d; break;
      }
    }
  ComponentErrors e;
  e.u_max = u_max;
  e.interior = sum_interior / (grid.interior_count() * u_max);
  e.boundary = sum_boundary / (grid.boundary_count() * u_max);
  e.corner = sum_corner / (grid.corner_count() * u_max);
  e.overall = (sum_interior + sum_boundary + sum_corner) / (grid.total_count() * u_max);
  return e;
}

double single_component_error(const std::function<double(double)>& approx,
                              const FunctionSpec1D& exact, int k, const SamplingGrid1D& grid,
                              Subset subset) {
  const int n = grid.total_count();
  std::vector<double> av(n), ev(n);
  for (int i = 0; i < n; ++i) {
    av[i] = approx(grid.points[i]);
    ev[i] = exact.deriv(k, grid.points[i]);
  }
  if (subset == Subset::Corner) throw ConfigError("1D grids have no corner subset");
  return component_errors(av, ev, grid).get(subset);
}

double single_component_error(const std::function<double(double, double)>& approx,
                              const FunctionSpec2D& exact, int k1, int k2,
                              const SamplingGrid2D& grid, Subset subset) {
  const int n1 = grid.n1(), n2 = grid.n2();
  std::vector<double> av(static_cast<size_t>(n1) * n2), ev(av.size());
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      av[static_cast<size_t>(i) * n2 + j] = approx(grid.x1[i], grid.x2[j]);
      ev[static_cast<size_t>(i) * n2 + j] = exact.deriv(k1, k2, grid.x1[i], grid.x2[j]);
    }
  return component_errors(av, ev, grid).get(subset);
}

double aggregate_errors(const std::vector<std::pair<MultiIndex, double>>& singles, int p,
                        AggregateMode mode, bool two_dim) {
  if (p < 0) throw ConfigError("aggregate order must be >= 0");
  auto find = [&singles](int k1, int k2) {
    for (const auto& [k, v] : singles)
      if (k.k1 == k1 && k.k2 == k2) return v;
    throw MissingComponentError("aggregate: missing single-component error");
  };
  auto order_p = [&](int q) {
    if (!two_dim) return find(q, 0);
    double acc = 0.0;
    for (int k1 = q; k1 >= 0; --k1) acc += find(k1, q - k1);
    return acc / (q + 1);
  };
  if (mode == AggregateMode::OrderP) return order_p(p);
  if (!two_dim) {
    double acc = 0.0;
    for (int q = 0; q <= p; ++q) acc += find(q, 0);
    return acc / (p + 1);
  }
  double acc = 0.0;
  for (int q = 0; q <= p; ++q) acc += (q + 1) * order_p(q);
  return 2.0 * acc / ((p + 1) * (p + 2));
}

double ErrorReport::single(MultiIndex k, Subset subset) const {
  for (const Entry& e : singles)
    if (e.k == k) return e.errors.get(subset);
  throw MissingComponentError("report: missing single-component entry");
}

namespace {

std::vector<std::pair<MultiIndex, double>> flatten(const std::vector<ErrorReport::Entry>& singles,
                                                   Subset subset) {
  std::vector<std::pair<MultiIndex, double>> out;
  out.reserve(singles.size());
  for (const auto& e : singles) out.emplace_back(e.k, e.errors.get(subset));
  return out;
}

} // namespace

double ErrorReport::order_aggregate(int p, Subset subset) const {
  return aggregate_errors(flatten(singles, subset), p, AggregateMode::OrderP, two_dim);
}

double ErrorReport::up_to_aggregate(int p, Subset subset) const {
  return aggregate_errors(flatten(singles, subset), p, AggregateMode::UpToP, two_dim);
}

int ErrorReport::max_order() const {
  int top = 0;
  for (const Entry& e : singles) top = std::max(top, e.k.grade());
  return top;
}

} // namespace cfs
