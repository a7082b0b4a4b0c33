#pragma once

#include <string>

#include "cfs/types.hpp"

namespace cfs {

enum class Subset { All, Interior, Boundary, Corner };

const char* to_string(Subset subset);

/// Uniform sampling grid with endpoint classification. 1D grids have two
/// boundary points and no corner class.
struct SamplingGrid1D {
  Domain1D domain;
  std::vector<double> points;

  int total_count() const { return static_cast<int>(points.size()); }
  int interior_count() const { return total_count() - 2; }
  int boundary_count() const { return 2; }
  bool is_boundary(int i) const { return i == 0 || i == total_count() - 1; }
};

struct SamplingGrid2D {
  Domain2D domain;
  std::vector<double> x1;
  std::vector<double> x2;

  int n1() const { return static_cast<int>(x1.size()); }
  int n2() const { return static_cast<int>(x2.size()); }
  int total_count() const { return n1() * n2(); }
  int interior_count() const { return (n1() - 2) * (n2() - 2); }
  int boundary_count() const { return 2 * (n1() - 2) + 2 * (n2() - 2); }
  int corner_count() const { return 4; }
  Subset classify(int i, int j) const {
    const bool e1 = (i == 0 || i == n1() - 1);
    const bool e2 = (j == 0 || j == n2() - 1);
    if (e1 && e2) return Subset::Corner;
    if (e1 || e2) return Subset::Boundary;
    return Subset::Interior;
  }
};

SamplingGrid1D make_grid(const Domain1D& domain, int n);
SamplingGrid2D make_grid(const Domain2D& domain, int n1, int n2);

/// Per-subset normalized mean absolute errors of one derivative component.
/// Each value is sum_subset |approx - exact| / (subset_count * u_max) with
/// u_max = max over the full grid of |exact|. The overall sum is formed from
/// the subset sums, so the subset decomposition identity is exact.
struct ComponentErrors {
  double overall = 0.0;
  double interior = 0.0;
  double boundary = 0.0;
  double corner = 0.0; // NaN-free; stays 0 for 1D
  double u_max = 0.0;

  double get(Subset subset) const;
};

ComponentErrors component_errors(const std::vector<double>& approx,
                                 const std::vector<double>& exact, const SamplingGrid1D& grid);
ComponentErrors component_errors(const std::vector<double>& approx,
                                 const std::vector<double>& exact, const SamplingGrid2D& grid);

/// Normalized mean absolute error of the (k1,k2) component over one subset.
double single_component_error(const std::function<double(double)>& approx,
                              const FunctionSpec1D& exact, int k, const SamplingGrid1D& grid,
                              Subset subset);
double single_component_error(const std::function<double(double, double)>& approx,
                              const FunctionSpec2D& exact, int k1, int k2,
                              const SamplingGrid2D& grid, Subset subset);

enum class AggregateMode { OrderP, UpToP };

/// Order-p aggregate: mean of the grade-p single components. Up-to-p
/// aggregate: (q+1)-weighted mean of the order-q aggregates for q <= p
/// (identical to the flat mean over all components of grade <= p).
/// 1D callers use k2 = 0 throughout; the 1D up-to-p mean runs over k = 0..p.
double aggregate_errors(const std::vector<std::pair<MultiIndex, double>>& singles, int p,
                        AggregateMode mode, bool two_dim);

/// Full grid of component errors for one (sample, method, truncation) run.
struct ErrorReport {
  int sample_id = 0;
  std::string method;
  int M = 0;
  int N = 0; // 0 for 1D
  bool two_dim = false;
  int grid_n = 0;

  struct Entry {
    MultiIndex k;
    ComponentErrors errors;
  };
  std::vector<Entry> singles;

  double single(MultiIndex k, Subset subset) const;
  double order_aggregate(int p, Subset subset) const;
  double up_to_aggregate(int p, Subset subset) const;
  int max_order() const;
};

} // namespace cfs
