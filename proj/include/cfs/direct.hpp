#pragma once

#include "cfs/quadrature.hpp"

namespace cfs {

/// Fourier series direct-expansion baseline: every derivative order gets its
/// own independently computed expansion in the same series kind; evaluation
/// is the plain partial sum of that order's expansion.
class DirectExpansion1D {
public:
  DirectExpansion1D(SeriesKind1D kind, Domain1D domain, int truncation,
                    std::vector<FourierCoefficients1D> per_order);

  double evaluate(int k, double x) const;
  const FourierCoefficients1D& coefficients(int k) const;

  SeriesKind1D kind() const { return kind_; }
  int truncation() const { return truncation_; }
  int max_order() const { return static_cast<int>(per_order_.size()) - 1; }

private:
  SeriesKind1D kind_;
  Domain1D domain_;
  int truncation_ = 0;
  std::vector<FourierCoefficients1D> per_order_;
};

DirectExpansion1D build_direct_1d(const FunctionSpec1D& f, SeriesKind1D kind, SmoothnessOrder r,
                                  int truncation, const QuadratureRule& rule = {});

class DirectExpansion2D {
public:
  DirectExpansion2D(SeriesKind2D kind, Domain2D domain, int M, int N,
                    std::vector<FourierCoefficients2D> per_order, int max_total);

  double evaluate(int k1, int k2, double x1, double x2) const;
  std::vector<double> evaluate_grid(int k1, int k2, const std::vector<double>& xs,
                                    const std::vector<double>& ys) const;
  const FourierCoefficients2D& coefficients(int k1, int k2) const;

  SeriesKind2D kind() const { return kind_; }
  int truncation_m() const { return M_; }
  int truncation_n() const { return N_; }
  int max_total_order() const { return max_total_; }

private:
  int order_slot(int k1, int k2) const;

  SeriesKind2D kind_;
  Domain2D domain_;
  int M_ = 0, N_ = 0;
  std::vector<FourierCoefficients2D> per_order_; // graded order over k1+k2 <= max_total
  int max_total_ = 0;
};

DirectExpansion2D build_direct_2d(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r,
                                  int M, int N, const QuadratureRule& rule = {});

double evaluate_direct(const DirectExpansion1D& d, int k, double x);
double evaluate_direct(const DirectExpansion2D& d, int k1, int k2, double x1, double x2);

} // namespace cfs
