#pragma once

#include "cfs/basis.hpp"
#include "cfs/quadrature.hpp"

namespace cfs {

/// Corner constraint right-hand side q3. FullRange: four-corner alternating
/// sums over (k1,k2) in graded order (k1+k2 <= 2r-2). SinSin: per-corner
/// even-even derivative values, corner-major over (a,b),(a,0),(0,b),(0,0).
struct CornerData {
  std::vector<double> q3;
};

/// Solved corner function phi3 = p3^T a3.
struct CornerFunction {
  SupplementaryFamily2D family;
  std::vector<double> constants;
  CornerData data;
  double condition = 0.0;

  double eval(int k1, int k2, double x1, double x2) const {
    double acc = 0.0;
    for (int j = 0; j < family.size; ++j)
      acc += constants[j] * family.eval(j, k1, k2, x1, x2);
    return acc;
  }
};

enum class EdgeAxis { X1, X2 };

/// Per-mode constraint vectors (each of length 2r) built from the Fourier
/// coefficients, along the edge, of the residual traces of u - phi3.
/// FullRange: cos_modes[n] (n=0..N) and sin_modes[n] (n=1..N, slot 0 unused)
/// hold opposite-edge differences for k = 0..2r-1. SinSin: sin_modes[n]
/// (n=1..N) holds even-order values at the far edge then the near edge.
struct EdgeCoefficientTable {
  SeriesKind2D kind = SeriesKind2D::FullRange;
  EdgeAxis axis = EdgeAxis::X1;
  std::vector<std::vector<double>> cos_modes;
  std::vector<std::vector<double>> sin_modes;
};

using InternalCoefficients2D = FourierCoefficients2D;

CornerData corner_data(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r);

CornerFunction solve_corner(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r);

EdgeCoefficientTable edge_coefficients(const FunctionSpec2D& f, const CornerFunction& phi3,
                                       SeriesKind2D kind, SmoothnessOrder r, EdgeAxis axis,
                                       int modes, const QuadratureRule& rule = {});

/// Immutable composite expansion u ~ phi0 + phi1 + phi2 + phi3 with partial
/// derivative evaluation for k1+k2 <= 2r.
class CompositeSeries2D {
public:
  CompositeSeries2D(SmoothnessOrder r, SeriesKind2D kind, Domain2D domain, CornerFunction corner,
                    SupplementaryFamily1D edge1_family, std::vector<std::vector<double>> a1_cos,
                    std::vector<std::vector<double>> a1_sin, EdgeCoefficientTable q1,
                    SupplementaryFamily1D edge2_family, std::vector<std::vector<double>> a2_cos,
                    std::vector<std::vector<double>> a2_sin, EdgeCoefficientTable q2,
                    InternalCoefficients2D q0, int M, int N);

  double evaluate(int k1, int k2, double x1, double x2) const;

  /// The four structural parts; evaluate() is exactly their sum.
  double corner_part(int k1, int k2, double x1, double x2) const;
  double boundary1_part(int k1, int k2, double x1, double x2) const;
  double boundary2_part(int k1, int k2, double x1, double x2) const;
  double internal_part(int k1, int k2, double x1, double x2) const;

  /// Batched evaluation over a tensor grid (row-major xs.size() x ys.size()).
  std::vector<double> evaluate_grid(int k1, int k2, const std::vector<double>& xs,
                                    const std::vector<double>& ys) const;

  SmoothnessOrder order() const { return r_; }
  SeriesKind2D kind() const { return kind_; }
  const Domain2D& domain() const { return domain_; }
  int truncation_m() const { return M_; }
  int truncation_n() const { return N_; }
  const CornerFunction& corner() const { return corner_; }
  const EdgeCoefficientTable& edge1_table() const { return q1_; }
  const EdgeCoefficientTable& edge2_table() const { return q2_; }
  const InternalCoefficients2D& internal_coefficients() const { return q0_; }

private:
  void check_order(int k1, int k2) const;

  SmoothnessOrder r_;
  SeriesKind2D kind_;
  Domain2D domain_;
  CornerFunction corner_;
  SupplementaryFamily1D edge1_family_;
  std::vector<std::vector<double>> a1_cos_, a1_sin_;
  EdgeCoefficientTable q1_;
  SupplementaryFamily1D edge2_family_;
  std::vector<std::vector<double>> a2_cos_, a2_sin_;
  EdgeCoefficientTable q2_;
  InternalCoefficients2D q0_;
  int M_ = 0, N_ = 0;
};

/// Builds phi3, then the two boundary functions from the residual edge
/// traces, then the internal coefficients of u - phi1 - phi2 - phi3.
CompositeSeries2D build_composite_2d(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r,
                                     int M, int N, const QuadratureRule& rule = {});

double evaluate_2d(const CompositeSeries2D& s, int k1, int k2, double x1, double x2);

} // namespace cfs
