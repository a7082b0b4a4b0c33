#pragma once

#include <functional>
#include <vector>

#include "cfs/types.hpp"

namespace cfs {

/// Gauss-Legendre panel rule. Panel count scales with the oscillation index
/// (two panels per half period), which keeps polynomial-times-trig
/// integrands exact to machine precision.
struct QuadratureRule {
  int nodes_per_panel = 16; // >= 8
  int panels_base = 4;      // >= 4
};

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1,1] (cached).
const std::vector<double>& gauss_legendre_nodes(int n);
const std::vector<double>& gauss_legendre_weights(int n);

/// Flattened panel grid over [lo,hi] with max(panels_base, 2*osc) panels.
struct PanelGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

PanelGrid make_panel_grid(double lo, double hi, int oscillation_index,
                          const QuadratureRule& rule = {});

/// Integral of g over [lo,hi]. oscillation_index bounds the integrand's trig
/// wavenumber by oscillation_index*pi/(hi-lo).
double integrate_1d(const std::function<double(double)>& g, double lo, double hi,
                    int oscillation_index, const QuadratureRule& rule = {});

/// Tensor-product integral over the 2D domain.
double integrate_2d(const std::function<double(double, double)>& g, const Domain2D& domain,
                    int osc1, int osc2, const QuadratureRule& rule = {});

/// Fourier coefficients of g in the kind's series, modes m = 0..max_mode.
///
/// Normalization (reconstruction uses the mu_m weight, mu_0 = 1/2):
///   FullRange:  V1_m = (1/a) Int_{-a}^{a} g cos(a_m x) dx, V2_m likewise with sin,
///   HalfCosine: V1_m = (2/a) Int_0^a g cos(a_m x) dx,
///   HalfSine:   V2_m = (2/a) Int_0^a g sin(a_m x) dx,
/// with a_m = m*pi/a. Unused arrays stay empty; sine arrays keep index 0 as 0.
///
/// On a symmetric interval the integral is folded to [0,a] and the pointwise
/// even/odd parts of g are integrated separately, so coefficients of the
/// wrong parity come out exactly zero for parity-pure g.
struct FourierCoefficients1D {
  SeriesKind1D kind = SeriesKind1D::FullRange;
  std::vector<double> cosine; // m = 0..M
  std::vector<double> sine;   // m = 0..M, [0] unused (0)
};

FourierCoefficients1D fourier_coefficients_1d(const std::function<double(double)>& g,
                                              SeriesKind1D kind, const Domain1D& domain,
                                              int max_mode, const QuadratureRule& rule = {});

/// 2D Fourier coefficients; arrays are (M+1)x(N+1) row-major, invalid rows /
/// columns (m=0 for sine-in-x1 etc.) kept as zeros. FullRange normalization
/// is (1/(ab)) Int Int over the full rectangle; SinSin is (4/(ab)) over
/// [0,a]x[0,b]. Reconstruction applies lambda_mn (1/4, 1/2, 1).
struct FourierCoefficients2D {
  SeriesKind2D kind = SeriesKind2D::FullRange;
  int M = 0;
  int N = 0;
  std::vector<double> cc, sc, cs, ss; // empty when unused by the kind

  double get(const std::vector<double>& arr, int m, int n) const {
    return arr.empty() ? 0.0 : arr[static_cast<size_t>(m) * (N + 1) + n];
  }
};

FourierCoefficients2D fourier_coefficients_2d(const std::function<double(double, double)>& g,
                                              SeriesKind2D kind, const Domain2D& domain, int M,
                                              int N, const QuadratureRule& rule = {});

/// Values of g on the reflections of a [0,a]x[0,b] tensor grid:
/// pp(i,j) = g(+x_i,+y_j), mp = g(-x_i,+y_j), pm = g(+x_i,-y_j), mm = g(-x_i,-y_j).
struct QuadrantValues {
  int nx = 0;
  int ny = 0;
  std::vector<double> pp, mp, pm, mm;
};

/// FullRange extraction from pre-evaluated quadrant values (grids from
/// make_panel_grid over [0,a] and [0,b]).
FourierCoefficients2D coefficients_from_quadrants(const Domain2D& domain, int M, int N,
                                                  const PanelGrid& gx, const PanelGrid& gy,
                                                  const QuadrantValues& values);

/// SinSin extraction from values on the [0,a]x[0,b] grid itself.
FourierCoefficients2D coefficients_from_grid_sinsin(const Domain2D& domain, int M, int N,
                                                    const PanelGrid& gx, const PanelGrid& gy,
                                                    const std::vector<double>& values);

/// Half-range expansion of g over [0,a]x[0,b] with a chosen trig factor per
/// axis ((2/a)(2/b) normalization; reconstruction weights mu_m per cosine
/// axis). Fills the matching slot of the result (kind = SinSin family).
FourierCoefficients2D half_range_coefficients_2d(const std::function<double(double, double)>& g,
                                                 bool cos_axis1, bool cos_axis2,
                                                 const Domain2D& domain, int M, int N,
                                                 const QuadratureRule& rule = {});

/// d^k/dx^k cos(w x) and sin(w x) via the parity rules
/// (even k: (-1)^(k/2) w^k {cos,sin}; odd k: mapped to the other function),
/// keeping sin(0) and friends exactly zero.
double cos_deriv(int k, double w, double x);
double sin_deriv(int k, double w, double x);

/// x^p by repeated multiplication (sign-exact for negated arguments).
double int_pow(double x, int p);

} // namespace cfs
