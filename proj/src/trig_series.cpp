#include "cfs/trig_series.hpp"

#include <numbers>

namespace cfs {

namespace {

double mu(int m) { return m == 0 ? 0.5 : 1.0; }

double lambda(int m, int n) {
  if (m == 0 && n == 0) return 0.25;
  if (m == 0 || n == 0) return 0.5;
  return 1.0;
}

} // namespace

double trig_series_value(const FourierCoefficients1D& q, const Domain1D& domain, int k, double x) {
  const double alpha = std::numbers::pi / domain.a;
  const int M = static_cast<int>(std::max(q.cosine.size(), q.sine.size())) - 1;
  double acc = 0.0;
  switch (q.kind) {
    case SeriesKind1D::FullRange:
      for (int m = 0; m <= M; ++m) {
        double term = q.cosine[m] * cos_deriv(k, m * alpha, x);
        if (m > 0) term += q.sine[m] * sin_deriv(k, m * alpha, x);
        acc += mu(m) * term;
      }
      break;
    case SeriesKind1D::HalfCosine:
      for (int m = 0; m <= M; ++m) acc += mu(m) * q.cosine[m] * cos_deriv(k, m * alpha, x);
      break;
    case SeriesKind1D::HalfSine:
      for (int m = 1; m <= M; ++m) acc += q.sine[m] * sin_deriv(k, m * alpha, x);
      break;
  }
  return acc;
}

double trig_series_value(const FourierCoefficients2D& q, const Domain2D& domain, int k1, int k2,
                         double x1, double x2) {
  const double alpha = std::numbers::pi / domain.a;
  const double beta = std::numbers::pi / domain.b;
  double acc = 0.0;
  if (q.kind != SeriesKind2D::FullRange) {
    // Half-range series: each slot is a standalone (2/a)(2/b)-normalized
    // expansion; cosine axes carry the mu weight at mode 0.
    auto add_slot = [&](const std::vector<double>& arr, bool cos1, bool cos2) {
      if (arr.empty()) return;
      for (int m = cos1 ? 0 : 1; m <= q.M; ++m) {
        const double fx = cos1 ? mu(m) * cos_deriv(k1, m * alpha, x1)
                               : sin_deriv(k1, m * alpha, x1);
        double row = 0.0;
        for (int n = cos2 ? 0 : 1; n <= q.N; ++n) {
          const double fy = cos2 ? mu(n) * cos_deriv(k2, n * beta, x2)
                                 : sin_deriv(k2, n * beta, x2);
          row += q.get(arr, m, n) * fy;
        }
        acc += fx * row;
      }
    };
    add_slot(q.cc, true, true);
    add_slot(q.sc, false, true);
    add_slot(q.cs, true, false);
    add_slot(q.ss, false, false);
    return acc;
  }
  for (int m = 0; m <= q.M; ++m) {
    const double cx = cos_deriv(k1, m * alpha, x1);
    const double sx = sin_deriv(k1, m * alpha, x1);
    for (int n = 0; n <= q.N; ++n) {
      const double cy = cos_deriv(k2, n * beta, x2);
      const double sy = sin_deriv(k2, n * beta, x2);
      double term = q.get(q.cc, m, n) * cx * cy;
      if (m > 0) term += q.get(q.sc, m, n) * sx * cy;
      if (n > 0) term += q.get(q.cs, m, n) * cx * sy;
      if (m > 0 && n > 0) term += q.get(q.ss, m, n) * sx * sy;
      acc += lambda(m, n) * term;
    }
  }
  return acc;
}

std::vector<double> trig_series_grid(const FourierCoefficients2D& q, const Domain2D& domain,
                                     int k1, int k2, const std::vector<double>& xs,
                                     const std::vector<double>& ys) {
  const double alpha = std::numbers::pi / domain.a;
  const double beta = std::numbers::pi / domain.b;
  const size_t nx = xs.size(), ny = ys.size();
  std::vector<double> out(nx * ny, 0.0);

  // Per-axis factor tables, then contract coefficients over n first.
  const int M = q.M, N = q.N;
  std::vector<double> cx, sx, cy, sy;
  auto fill = [&](std::vector<double>& table, const std::vector<double>& pts, double w0, int top,
                  bool sine, int k) {
    table.assign(static_cast<size_t>(top + 1) * pts.size(), 0.0);
    for (int m = 0; m <= top; ++m)
      for (size_t i = 0; i < pts.size(); ++i)
        table[static_cast<size_t>(m) * pts.size() + i] =
            sine ? sin_deriv(k, m * w0, pts[i]) : cos_deriv(k, m * w0, pts[i]);
  };
  const bool full = (q.kind == SeriesKind2D::FullRange);
  fill(cx, xs, alpha, M, false, k1);
  fill(cy, ys, beta, N, false, k2);
  fill(sx, xs, alpha, M, true, k1);
  fill(sy, ys, beta, N, true, k2);

  // weight(m,n): lambda_mn for the full-range series; mu products per
  // cosine axis for half-range slots.
  auto add_block = [&](const std::vector<double>& coef, const std::vector<double>& fx,
                       const std::vector<double>& fy, bool cos1, bool cos2) {
    if (coef.empty()) return;
    // mid(m, j) = sum_n weight*coef(m,n) fy(n,j)
    std::vector<double> mid(static_cast<size_t>(M + 1) * ny, 0.0);
    for (int m = 0; m <= M; ++m) {
      double* midm = &mid[static_cast<size_t>(m) * ny];
      for (int n = 0; n <= N; ++n) {
        const double w = full ? lambda(m, n) : (cos1 ? mu(m) : 1.0) * (cos2 ? mu(n) : 1.0);
        const double c = w * coef[static_cast<size_t>(m) * (N + 1) + n];
        if (c == 0.0) continue;
        const double* fyn = &fy[static_cast<size_t>(n) * ny];
        for (size_t j = 0; j < ny; ++j) midm[j] += c * fyn[j];
      }
    }
    for (size_t i = 0; i < nx; ++i)
      for (int m = 0; m <= M; ++m) {
        const double f = fx[static_cast<size_t>(m) * nx + i];
        if (f == 0.0) continue;
        const double* midm = &mid[static_cast<size_t>(m) * ny];
        double* row = &out[i * ny];
        for (size_t j = 0; j < ny; ++j) row[j] += f * midm[j];
      }
  };

  add_block(q.cc, cx, cy, true, true);
  add_block(q.sc, sx, cy, false, true);
  add_block(q.cs, cx, sy, true, false);
  add_block(q.ss, sx, sy, false, false);
  return out;
}

} // namespace cfs
