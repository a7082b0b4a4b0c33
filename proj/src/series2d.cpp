#include "cfs/series2d.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "cfs/trig_series.hpp"

namespace cfs {

namespace {

double mu(int m) { return m == 0 ? 0.5 : 1.0; }

// values[member][node] for one derivative order; sign mirrors the nodes.
std::vector<double> family_values(const SupplementaryFamily1D& fam, int k,
                                  const std::vector<double>& nodes, double sign) {
  std::vector<double> out(static_cast<size_t>(fam.size) * nodes.size());
  for (int j = 0; j < fam.size; ++j)
    for (size_t i = 0; i < nodes.size(); ++i)
      out[static_cast<size_t>(j) * nodes.size() + i] = fam.eval(j, k, sign * nodes[i]);
  return out;
}

// xi[mode][node] = sum_j constants[mode][j] * fam_values[j][node]
std::vector<double> mode_polynomials(const std::vector<std::vector<double>>& constants,
                                     const std::vector<double>& fam_values, int fam_size,
                                     size_t n_nodes) {
  std::vector<double> out(constants.size() * n_nodes, 0.0);
  for (size_t mode = 0; mode < constants.size(); ++mode) {
    if (constants[mode].empty()) continue;
    double* row = &out[mode * n_nodes];
    for (int j = 0; j < fam_size; ++j) {
      const double c = constants[mode][j];
      if (c == 0.0) continue;
      const double* fj = &fam_values[static_cast<size_t>(j) * n_nodes];
      for (size_t i = 0; i < n_nodes; ++i) row[i] += c * fj[i];
    }
  }
  return out;
}

// out[i*ny + j] += sign * sum_k A[k*nx + i] * B[k*ny + j]
void add_product(const std::vector<double>& A, const std::vector<double>& B, size_t modes,
                 size_t nx, size_t ny, double sign, std::vector<double>& out) {
  for (size_t k = 0; k < modes; ++k) {
    const double* ak = &A[k * nx];
    const double* bk = &B[k * ny];
    for (size_t i = 0; i < nx; ++i) {
      const double a = sign * ak[i];
      if (a == 0.0) continue;
      double* row = &out[i * ny];
      for (size_t j = 0; j < ny; ++j) row[j] += a * bk[j];
    }
  }
}

std::vector<double> trig_row_table(int modes, double w0, const std::vector<double>& pts, bool sine,
                                   int k, bool weighted) {
  std::vector<double> out(static_cast<size_t>(modes + 1) * pts.size(), 0.0);
  for (int m = 0; m <= modes; ++m) {
    const double w = (weighted ? mu(m) : 1.0);
    for (size_t i = 0; i < pts.size(); ++i)
      out[static_cast<size_t>(m) * pts.size() + i] =
          w * (sine ? sin_deriv(k, m * w0, pts[i]) : cos_deriv(k, m * w0, pts[i]));
  }
  return out;
}

} // namespace

CornerData corner_data(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r) {
  require_compatible(kind, f.domain);
  if (!kind_constructible(kind)) throw UnsupportedKindError("no corner data for this series kind");
  const double a = f.domain.a, b = f.domain.b;
  CornerData out;
  if (kind == SeriesKind2D::FullRange) {
    for (const MultiIndex& k : enumerate_graded(r.two_r() - 2))
      out.q3.push_back(f.deriv(k.k1, k.k2, a, b) - f.deriv(k.k1, k.k2, a, -b) -
                       f.deriv(k.k1, k.k2, -a, b) + f.deriv(k.k1, k.k2, -a, -b));
  } else {
    const std::vector<MultiIndex> orders = sinsin_corner_orders(r);
    for (const auto& [cx, cy] : corner_points(kind, a, b))
      for (const MultiIndex& k : orders) out.q3.push_back(f.deriv(k.k1, k.k2, cx, cy));
  }
  return out;
}

CornerFunction solve_corner(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r) {
  CornerFunction corner;
  corner.family = polynomial_family_corner(kind, r, f.domain.a, f.domain.b);
  const Matrix R = build_corner_matrix(corner.family, kind, r, f.domain.a, f.domain.b);
  LuFactorization lu(R);
  corner.data = corner_data(f, kind, r);
  corner.constants = lu.solve(corner.data.q3);
  corner.condition = lu.condition_estimate();
  return corner;
}

EdgeCoefficientTable edge_coefficients(const FunctionSpec2D& f, const CornerFunction& phi3,
                                       SeriesKind2D kind, SmoothnessOrder r, EdgeAxis axis,
                                       int modes, const QuadratureRule& rule) {
  require_compatible(kind, f.domain);
  if (!kind_constructible(kind)) throw UnsupportedKindError("no edge system for this series kind");
  if (modes < 0) throw ConfigError("edge_coefficients: modes must be >= 0");

  // The trace runs along the other axis.
  const double edge_pos = (axis == EdgeAxis::X1) ? f.domain.a : f.domain.b;
  const double along = (axis == EdgeAxis::X1) ? f.domain.b : f.domain.a;
  const PanelGrid grid = make_panel_grid(0.0, along, modes + 2, rule);
  const size_t n = grid.nodes.size();

  auto trace = [&](int k, double at, double t) {
    if (axis == EdgeAxis::X1) return f.deriv(k, 0, at, t) - phi3.eval(k, 0, at, t);
    return f.deriv(0, k, t, at) - phi3.eval(0, k, t, at);
  };

  EdgeCoefficientTable table;
  table.kind = kind;
  table.axis = axis;

  if (kind == SeriesKind2D::FullRange) {
    const int two_r = r.two_r();
    table.cos_modes.assign(modes + 1, std::vector<double>(two_r, 0.0));
    table.sin_modes.assign(modes + 1, std::vector<double>{});
    for (int mode = 1; mode <= modes; ++mode) table.sin_modes[mode].assign(two_r, 0.0);

    const double w0 = std::numbers::pi / along;
    for (int k = 0; k < two_r; ++k) {
      std::vector<double> even(n), odd(n);
      for (size_t i = 0; i < n; ++i) {
        const double tp = trace(k, edge_pos, grid.nodes[i]) - trace(k, -edge_pos, grid.nodes[i]);
        const double tm = trace(k, edge_pos, -grid.nodes[i]) - trace(k, -edge_pos, -grid.nodes[i]);
        even[i] = tp + tm;
        odd[i] = tp - tm;
      }
      for (int mode = 0; mode <= modes; ++mode) {
        double vc = 0.0, vs = 0.0;
        for (size_t i = 0; i < n; ++i) {
          vc += grid.weights[i] * even[i] * std::cos(mode * w0 * grid.nodes[i]);
          if (mode > 0) vs += grid.weights[i] * odd[i] * std::sin(mode * w0 * grid.nodes[i]);
        }
        table.cos_modes[mode][k] = vc / along;
        if (mode > 0) table.sin_modes[mode][k] = vs / along;
      }
    }
    return table;
  }

  // SinSin: even-order values at the far edge then the near edge, sine
  // coefficients along the edge.
  const std::vector<int> orders = boundary_orders_1d(SeriesKind1D::HalfSine, r);
  const int half = static_cast<int>(orders.size());
  table.sin_modes.assign(modes + 1, std::vector<double>{});
  for (int mode = 1; mode <= modes; ++mode) table.sin_modes[mode].assign(2 * half, 0.0);
  const double w0 = std::numbers::pi / along;
  for (int idx = 0; idx < half; ++idx) {
    const int k = orders[idx];
    std::vector<double> far(n), near(n);
    for (size_t i = 0; i < n; ++i) {
      far[i] = trace(k, edge_pos, grid.nodes[i]);
      near[i] = trace(k, 0.0, grid.nodes[i]);
    }
    for (int mode = 1; mode <= modes; ++mode) {
      double vf = 0.0, vn = 0.0;
      for (size_t i = 0; i < n; ++i) {
        const double s = grid.weights[i] * std::sin(mode * w0 * grid.nodes[i]);
        vf += s * far[i];
        vn += s * near[i];
      }
      table.sin_modes[mode][idx] = 2.0 * vf / along;
      table.sin_modes[mode][half + idx] = 2.0 * vn / along;
    }
  }
  return table;
}

CompositeSeries2D::CompositeSeries2D(SmoothnessOrder r, SeriesKind2D kind, Domain2D domain,
                                     CornerFunction corner, SupplementaryFamily1D edge1_family,
                                     std::vector<std::vector<double>> a1_cos,
                                     std::vector<std::vector<double>> a1_sin,
                                     EdgeCoefficientTable q1, SupplementaryFamily1D edge2_family,
                                     std::vector<std::vector<double>> a2_cos,
                                     std::vector<std::vector<double>> a2_sin,
                                     EdgeCoefficientTable q2, InternalCoefficients2D q0, int M,
                                     int N)
    : r_(r),
      kind_(kind),
      domain_(domain),
      corner_(std::move(corner)),
      edge1_family_(std::move(edge1_family)),
      a1_cos_(std::move(a1_cos)),
      a1_sin_(std::move(a1_sin)),
      q1_(std::move(q1)),
      edge2_family_(std::move(edge2_family)),
      a2_cos_(std::move(a2_cos)),
      a2_sin_(std::move(a2_sin)),
      q2_(std::move(q2)),
      q0_(std::move(q0)),
      M_(M),
      N_(N) {}

void CompositeSeries2D::check_order(int k1, int k2) const {
  if (k1 < 0 || k2 < 0 || k1 + k2 > r_.two_r())
    throw OrderOutOfRangeError("evaluate: k1 + k2 must lie in 0..2r");
}

double CompositeSeries2D::corner_part(int k1, int k2, double x1, double x2) const {
  return corner_.eval(k1, k2, x1, x2);
}

double CompositeSeries2D::boundary1_part(int k1, int k2, double x1, double x2) const {
  const double beta = std::numbers::pi / domain_.b;
  std::vector<double> fam(edge1_family_.size);
  for (int j = 0; j < edge1_family_.size; ++j) fam[j] = edge1_family_.eval(j, k1, x1);
  auto dot = [&](const std::vector<double>& c) {
    double acc = 0.0;
    for (int j = 0; j < edge1_family_.size; ++j) acc += c[j] * fam[j];
    return acc;
  };
  double acc = 0.0;
  if (kind_ == SeriesKind2D::FullRange) {
    for (int n = 0; n <= N_; ++n) {
      double term = dot(a1_cos_[n]) * cos_deriv(k2, n * beta, x2);
      if (n > 0) term += dot(a1_sin_[n]) * sin_deriv(k2, n * beta, x2);
      acc += mu(n) * term;
    }
  } else {
    for (int n = 1; n <= N_; ++n) acc += dot(a1_sin_[n]) * sin_deriv(k2, n * beta, x2);
  }
  return acc;
}

double CompositeSeries2D::boundary2_part(int k1, int k2, double x1, double x2) const {
  const double alpha = std::numbers::pi / domain_.a;
  std::vector<double> fam(edge2_family_.size);
  for (int j = 0; j < edge2_family_.size; ++j) fam[j] = edge2_family_.eval(j, k2, x2);
  auto dot = [&](const std::vector<double>& c) {
    double acc = 0.0;
    for (int j = 0; j < edge2_family_.size; ++j) acc += c[j] * fam[j];
    return acc;
  };
  double acc = 0.0;
  if (kind_ == SeriesKind2D::FullRange) {
    for (int m = 0; m <= M_; ++m) {
      double term = dot(a2_cos_[m]) * cos_deriv(k1, m * alpha, x1);
      if (m > 0) term += dot(a2_sin_[m]) * sin_deriv(k1, m * alpha, x1);
      acc += mu(m) * term;
    }
  } else {
    for (int m = 1; m <= M_; ++m) acc += dot(a2_sin_[m]) * sin_deriv(k1, m * alpha, x1);
  }
  return acc;
}

double CompositeSeries2D::internal_part(int k1, int k2, double x1, double x2) const {
  return trig_series_value(q0_, domain_, k1, k2, x1, x2);
}

double CompositeSeries2D::evaluate(int k1, int k2, double x1, double x2) const {
  check_order(k1, k2);
  return internal_part(k1, k2, x1, x2) + boundary1_part(k1, k2, x1, x2) +
         boundary2_part(k1, k2, x1, x2) + corner_part(k1, k2, x1, x2);
}

std::vector<double> CompositeSeries2D::evaluate_grid(int k1, int k2, const std::vector<double>& xs,
                                                     const std::vector<double>& ys) const {
  check_order(k1, k2);
  const size_t nx = xs.size(), ny = ys.size();
  std::vector<double> out = trig_series_grid(q0_, domain_, k1, k2, xs, ys);

  // Corner part via the exponent table when available.
  if (!corner_.family.exponents.empty()) {
    for (int j = 0; j < corner_.family.size; ++j) {
      const double c = corner_.constants[j];
      if (c == 0.0) continue;
      const MultiIndex& e = corner_.family.exponents[j];
      std::vector<double> vx(nx), vy(ny);
      for (size_t i = 0; i < nx; ++i) vx[i] = c * monomial_deriv(e.k1, k1, xs[i], domain_.a);
      for (size_t jj = 0; jj < ny; ++jj) vy[jj] = monomial_deriv(e.k2, k2, ys[jj], domain_.b);
      for (size_t i = 0; i < nx; ++i) {
        double* row = &out[i * ny];
        for (size_t jj = 0; jj < ny; ++jj) row[jj] += vx[i] * vy[jj];
      }
    }
  } else {
    for (size_t i = 0; i < nx; ++i)
      for (size_t jj = 0; jj < ny; ++jj) out[i * ny + jj] += corner_.eval(k1, k2, xs[i], ys[jj]);
  }

  // phi1: per-mode polynomials in x1 against trig factors in x2.
  {
    const std::vector<double> famx = family_values(edge1_family_, k1, xs, 1.0);
    const std::vector<double> xi1 = mode_polynomials(a1_cos_, famx, edge1_family_.size, nx);
    const std::vector<double> xi2 = mode_polynomials(a1_sin_, famx, edge1_family_.size, nx);
    const double beta = std::numbers::pi / domain_.b;
    const bool full = kind_ == SeriesKind2D::FullRange;
    if (full) {
      const std::vector<double> cy = trig_row_table(N_, beta, ys, false, k2, true);
      add_product(xi1, cy, a1_cos_.size(), nx, ny, 1.0, out);
    }
    const std::vector<double> sy = trig_row_table(N_, beta, ys, true, k2, full);
    add_product(xi2, sy, a1_sin_.size(), nx, ny, 1.0, out);
  }

  // phi2: per-mode polynomials in x2 against trig factors in x1.
  {
    const std::vector<double> famy = family_values(edge2_family_, k2, ys, 1.0);
    const std::vector<double> zeta1 = mode_polynomials(a2_cos_, famy, edge2_family_.size, ny);
    const std::vector<double> zeta2 = mode_polynomials(a2_sin_, famy, edge2_family_.size, ny);
    const double alpha = std::numbers::pi / domain_.a;
    const bool full = kind_ == SeriesKind2D::FullRange;
    if (full) {
      const std::vector<double> cx = trig_row_table(M_, alpha, xs, false, k1, true);
      add_product(cx, zeta1, a2_cos_.size(), nx, ny, 1.0, out);
    }
    const std::vector<double> sx = trig_row_table(M_, alpha, xs, true, k1, full);
    add_product(sx, zeta2, a2_sin_.size(), nx, ny, 1.0, out);
  }
  return out;
}

namespace {

// phi3 values on reflected tensor grids; sx, sy in {+1,-1}.
std::vector<double> corner_grid_values(const CornerFunction& corner, const Domain2D& dom,
                                       const std::vector<double>& xs, const std::vector<double>& ys,
                                       double sx, double sy) {
  const size_t nx = xs.size(), ny = ys.size();
  std::vector<double> out(nx * ny, 0.0);
  if (!corner.family.exponents.empty()) {
    for (int j = 0; j < corner.family.size; ++j) {
      const double c = corner.constants[j];
      if (c == 0.0) continue;
      const MultiIndex& e = corner.family.exponents[j];
      std::vector<double> vx(nx), vy(ny);
      for (size_t i = 0; i < nx; ++i) vx[i] = c * monomial_deriv(e.k1, 0, sx * xs[i], dom.a);
      for (size_t jj = 0; jj < ny; ++jj) vy[jj] = monomial_deriv(e.k2, 0, sy * ys[jj], dom.b);
      for (size_t i = 0; i < nx; ++i) {
        double* row = &out[i * ny];
        for (size_t jj = 0; jj < ny; ++jj) row[jj] += vx[i] * vy[jj];
      }
    }
    return out;
  }
  for (size_t i = 0; i < nx; ++i)
    for (size_t jj = 0; jj < ny; ++jj) out[i * ny + jj] = corner.eval(0, 0, sx * xs[i], sy * ys[jj]);
  return out;
}

} // namespace

CompositeSeries2D build_composite_2d(const FunctionSpec2D& f, SeriesKind2D kind, SmoothnessOrder r,
                                     int M, int N, const QuadratureRule& rule) {
  if (M < 0 || N < 0) throw ConfigError("build_composite_2d: truncations must be >= 0");
  require_compatible(kind, f.domain);
  if (!kind_constructible(kind))
    throw UnsupportedKindError("build_composite_2d: kind has no supplementary families");
  const bool full = kind == SeriesKind2D::FullRange;
  const SeriesKind1D kind1 = full ? SeriesKind1D::FullRange : SeriesKind1D::HalfSine;

  CornerFunction corner = solve_corner(f, kind, r);

  // phi1 (x1-direction polynomials, series along x2).
  SupplementaryFamily1D fam1 = polynomial_family_1d(kind1, r, f.domain.a);
  LuFactorization lu1(build_boundary_matrix_1d(fam1, kind1, r, f.domain.a));
  EdgeCoefficientTable q1 = edge_coefficients(f, corner, kind, r, EdgeAxis::X1, N, rule);
  std::vector<std::vector<double>> a1_cos(N + 1), a1_sin(N + 1);
  for (int n = 0; n <= N; ++n) {
    if (full && !q1.cos_modes[n].empty()) a1_cos[n] = lu1.solve(q1.cos_modes[n]);
    if (n >= 1 && !q1.sin_modes[n].empty()) a1_sin[n] = lu1.solve(q1.sin_modes[n]);
  }

  // phi2 (x2-direction polynomials, series along x1).
  SupplementaryFamily1D fam2 = polynomial_family_1d(kind1, r, f.domain.b);
  LuFactorization lu2(build_boundary_matrix_1d(fam2, kind1, r, f.domain.b));
  EdgeCoefficientTable q2 = edge_coefficients(f, corner, kind, r, EdgeAxis::X2, M, rule);
  std::vector<std::vector<double>> a2_cos(M + 1), a2_sin(M + 1);
  for (int m = 0; m <= M; ++m) {
    if (full && !q2.cos_modes[m].empty()) a2_cos[m] = lu2.solve(q2.cos_modes[m]);
    if (m >= 1 && !q2.sin_modes[m].empty()) a2_sin[m] = lu2.solve(q2.sin_modes[m]);
  }

  // Internal coefficients of u - phi1 - phi2 - phi3 on a shared grid.
  const PanelGrid gx = make_panel_grid(0.0, f.domain.a, M + 2, rule);
  const PanelGrid gy = make_panel_grid(0.0, f.domain.b, N + 2, rule);
  const size_t nx = gx.nodes.size(), ny = gy.nodes.size();
  const double alpha = std::numbers::pi / f.domain.a;
  const double beta = std::numbers::pi / f.domain.b;

  InternalCoefficients2D q0;
  if (full) {
    QuadrantValues vals;
    vals.nx = static_cast<int>(nx);
    vals.ny = static_cast<int>(ny);
    auto eval_u = [&](double sx, double sy) {
      std::vector<double> out(nx * ny);
      for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j)
          out[i * ny + j] = f.deriv(0, 0, sx * gx.nodes[i], sy * gy.nodes[j]);
      return out;
    };
    vals.pp = eval_u(1.0, 1.0);
    vals.mp = eval_u(-1.0, 1.0);
    vals.pm = eval_u(1.0, -1.0);
    vals.mm = eval_u(-1.0, -1.0);

    auto subtract = [](std::vector<double>& target, const std::vector<double>& part) {
      for (size_t i = 0; i < target.size(); ++i) target[i] -= part[i];
    };
    subtract(vals.pp, corner_grid_values(corner, f.domain, gx.nodes, gy.nodes, 1.0, 1.0));
    subtract(vals.mp, corner_grid_values(corner, f.domain, gx.nodes, gy.nodes, -1.0, 1.0));
    subtract(vals.pm, corner_grid_values(corner, f.domain, gx.nodes, gy.nodes, 1.0, -1.0));
    subtract(vals.mm, corner_grid_values(corner, f.domain, gx.nodes, gy.nodes, -1.0, -1.0));

    // phi1 = sum_n mu_n [xi1_n(x1) cos + xi2_n(x1) sin](beta_n x2):
    // A = even-in-x2 half, B = odd half, evaluated once per x1 sign.
    {
      const std::vector<double> famp = family_values(fam1, 0, gx.nodes, 1.0);
      const std::vector<double> famm = family_values(fam1, 0, gx.nodes, -1.0);
      const std::vector<double> xi1p = mode_polynomials(a1_cos, famp, fam1.size, nx);
      const std::vector<double> xi1m = mode_polynomials(a1_cos, famm, fam1.size, nx);
      const std::vector<double> xi2p = mode_polynomials(a1_sin, famp, fam1.size, nx);
      const std::vector<double> xi2m = mode_polynomials(a1_sin, famm, fam1.size, nx);
      const std::vector<double> cy = trig_row_table(N, beta, gy.nodes, false, 0, true);
      const std::vector<double> sy = trig_row_table(N, beta, gy.nodes, true, 0, true);
      std::vector<double> Ap(nx * ny, 0.0), Bp(nx * ny, 0.0), Am(nx * ny, 0.0), Bm(nx * ny, 0.0);
      add_product(xi1p, cy, a1_cos.size(), nx, ny, 1.0, Ap);
      add_product(xi2p, sy, a1_sin.size(), nx, ny, 1.0, Bp);
      add_product(xi1m, cy, a1_cos.size(), nx, ny, 1.0, Am);
      add_product(xi2m, sy, a1_sin.size(), nx, ny, 1.0, Bm);
      for (size_t i = 0; i < nx * ny; ++i) {
        vals.pp[i] -= Ap[i] + Bp[i];
        vals.mp[i] -= Am[i] + Bm[i];
        vals.pm[i] -= Ap[i] - Bp[i];
        vals.mm[i] -= Am[i] - Bm[i];
      }
    }
    // phi2 mirrored.
    {
      const std::vector<double> famp = family_values(fam2, 0, gy.nodes, 1.0);
      const std::vector<double> famm = family_values(fam2, 0, gy.nodes, -1.0);
      const std::vector<double> z1p = mode_polynomials(a2_cos, famp, fam2.size, ny);
      const std::vector<double> z1m = mode_polynomials(a2_cos, famm, fam2.size, ny);
      const std::vector<double> z2p = mode_polynomials(a2_sin, famp, fam2.size, ny);
      const std::vector<double> z2m = mode_polynomials(a2_sin, famm, fam2.size, ny);
      const std::vector<double> cx = trig_row_table(M, alpha, gx.nodes, false, 0, true);
      const std::vector<double> sx = trig_row_table(M, alpha, gx.nodes, true, 0, true);
      std::vector<double> Cp(nx * ny, 0.0), Dp(nx * ny, 0.0), Cm(nx * ny, 0.0), Dm(nx * ny, 0.0);
      add_product(cx, z1p, a2_cos.size(), nx, ny, 1.0, Cp);
      add_product(sx, z2p, a2_sin.size(), nx, ny, 1.0, Dp);
      add_product(cx, z1m, a2_cos.size(), nx, ny, 1.0, Cm);
      add_product(sx, z2m, a2_sin.size(), nx, ny, 1.0, Dm);
      for (size_t i = 0; i < nx * ny; ++i) {
        vals.pp[i] -= Cp[i] + Dp[i];
        vals.mp[i] -= Cp[i] - Dp[i];
        vals.pm[i] -= Cm[i] + Dm[i];
        vals.mm[i] -= Cm[i] - Dm[i];
      }
    }
    q0 = coefficients_from_quadrants(f.domain, M, N, gx, gy, vals);
  } else {
    std::vector<double> vals(nx * ny);
    for (size_t i = 0; i < nx; ++i)
      for (size_t j = 0; j < ny; ++j) vals[i * ny + j] = f.deriv(0, 0, gx.nodes[i], gy.nodes[j]);
    auto subtract = [&](const std::vector<double>& part) {
      for (size_t i = 0; i < vals.size(); ++i) vals[i] -= part[i];
    };
    subtract(corner_grid_values(corner, f.domain, gx.nodes, gy.nodes, 1.0, 1.0));
    {
      const std::vector<double> famx = family_values(fam1, 0, gx.nodes, 1.0);
      const std::vector<double> xi = mode_polynomials(a1_sin, famx, fam1.size, nx);
      const std::vector<double> sy = trig_row_table(N, beta, gy.nodes, true, 0, false);
      std::vector<double> part(nx * ny, 0.0);
      add_product(xi, sy, a1_sin.size(), nx, ny, 1.0, part);
      subtract(part);
    }
    {
      const std::vector<double> famy = family_values(fam2, 0, gy.nodes, 1.0);
      const std::vector<double> zeta = mode_polynomials(a2_sin, famy, fam2.size, ny);
      const std::vector<double> sx = trig_row_table(M, alpha, gx.nodes, true, 0, false);
      std::vector<double> part(nx * ny, 0.0);
      add_product(sx, zeta, a2_sin.size(), nx, ny, 1.0, part);
      subtract(part);
    }
    q0 = coefficients_from_grid_sinsin(f.domain, M, N, gx, gy, vals);
  }

  return CompositeSeries2D(r, kind, f.domain, std::move(corner), std::move(fam1), std::move(a1_cos),
                           std::move(a1_sin), std::move(q1), std::move(fam2), std::move(a2_cos),
                           std::move(a2_sin), std::move(q2), std::move(q0), M, N);
}

double evaluate_2d(const CompositeSeries2D& s, int k1, int k2, double x1, double x2) {
  return s.evaluate(k1, k2, x1, x2);
}

} // namespace cfs
