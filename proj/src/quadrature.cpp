#include "cfs/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace cfs {

namespace {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const GaussRule& cached_rule(int n) {
  if (n < 2) throw ConfigError("Gauss-Legendre rule needs at least 2 nodes");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

int panel_count(int oscillation_index, const QuadratureRule& rule) {
  if (oscillation_index < 0) throw ConfigError("oscillation index must be >= 0");
  return std::max(rule.panels_base, 2 * oscillation_index);
}

double check_finite(double v) {
  if (!std::isfinite(v)) throw NonFiniteIntegrandError("integrand evaluated to a non-finite value");
  return v;
}

} // namespace

const std::vector<double>& gauss_legendre_nodes(int n) { return cached_rule(n).nodes; }
const std::vector<double>& gauss_legendre_weights(int n) { return cached_rule(n).weights; }

PanelGrid make_panel_grid(double lo, double hi, int oscillation_index, const QuadratureRule& rule) {
  const GaussRule& gl = cached_rule(rule.nodes_per_panel);
  const int panels = panel_count(oscillation_index, rule);
  const double h = (hi - lo) / panels;
  PanelGrid grid;
  grid.nodes.reserve(static_cast<size_t>(panels) * rule.nodes_per_panel);
  grid.weights.reserve(grid.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double c = lo + (p + 0.5) * h;
    for (int i = 0; i < rule.nodes_per_panel; ++i) {
      grid.nodes.push_back(c + 0.5 * h * gl.nodes[i]);
      grid.weights.push_back(0.5 * h * gl.weights[i]);
    }
  }
  return grid;
}

double integrate_1d(const std::function<double(double)>& g, double lo, double hi,
                    int oscillation_index, const QuadratureRule& rule) {
  if (!(lo < hi)) throw ConfigError("integrate_1d: requires lo < hi");
  const PanelGrid grid = make_panel_grid(lo, hi, oscillation_index, rule);
  double acc = 0.0;
  for (size_t i = 0; i < grid.nodes.size(); ++i) acc += grid.weights[i] * check_finite(g(grid.nodes[i]));
  return acc;
}

double integrate_2d(const std::function<double(double, double)>& g, const Domain2D& domain,
                    int osc1, int osc2, const QuadratureRule& rule) {
  const Domain1D d1 = domain.axis1(), d2 = domain.axis2();
  const PanelGrid gx = make_panel_grid(d1.lo(), d1.hi(), osc1, rule);
  const PanelGrid gy = make_panel_grid(d2.lo(), d2.hi(), osc2, rule);
  double acc = 0.0;
  for (size_t j = 0; j < gy.nodes.size(); ++j) {
    double row = 0.0;
    for (size_t i = 0; i < gx.nodes.size(); ++i)
      row += gx.weights[i] * check_finite(g(gx.nodes[i], gy.nodes[j]));
    acc += gy.weights[j] * row;
  }
  return acc;
}

FourierCoefficients1D fourier_coefficients_1d(const std::function<double(double)>& g,
                                              SeriesKind1D kind, const Domain1D& domain,
                                              int max_mode, const QuadratureRule& rule) {
  if (max_mode < 0) throw ConfigError("fourier_coefficients_1d: max_mode must be >= 0");
  require_compatible(kind, domain);
  const double a = domain.a;
  const double alpha = std::numbers::pi / a;
  // One grid on [0,a] sized for the highest mode serves every coefficient.
  const PanelGrid grid = make_panel_grid(0.0, a, max_mode + 2, rule);
  const size_t n = grid.nodes.size();

  FourierCoefficients1D out;
  out.kind = kind;
  if (kind == SeriesKind1D::FullRange) {
    std::vector<double> even(n), odd(n);
    for (size_t i = 0; i < n; ++i) {
      const double gp = check_finite(g(grid.nodes[i]));
      const double gm = check_finite(g(-grid.nodes[i]));
      even[i] = gp + gm;
      odd[i] = gp - gm;
    }
    out.cosine.assign(max_mode + 1, 0.0);
    out.sine.assign(max_mode + 1, 0.0);
    for (int m = 0; m <= max_mode; ++m) {
      const double w = m * alpha;
      double vc = 0.0, vs = 0.0;
      for (size_t i = 0; i < n; ++i) {
        vc += grid.weights[i] * even[i] * std::cos(w * grid.nodes[i]);
        if (m > 0) vs += grid.weights[i] * odd[i] * std::sin(w * grid.nodes[i]);
      }
      out.cosine[m] = vc / a;
      if (m > 0) out.sine[m] = vs / a;
    }
    return out;
  }

  std::vector<double> values(n);
  for (size_t i = 0; i < n; ++i) values[i] = check_finite(g(grid.nodes[i]));
  if (kind == SeriesKind1D::HalfCosine) {
    out.cosine.assign(max_mode + 1, 0.0);
    for (int m = 0; m <= max_mode; ++m) {
      const double w = m * alpha;
      double acc = 0.0;
      for (size_t i = 0; i < n; ++i) acc += grid.weights[i] * values[i] * std::cos(w * grid.nodes[i]);
      out.cosine[m] = 2.0 * acc / a;
    }
  } else {
    out.sine.assign(max_mode + 1, 0.0);
    for (int m = 1; m <= max_mode; ++m) {
      const double w = m * alpha;
      double acc = 0.0;
      for (size_t i = 0; i < n; ++i) acc += grid.weights[i] * values[i] * std::sin(w * grid.nodes[i]);
      out.sine[m] = 2.0 * acc / a;
    }
  }
  return out;
}

namespace {

// trig(i, m) tables for a mode list against a node list.
std::vector<double> trig_table(const PanelGrid& grid, double alpha, int max_mode, bool sine) {
  const size_t n = grid.nodes.size();
  std::vector<double> table(static_cast<size_t>(max_mode + 1) * n);
  for (int m = 0; m <= max_mode; ++m) {
    const double w = m * alpha;
    for (size_t i = 0; i < n; ++i)
      table[static_cast<size_t>(m) * n + i] =
          grid.weights[i] * (sine ? std::sin(w * grid.nodes[i]) : std::cos(w * grid.nodes[i]));
  }
  return table;
}

// out(m,n) = sum_ij Tx(m,i) values(i,j) Ty(n,j), scaled.
void contract(const std::vector<double>& values, size_t nx, size_t ny,
              const std::vector<double>& tx, int M, const std::vector<double>& ty, int N,
              double scale, int m_lo, int n_lo, std::vector<double>& out, int out_stride) {
  // First contract over i: mid(m,j) = sum_i Tx(m,i) values(i,j).
  std::vector<double> mid(static_cast<size_t>(M + 1) * ny, 0.0);
  for (int m = m_lo; m <= M; ++m) {
    const double* txm = &tx[static_cast<size_t>(m) * nx];
    double* midm = &mid[static_cast<size_t>(m) * ny];
    for (size_t i = 0; i < nx; ++i) {
      const double t = txm[i];
      if (t == 0.0) continue;
      const double* row = &values[i * ny];
      for (size_t j = 0; j < ny; ++j) midm[j] += t * row[j];
    }
  }
  for (int m = m_lo; m <= M; ++m) {
    const double* midm = &mid[static_cast<size_t>(m) * ny];
    for (int n = n_lo; n <= N; ++n) {
      const double* tyn = &ty[static_cast<size_t>(n) * ny];
      double acc = 0.0;
      for (size_t j = 0; j < ny; ++j) acc += tyn[j] * midm[j];
      out[static_cast<size_t>(m) * out_stride + n] = scale * acc;
    }
  }
}

} // namespace

FourierCoefficients2D coefficients_from_quadrants(const Domain2D& domain, int M, int N,
                                                  const PanelGrid& gx, const PanelGrid& gy,
                                                  const QuadrantValues& values) {
  const size_t nx = gx.nodes.size(), ny = gy.nodes.size();
  const double alpha = std::numbers::pi / domain.a;
  const double beta = std::numbers::pi / domain.b;
  const double scale = 1.0 / (domain.a * domain.b);

  std::vector<double> ee(nx * ny), oe(nx * ny), eo(nx * ny), oo(nx * ny);
  for (size_t i = 0; i < nx * ny; ++i) {
    const double pp = values.pp[i], mp = values.mp[i], pm = values.pm[i], mm = values.mm[i];
    ee[i] = (pp + mp) + (pm + mm);
    oe[i] = (pp - mp) + (pm - mm);
    eo[i] = (pp + mp) - (pm + mm);
    oo[i] = (pp - mp) - (pm - mm);
  }

  const std::vector<double> cx = trig_table(gx, alpha, M, false);
  const std::vector<double> sx = trig_table(gx, alpha, M, true);
  const std::vector<double> cy = trig_table(gy, beta, N, false);
  const std::vector<double> sy = trig_table(gy, beta, N, true);

  FourierCoefficients2D out;
  out.kind = SeriesKind2D::FullRange;
  out.M = M;
  out.N = N;
  const size_t sz = static_cast<size_t>(M + 1) * (N + 1);
  out.cc.assign(sz, 0.0);
  out.sc.assign(sz, 0.0);
  out.cs.assign(sz, 0.0);
  out.ss.assign(sz, 0.0);
  contract(ee, nx, ny, cx, M, cy, N, scale, 0, 0, out.cc, N + 1);
  contract(oe, nx, ny, sx, M, cy, N, scale, 1, 0, out.sc, N + 1);
  contract(eo, nx, ny, cx, M, sy, N, scale, 0, 1, out.cs, N + 1);
  contract(oo, nx, ny, sx, M, sy, N, scale, 1, 1, out.ss, N + 1);
  return out;
}

FourierCoefficients2D coefficients_from_grid_sinsin(const Domain2D& domain, int M, int N,
                                                    const PanelGrid& gx, const PanelGrid& gy,
                                                    const std::vector<double>& values) {
  const size_t nx = gx.nodes.size(), ny = gy.nodes.size();
  const double alpha = std::numbers::pi / domain.a;
  const double beta = std::numbers::pi / domain.b;
  const std::vector<double> sx = trig_table(gx, alpha, M, true);
  const std::vector<double> sy = trig_table(gy, beta, N, true);

  FourierCoefficients2D out;
  out.kind = SeriesKind2D::SinSin;
  out.M = M;
  out.N = N;
  out.ss.assign(static_cast<size_t>(M + 1) * (N + 1), 0.0);
  contract(values, nx, ny, sx, M, sy, N, 4.0 / (domain.a * domain.b), 1, 1, out.ss, N + 1);
  return out;
}

FourierCoefficients2D half_range_coefficients_2d(const std::function<double(double, double)>& g,
                                                 bool cos_axis1, bool cos_axis2,
                                                 const Domain2D& domain, int M, int N,
                                                 const QuadratureRule& rule) {
  if (M < 0 || N < 0) throw ConfigError("half_range_coefficients_2d: modes must be >= 0");
  if (domain.kind != IntervalKind::Nonnegative)
    throw ConfigError("half-range expansion needs a nonnegative domain");
  const PanelGrid gx = make_panel_grid(0.0, domain.a, M + 2, rule);
  const PanelGrid gy = make_panel_grid(0.0, domain.b, N + 2, rule);
  const size_t nx = gx.nodes.size(), ny = gy.nodes.size();
  std::vector<double> values(nx * ny);
  for (size_t i = 0; i < nx; ++i)
    for (size_t j = 0; j < ny; ++j) values[i * ny + j] = check_finite(g(gx.nodes[i], gy.nodes[j]));

  const double alpha = std::numbers::pi / domain.a;
  const double beta = std::numbers::pi / domain.b;
  const std::vector<double> tx = trig_table(gx, alpha, M, !cos_axis1);
  const std::vector<double> ty = trig_table(gy, beta, N, !cos_axis2);

  FourierCoefficients2D out;
  out.kind = SeriesKind2D::SinSin;
  out.M = M;
  out.N = N;
  std::vector<double>& slot = cos_axis1 ? (cos_axis2 ? out.cc : out.cs)
                                        : (cos_axis2 ? out.sc : out.ss);
  slot.assign(static_cast<size_t>(M + 1) * (N + 1), 0.0);
  contract(values, nx, ny, tx, M, ty, N, 4.0 / (domain.a * domain.b), cos_axis1 ? 0 : 1,
           cos_axis2 ? 0 : 1, slot, N + 1);
  return out;
}

FourierCoefficients2D fourier_coefficients_2d(const std::function<double(double, double)>& g,
                                              SeriesKind2D kind, const Domain2D& domain, int M,
                                              int N, const QuadratureRule& rule) {
  if (M < 0 || N < 0) throw ConfigError("fourier_coefficients_2d: modes must be >= 0");
  require_compatible(kind, domain);
  if (!kind_constructible(kind))
    throw UnsupportedKindError("no coefficient extraction for this 2D series kind");
  const PanelGrid gx = make_panel_grid(0.0, domain.a, M + 2, rule);
  const PanelGrid gy = make_panel_grid(0.0, domain.b, N + 2, rule);
  const size_t nx = gx.nodes.size(), ny = gy.nodes.size();
  if (kind == SeriesKind2D::SinSin) {
    std::vector<double> values(nx * ny);
    for (size_t i = 0; i < nx; ++i)
      for (size_t j = 0; j < ny; ++j) values[i * ny + j] = check_finite(g(gx.nodes[i], gy.nodes[j]));
    return coefficients_from_grid_sinsin(domain, M, N, gx, gy, values);
  }
  QuadrantValues q;
  q.nx = static_cast<int>(nx);
  q.ny = static_cast<int>(ny);
  q.pp.resize(nx * ny);
  q.mp.resize(nx * ny);
  q.pm.resize(nx * ny);
  q.mm.resize(nx * ny);
  for (size_t i = 0; i < nx; ++i) {
    const double x = gx.nodes[i];
    for (size_t j = 0; j < ny; ++j) {
      const double y = gy.nodes[j];
      q.pp[i * ny + j] = check_finite(g(x, y));
      q.mp[i * ny + j] = check_finite(g(-x, y));
      q.pm[i * ny + j] = check_finite(g(x, -y));
      q.mm[i * ny + j] = check_finite(g(-x, -y));
    }
  }
  return coefficients_from_quadrants(domain, M, N, gx, gy, q);
}

double cos_deriv(int k, double w, double x) {
  if (k == 0) return std::cos(w * x);
  const double amp = int_pow(w, k);
  if (k % 2 == 0) {
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * amp * std::cos(w * x);
  }
  const double sign = (((k + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * amp * std::sin(w * x);
}

double sin_deriv(int k, double w, double x) {
  if (k == 0) return std::sin(w * x);
  const double amp = int_pow(w, k);
  if (k % 2 == 0) {
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * amp * std::sin(w * x);
  }
  const double sign = (((k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * amp * std::cos(w * x);
}

double int_pow(double x, int p) {
  double acc = 1.0;
  for (int i = 0; i < p; ++i) acc *= x;
  return acc;
}

} // namespace cfs
