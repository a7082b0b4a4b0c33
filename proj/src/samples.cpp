#include "cfs/samples.hpp"

#include <cmath>
#include <numbers>

#include "cfs/basis.hpp"
#include "cfs/quadrature.hpp"

namespace cfs {

namespace {

// u(x) = 1/2 - (x/a) - (x/a)^2/2 + (x/a)^3
std::function<double(int, double)> cubic_poly(double a) {
  return [a](int k, double x) {
    const double c[4] = {0.5, -1.0, -0.5, 1.0};
    double acc = 0.0;
    for (int p = 0; p <= 3; ++p)
      if (k <= p) acc += c[p] * monomial_deriv(p, k, x, a);
    return acc;
  };
}

// u(x) = sin(c x); derivatives cycle through sin, cos, -sin, -cos.
std::function<double(int, double)> sine_wave(double c) {
  return [c](int k, double x) {
    const double amp = int_pow(c, k);
    switch (k % 4) {
      case 0: return amp * std::sin(c * x);
      case 1: return amp * std::cos(c * x);
      case 2: return -amp * std::sin(c * x);
      default: return -amp * std::cos(c * x);
    }
  };
}

std::function<double(int, double)> cosine_wave(double c) {
  return [c](int k, double x) {
    const double amp = int_pow(c, k);
    switch (k % 4) {
      case 0: return amp * std::cos(c * x);
      case 1: return -amp * std::sin(c * x);
      case 2: return -amp * std::cos(c * x);
      default: return amp * std::sin(c * x);
    }
  };
}

FunctionSpec2D product_spec(const Domain2D& domain, std::function<double(int, double)> u1,
                            std::function<double(int, double)> u2) {
  return FunctionSpec2D{domain, [u1 = std::move(u1), u2 = std::move(u2)](
                                    int k1, int k2, double x1, double x2) {
                          return u1(k1, x1) * u2(k2, x2);
                        }};
}

} // namespace

SampleCase get_sample(int id) {
  const double a = 1.0, b = 1.0;
  const double alpha0 = std::numbers::pi / (2.0 * a);
  const double beta0 = std::numbers::pi / (2.0 * b);
  SampleCase s;
  s.id = id;
  switch (id) {
    case 1:
      s.two_dim = false;
      s.kind1d = SeriesKind1D::FullRange;
      s.f1 = FunctionSpec1D{symmetric_interval(a), cubic_poly(a)};
      s.description = "cubic polynomial on [-a,a]";
      break;
    case 2:
      s.two_dim = false;
      s.kind1d = SeriesKind1D::FullRange;
      s.f1 = FunctionSpec1D{symmetric_interval(a), sine_wave(alpha0)};
      s.description = "sin(pi x / 2a) on [-a,a]";
      break;
    case 3:
      s.two_dim = false;
      s.kind1d = SeriesKind1D::HalfSine;
      s.f1 = FunctionSpec1D{nonnegative_interval(a), cubic_poly(a)};
      s.description = "cubic polynomial on [0,a], half-range sine";
      break;
    case 4:
      s.two_dim = false;
      s.kind1d = SeriesKind1D::HalfSine;
      s.f1 = FunctionSpec1D{nonnegative_interval(a), cosine_wave(alpha0)};
      s.description = "cos(pi x / 2a) on [0,a], half-range sine";
      break;
    case 5:
      s.two_dim = true;
      s.kind2d = SeriesKind2D::FullRange;
      s.f2 = product_spec(symmetric_rectangle(a, b), cubic_poly(a), cubic_poly(b));
      s.description = "cubic x cubic on [-a,a]x[-b,b]";
      break;
    case 6:
      s.two_dim = true;
      s.kind2d = SeriesKind2D::FullRange;
      s.f2 = product_spec(symmetric_rectangle(a, b), sine_wave(alpha0), cosine_wave(beta0));
      s.description = "sin(pi x1 / 2a) cos(pi x2 / 2b) on [-a,a]x[-b,b]";
      break;
    case 7:
      s.two_dim = true;
      s.kind2d = SeriesKind2D::SinSin;
      s.f2 = product_spec(nonnegative_rectangle(a, b), cubic_poly(a), cubic_poly(b));
      s.description = "cubic x cubic on [0,a]x[0,b], sine-sine";
      break;
    case 8:
      s.two_dim = true;
      s.kind2d = SeriesKind2D::SinSin;
      s.f2 = product_spec(nonnegative_rectangle(a, b), sine_wave(alpha0), cosine_wave(beta0));
      s.description = "sin(pi x1 / 2a) cos(pi x2 / 2b) on [0,a]x[0,b], sine-sine";
      break;
    default:
      throw UnknownSampleError("sample id must be 1..8");
  }
  return s;
}

} // namespace cfs
