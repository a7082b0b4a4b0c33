#pragma once

#include <random>
#include <vector>

#include "cfs/basis.hpp"
#include "cfs/types.hpp"

namespace cfs::testing {

/// Exact-derivative spec of sum_p c[p] (x/a)^p.
inline FunctionSpec1D poly_spec_1d(const Domain1D& domain, std::vector<double> coef) {
  const double a = domain.a;
  return FunctionSpec1D{domain, [coef = std::move(coef), a](int k, double x) {
                          double acc = 0.0;
                          for (size_t p = 0; p < coef.size(); ++p)
                            acc += coef[p] * monomial_deriv(static_cast<int>(p), k, x, a);
                          return acc;
                        }};
}

/// Exact-derivative spec of sum c[j][l] (x1/a)^j (x2/b)^l over j+l <= degree
/// (entries beyond the triangle are ignored).
inline FunctionSpec2D poly_spec_2d(const Domain2D& domain,
                                   std::vector<std::vector<double>> coef) {
  const double a = domain.a, b = domain.b;
  return FunctionSpec2D{domain, [coef = std::move(coef), a, b](int k1, int k2, double x1, double x2) {
                          double acc = 0.0;
                          for (size_t j = 0; j < coef.size(); ++j)
                            for (size_t l = 0; l < coef[j].size(); ++l)
                              acc += coef[j][l] * monomial_deriv(static_cast<int>(j), k1, x1, a) *
                                     monomial_deriv(static_cast<int>(l), k2, x2, b);
                          return acc;
                        }};
}

inline std::vector<double> random_coefficients(std::mt19937& rng, int count) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> out(count);
  for (double& v : out) v = dist(rng);
  return out;
}

/// Random complete polynomial of the given total degree.
inline std::vector<std::vector<double>> random_poly_2d(std::mt19937& rng, int degree) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::vector<double>> coef(degree + 1);
  for (int j = 0; j <= degree; ++j) {
    coef[j].assign(degree + 1 - j, 0.0);
    for (double& v : coef[j]) v = dist(rng);
  }
  return coef;
}

} // namespace cfs::testing
