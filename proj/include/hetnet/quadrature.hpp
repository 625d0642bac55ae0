#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "hetnet/config.hpp"

namespace hetnet {

/// 64-node Gauss-Legendre nodes/weights on [-1, 1].
const std::array<double, 64>& gauss_legendre64_nodes();
const std::array<double, 64>& gauss_legendre64_weights();

template <class F>
double gauss_legendre64(F&& f, double a, double b) {
  const auto& x = gauss_legendre64_nodes();
  const auto& w = gauss_legendre64_weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * f(mid + half * x[i]);
  return half * sum;
}

/// Adaptive Gauss-Kronrod (G7/K15) with interval bisection.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-6, double abs_tol = 1e-14,
                           int max_intervals = 4000);

struct Simpson2DResult {
  double value = 0.0;
  double previous = 0.0;  // last pre-extrapolation pair, kept for error reports
  int levels = 0;
};

/// Masked tensor-grid Simpson over [ax,bx]x[ay,by] with Richardson refinement.
/// `mask(x,y)` gates the integrand; refinement stops when the extrapolated
/// estimate changes by less than rel_tol.
Simpson2DResult masked_simpson2d(const std::function<double(double, double)>& f,
                                 const std::function<bool(double, double)>& mask,
                                 double ax, double bx, double ay, double by,
                                 double rel_tol = 1e-4, double abs_tol = 1e-7,
                                 int max_levels = 8);

}  // namespace hetnet
