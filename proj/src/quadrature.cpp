#include "hetnet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hetnet {
namespace {

struct GL64 {
  std::array<double, 64> x{};
  std::array<double, 64> w{};
  GL64() {
    // Newton iteration on Legendre P_64.
    const int n = 64;
    for (int i = 0; i < n; ++i) {
      double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p0, p1, dp;
      for (int it = 0; it < 100; ++it) {
        p0 = 1.0;
        p1 = xi;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
        double dx = p1 / dp;
        xi -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      x[n - 1 - i] = xi;
      w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
  }
};

const GL64& gl64() {
  static const GL64 g;
  return g;
}

// Gauss 7 / Kronrod 15 nodes and weights (positive half).
constexpr double kKronrodNodes[8] = {
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr double kKronrodWeights[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr double kGaussWeights[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

void g7k15(const std::function<double(double)>& f, double a, double b, double& val, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double k15 = kKronrodWeights[0] * f0;
  double g7 = kGaussWeights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fs = f(mid - dx) + f(mid + dx);
    k15 += kKronrodWeights[i] * fs;
    if (i % 2 == 0) g7 += kGaussWeights[i / 2] * fs;
  }
  val = k15 * half;
  err = std::abs((k15 - g7) * half);
}

}  // namespace

const std::array<double, 64>& gauss_legendre64_nodes() { return gl64().x; }
const std::array<double, 64>& gauss_legendre64_weights() { return gl64().w; }

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, int max_intervals) {
  if (!(b > a)) return 0.0;
  struct Interval {
    double a, b, val, err;
  };
  std::vector<Interval> stack;
  double v0, e0;
  g7k15(f, a, b, v0, e0);
  stack.push_back({a, b, v0, e0});
  double total = v0;
  double total_err = e0;
  int splits = 0;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (splits++ > max_intervals) {
      std::ostringstream os;
      os << "adaptive_quadrature: no convergence on [" << a << "," << b
         << "], estimate=" << total << " err=" << total_err;
      throw NumericsError(os.str());
    }
    // split the worst interval
    std::size_t worst = 0;
    for (std::size_t i = 1; i < stack.size(); ++i)
      if (stack[i].err > stack[worst].err) worst = i;
    Interval iv = stack[worst];
    stack.erase(stack.begin() + static_cast<long>(worst));
    const double m = 0.5 * (iv.a + iv.b);
    double vl, el, vr, er;
    g7k15(f, iv.a, m, vl, el);
    g7k15(f, m, iv.b, vr, er);
    total += vl + vr - iv.val;
    total_err += el + er - iv.err;
    stack.push_back({iv.a, m, vl, el});
    stack.push_back({m, iv.b, vr, er});
  }
  return total;
}

Simpson2DResult masked_simpson2d(const std::function<double(double, double)>& f,
                                 const std::function<bool(double, double)>& mask,
                                 double ax, double bx, double ay, double by,
                                 double rel_tol, double abs_tol, int max_levels) {
  if (!(bx > ax) || !(by > ay)) return {0.0, 0.0, 0};

  auto level_sum = [&](int n) {
    // n intervals per axis (even), n+1 points
    const double hx = (bx - ax) / n;
    const double hy = (by - ay) / n;
    auto wt = [n](int i) { return (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0); };
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double x = ax + i * hx;
      const double wi = wt(i);
      double row = 0.0;
      for (int j = 0; j <= n; ++j) {
        const double y = ay + j * hy;
        if (!mask(x, y)) continue;
        row += wt(j) * f(x, y);
      }
      sum += wi * row;
    }
    return sum * hx * hy / 9.0;
  };

  Simpson2DResult res;
  int n = 32;
  double prev_raw = level_sum(n);
  double prev_extrap = prev_raw;
  bool have_extrap = false;
  for (int level = 1; level <= max_levels; ++level) {
    n *= 2;
    const double raw = level_sum(n);
    // Mask truncation error is O(h); extrapolate the leading term away.
    const double extrap = 2.0 * raw - prev_raw;
    res.levels = level;
    if (have_extrap) {
      const double change = std::abs(extrap - prev_extrap);
      if (change <= std::max(abs_tol, rel_tol * std::abs(extrap))) {
        res.value = extrap;
        res.previous = prev_extrap;
        return res;
      }
    }
    have_extrap = true;
    prev_extrap = extrap;
    prev_raw = raw;
  }
  std::ostringstream os;
  os << "masked_simpson2d: no convergence after " << max_levels
     << " refinements; last estimates " << prev_extrap << " and " << prev_raw;
  throw NumericsError(os.str());
}

}  // namespace hetnet
