#include <doctest.h>

#include <cmath>

#include "hetnet/quadrature.hpp"

using namespace hetnet;

TEST_CASE("Gauss-Legendre 64 nodes are symmetric and weights sum to 2") {
  const auto& x = gauss_legendre64_nodes();
  const auto& w = gauss_legendre64_weights();
  double wsum = 0.0;
  for (std::size_t i = 0; i < 64; ++i) {
    wsum += w[i];
    CHECK(x[i] == doctest::Approx(-x[63 - i]).epsilon(1e-14));
    CHECK(w[i] == doctest::Approx(w[63 - i]).epsilon(1e-13));
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Legendre 64 integrates smooth functions to machine precision") {
  CHECK(gauss_legendre64([](double t) { return std::sin(t); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gauss_legendre64([](double t) { return t * t * t; }, -1.0, 3.0) ==
        doctest::Approx(20.0).epsilon(1e-13));
  // oscillatory kernel typical of the covariance integrals
  CHECK(gauss_legendre64([](double t) { return std::cos(10.0 * std::sin(t)); }, -0.5, 0.5) ==
        doctest::Approx(-0.221571578567055).epsilon(1e-11));  // independent quadrature oracle
}

TEST_CASE("adaptive quadrature handles smooth and singular integrands") {
  CHECK(adaptive_quadrature([](double t) { return std::exp(-t); }, 0.0, 50.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(adaptive_quadrature([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-5));
  CHECK(adaptive_quadrature([](double) { return 1.0; }, 3.0, 3.0) == 0.0);
}

TEST_CASE("adaptive quadrature reports non-convergence") {
  // an exhausted refinement budget must trip, not hang
  CHECK_THROWS_AS(adaptive_quadrature([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0,
                                      1e-12, 1e-16, 3),
                  NumericsError);
}

TEST_CASE("masked Simpson integrates separable functions on the full rectangle") {
  auto all = [](double, double) { return true; };
  const auto r = masked_simpson2d([](double x, double y) { return x * y; }, all, 0.0, 1.0, 0.0,
                                  1.0);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("masked Simpson recovers areas of implicit regions") {
  auto one = [](double, double) { return 1.0; };
  const auto tri =
      masked_simpson2d(one, [](double x, double y) { return x + y < 1.0; }, 0.0, 1.0, 0.0, 1.0);
  CHECK(tri.value == doctest::Approx(0.5).epsilon(2e-3));
  const auto disc = masked_simpson2d(
      one, [](double x, double y) { return x * x + y * y < 1.0; }, 0.0, 1.0, 0.0, 1.0);
  CHECK(disc.value == doctest::Approx(M_PI / 4.0).epsilon(2e-3));
}

TEST_CASE("masked Simpson returns zero on empty rectangles") {
  auto all = [](double, double) { return true; };
  CHECK(masked_simpson2d([](double, double) { return 1.0; }, all, 1.0, 1.0, 0.0, 2.0).value ==
        0.0);
}
