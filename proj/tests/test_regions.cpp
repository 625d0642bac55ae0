#include <doctest.h>

#include <cmath>

#include "hetnet/geometry.hpp"
#include "hetnet/regions.hpp"
#include "hetnet/rng.hpp"

using namespace hetnet;

namespace {

NetworkConfig random_region_config(RngStream& rng) {
  NetworkConfig cfg = default_config();
  cfg.tier1.disc_radius = 50.0 + 250.0 * rng.uniform();
  cfg.tier2.disc_radius = 20.0 + 80.0 * rng.uniform();
  cfg.tier1.los_radius = cfg.tier1.disc_radius * (0.05 + 0.9 * rng.uniform());
  cfg.tier2.los_radius = cfg.tier2.disc_radius * (0.05 + 0.9 * rng.uniform());
  const double a1 = 2.0 + 3.0 * rng.uniform();
  const double a2 = 2.0 + 3.0 * rng.uniform();
  cfg.tier1.alpha_los = std::min(a1, a2);
  cfg.tier1.alpha_nlos = std::max(a1, a2);
  const double b1 = 2.0 + 3.0 * rng.uniform();
  const double b2 = 2.0 + 3.0 * rng.uniform();
  cfg.tier2.alpha_los = std::min(b1, b2);
  cfg.tier2.alpha_nlos = std::max(b1, b2);
  cfg.tier1.tx_power = dbm_to_watt(40.0 + 20.0 * rng.uniform());
  cfg.tier2.tx_power = dbm_to_watt(20.0 + 20.0 * rng.uniform());
  return cfg;
}

// serving-link exponents used by the case, macro link first
std::pair<double, double> case_alphas(AlphaCase c, const NetworkConfig& cfg) {
  const CaseRectangle rect = case_rectangle(c, cfg);
  return {rect.macro_los ? cfg.tier1.alpha_los : cfg.tier1.alpha_nlos,
          rect.pico_los ? cfg.tier2.alpha_los : cfg.tier2.alpha_nlos};
}

bool near_decision_boundary(AlphaCase c, const NetworkConfig& cfg, double r_m, double r_s) {
  const auto [am, ap] = case_alphas(c, cfg);
  const double lhs = std::log(cfg.pico_power()) - ap * std::log(r_s);
  const double rhs = std::log(cfg.macro_stream_power()) - am * std::log(r_m);
  return std::abs(lhs - rhs) < 1e-9;
}

}  // namespace

TEST_CASE("case rectangles tile the distance domain") {
  const NetworkConfig cfg = default_config();
  double area = 0.0;
  for (AlphaCase c : {AlphaCase::LL, AlphaCase::NL, AlphaCase::LN, AlphaCase::NN}) {
    const CaseRectangle rect = case_rectangle(c, cfg);
    CHECK(rect.rm_lo >= 0.0);
    CHECK(rect.rm_hi <= cfg.tier1.disc_radius);
    CHECK(rect.rs_hi <= cfg.tier2.disc_radius);
    area += (rect.rm_hi - rect.rm_lo) * (rect.rs_hi - rect.rs_lo);
  }
  CHECK(area == doctest::Approx(cfg.tier1.disc_radius * cfg.tier2.disc_radius));
}

TEST_CASE("closed-form membership equals the received-power oracle on random draws") {
  RngStream rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const NetworkConfig cfg = random_region_config(rng);
    for (AlphaCase c : {AlphaCase::LL, AlphaCase::NL, AlphaCase::LN, AlphaCase::NN}) {
      const CaseRectangle rect = case_rectangle(c, cfg);
      for (int i = 0; i < 500; ++i) {
        const double rm = rect.rm_lo + (rect.rm_hi - rect.rm_lo) * rng.uniform();
        const double rs = rect.rs_lo + (rect.rs_hi - rect.rs_lo) * rng.uniform();
        if (rm <= 0.0 || rs <= 0.0 || near_decision_boundary(c, cfg, rm, rs)) continue;
        for (ServingTier tier : {ServingTier::Macro, ServingTier::Pico}) {
          REQUIRE(region_membership(c, tier, cfg, rm, rs) ==
                  oracle_membership(c, tier, cfg, rm, rs));
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 50000);
}

TEST_CASE("macro and pico regions partition each case rectangle") {
  RngStream rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const NetworkConfig cfg = random_region_config(rng);
    for (AlphaCase c : {AlphaCase::LL, AlphaCase::NL, AlphaCase::LN, AlphaCase::NN}) {
      const CaseRectangle rect = case_rectangle(c, cfg);
      for (int i = 0; i < 300; ++i) {
        const double rm = rect.rm_lo + (rect.rm_hi - rect.rm_lo) * rng.uniform();
        const double rs = rect.rs_lo + (rect.rs_hi - rect.rs_lo) * rng.uniform();
        if (rm <= 0.0 || rs <= 0.0 || near_decision_boundary(c, cfg, rm, rs)) continue;
        const bool macro = region_membership(c, ServingTier::Macro, cfg, rm, rs);
        const bool pico = region_membership(c, ServingTier::Pico, cfg, rm, rs);
        REQUIRE(macro != pico);
      }
    }
  }
}

TEST_CASE("points outside the distance domain are rejected") {
  const NetworkConfig cfg = default_config();
  CHECK_THROWS_AS(region_membership(AlphaCase::NN, ServingTier::Macro, cfg, -1.0, 10.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(region_membership(AlphaCase::NN, ServingTier::Macro, cfg, 10.0, 1000.0),
                  std::invalid_argument);
}

TEST_CASE("region integrals of 1 sum to the both-tiers-present probability") {
  const NetworkConfig cfg = default_config();
  auto one = [](double, double) { return 1.0; };
  double total = 0.0;
  for (AlphaCase c : {AlphaCase::LL, AlphaCase::NL, AlphaCase::LN, AlphaCase::NN})
    for (ServingTier tier : {ServingTier::Macro, ServingTier::Pico})
      total += integrate_over_region(c, tier, cfg, one);
  const double expected = (1.0 - std::exp(-cfg.tier1.mean_count())) *
                          (1.0 - std::exp(-cfg.tier2.mean_count()));
  CHECK(total == doctest::Approx(expected).epsilon(2e-3));
}

TEST_CASE("NN macro-region mass matches rejection sampling") {
  const NetworkConfig cfg = default_config();
  auto one = [](double, double) { return 1.0; };
  const double integral = integrate_over_region(AlphaCase::NN, ServingTier::Macro, cfg, one);

  // rejection sampling of nearest distances conditioned on both tiers present
  RngStream rng(1234);
  const std::uint64_t samples = 400000;
  std::uint64_t hits = 0;
  auto nearest = [&](const TierParams& t) {
    // inverse CDF of the nearest distance within the disc
    const double u = rng.uniform() * (1.0 - std::exp(-t.mean_count()));
    return std::sqrt(-std::log(1.0 - u) / (t.density * M_PI));
  };
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double rm = nearest(cfg.tier1);
    const double rs = nearest(cfg.tier2);
    if (oracle_membership(AlphaCase::NN, ServingTier::Macro, cfg, rm, rs)) ++hits;
  }
  const double both = (1.0 - std::exp(-cfg.tier1.mean_count())) *
                      (1.0 - std::exp(-cfg.tier2.mean_count()));
  const double mc = both * static_cast<double>(hits) / samples;
  const double sigma = both * std::sqrt(1.0 / samples);
  CHECK(std::abs(integral - mc) < std::max(4.0 * sigma, 5e-3 * integral));
}

TEST_CASE("disabled tier collapses region integrals to zero") {
  NetworkConfig cfg = default_config();
  cfg.tier2.density = 0.0;
  auto one = [](double, double) { return 1.0; };
  CHECK(integrate_over_region(AlphaCase::NN, ServingTier::Macro, cfg, one) == 0.0);
}
