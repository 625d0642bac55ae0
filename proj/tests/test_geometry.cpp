#include <doctest.h>

#include <cmath>

#include "hetnet/geometry.hpp"

using namespace hetnet;

namespace {

NetworkRealization two_station_drop(double r_m, double r_s, const NetworkConfig& cfg) {
  NetworkRealization r;
  r.macro_positions = {{r_m, 0.0}};
  r.macro_distances = {r_m};
  r.macro_los = {cfg.tier1.los_at(r_m)};
  r.pico_positions = {{0.0, r_s}};
  r.pico_distances = {r_s};
  r.pico_los = {cfg.tier2.los_at(r_s)};
  return r;
}

}  // namespace

TEST_CASE("nearest-distance pdf matches the Poisson void formula") {
  TierParams tier;
  tier.density = 1e-5;
  tier.disc_radius = 200.0;
  // 2*lambda*pi*d*exp(-lambda*pi*d^2) at d = 100
  CHECK(nearest_distance_pdf(tier, 100.0) == doctest::Approx(4.58925545672128e-3).epsilon(1e-10));
  // integrates to 1 - exp(-lambda*pi*R^2) over the disc
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double d = (i + 0.5) * tier.disc_radius / n;
    sum += nearest_distance_pdf(tier, d) * tier.disc_radius / n;
  }
  CHECK(sum == doctest::Approx(1.0 - std::exp(-tier.mean_count())).epsilon(1e-8));
}

TEST_CASE("mean BS counts follow the disc areas") {
  const NetworkConfig cfg = default_config();
  CHECK(cfg.tier1.mean_count() == doctest::Approx(0.4 * M_PI));   // 1e-5 * pi * 200^2
  CHECK(cfg.tier2.mean_count() == doctest::Approx(0.36 * M_PI));  // 1e-4 * pi * 60^2
}

TEST_CASE("sampled realizations respect disc and LOS invariants") {
  const NetworkConfig cfg = default_config();
  RngStream rng(42);
  double count_sum = 0.0;
  const int drops = 4000;
  for (int d = 0; d < drops; ++d) {
    const NetworkRealization r = sample_realization(cfg, rng);
    count_sum += static_cast<double>(r.macro_distances.size() + r.pico_distances.size());
    for (std::size_t i = 0; i < r.macro_distances.size(); ++i) {
      CHECK(r.macro_distances[i] <= cfg.tier1.disc_radius);
      CHECK(r.macro_distances[i] == doctest::Approx(r.macro_positions[i].norm()).epsilon(1e-12));
      CHECK(r.macro_los[i] == (r.macro_distances[i] < cfg.tier1.los_radius));
    }
    for (std::size_t i = 0; i < r.pico_distances.size(); ++i) {
      CHECK(r.pico_distances[i] <= cfg.tier2.disc_radius);
      CHECK(r.pico_los[i] == (r.pico_distances[i] < cfg.tier2.los_radius));
    }
  }
  const double mean = cfg.tier1.mean_count() + cfg.tier2.mean_count();
  const double sigma = std::sqrt(mean / drops);
  CHECK(std::abs(count_sum / drops - mean) < 4.0 * sigma);
}

TEST_CASE("association picks the stronger tier and breaks ties toward pico") {
  const NetworkConfig cfg = default_config();
  // equal received power: P_s r_s^-4 = P_m r_m^-4 -> r_s = r_m (P_s/P_m)^{1/4}
  const double ratio = std::pow(cfg.pico_power() / cfg.macro_stream_power(), 0.25);
  const double r_m = 100.0;
  const double tie_rs = r_m * ratio;

  // an exact tie needs bit-identical received powers: equal powers, equal
  // distances evaluate through the same expressions
  NetworkConfig tie_cfg = cfg;
  tie_cfg.tier2.tx_power = cfg.macro_stream_power();
  AssociationOutcome tie = associate(two_station_drop(50.0, 50.0, tie_cfg), tie_cfg);
  CHECK(tie.kind == ServingKind::Pico);
  CHECK(tie.serving_distance == doctest::Approx(50.0));
  CHECK(tie.serving_alpha == 4.0);

  AssociationOutcome macro = associate(two_station_drop(r_m, tie_rs * 1.01, cfg), cfg);
  CHECK(macro.kind == ServingKind::Macro);
  CHECK(macro.serving_distance == doctest::Approx(r_m));

  AssociationOutcome pico = associate(two_station_drop(r_m, tie_rs * 0.99, cfg), cfg);
  CHECK(pico.kind == ServingKind::Pico);
}

TEST_CASE("association reports NoBS on empty realizations and single-tier fallbacks") {
  const NetworkConfig cfg = default_config();
  NetworkRealization empty;
  CHECK(associate(empty, cfg).kind == ServingKind::NoBS);

  NetworkRealization only_macro;
  only_macro.macro_positions = {{15.0, 0.0}};
  only_macro.macro_distances = {15.0};
  only_macro.macro_los = {true};
  const AssociationOutcome a = associate(only_macro, cfg);
  CHECK(a.kind == ServingKind::Macro);
  CHECK(a.serving_los);
  CHECK(a.serving_alpha == cfg.tier1.alpha_los);
}

TEST_CASE("identical substreams reproduce identical realizations") {
  const NetworkConfig cfg = default_config();
  RngStream a = RngStream::substream(7, 123, 0);
  RngStream b = RngStream::substream(7, 123, 0);
  const NetworkRealization ra = sample_realization(cfg, a);
  const NetworkRealization rb = sample_realization(cfg, b);
  REQUIRE(ra.macro_distances.size() == rb.macro_distances.size());
  REQUIRE(ra.pico_distances.size() == rb.pico_distances.size());
  for (std::size_t i = 0; i < ra.macro_distances.size(); ++i)
    CHECK(ra.macro_distances[i] == rb.macro_distances[i]);
  // different lane gives a different drop
  RngStream c = RngStream::substream(7, 123, 1);
  const NetworkRealization rc = sample_realization(cfg, c);
  CHECK((rc.macro_distances.size() != ra.macro_distances.size() ||
         rc.pico_distances.size() != ra.pico_distances.size() ||
         (ra.macro_distances.size() > 0 && rc.macro_distances[0] != ra.macro_distances[0])));
}
