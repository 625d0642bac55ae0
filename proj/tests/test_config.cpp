#include <doctest.h>

#include "hetnet/config.hpp"

using namespace hetnet;

TEST_CASE("default configuration carries the standard parameter set") {
  const NetworkConfig cfg = default_config();
  CHECK(cfg.tier1.density == doctest::Approx(1e-5));
  CHECK(cfg.tier2.density == doctest::Approx(1e-4));
  CHECK(cfg.tier1.tx_power == doctest::Approx(dbm_to_watt(53.0)));
  CHECK(cfg.tier2.tx_power == doctest::Approx(dbm_to_watt(33.0)));
  CHECK(cfg.tier1.disc_radius == 200.0);
  CHECK(cfg.tier2.disc_radius == 60.0);
  CHECK(cfg.tier1.los_radius == 20.0);
  CHECK(cfg.tier2.los_radius == 20.0);
  CHECK(cfg.tier1.alpha_los == 4.0);
  CHECK(cfg.tier1.alpha_nlos == 4.0);
  CHECK(cfg.num_antennas == 128);
  CHECK(cfg.num_users == 10);
  CHECK(cfg.carrier_frequency == doctest::Approx(28e9));
  CHECK(cfg.bandwidth == doctest::Approx(1e9));
  CHECK(cfg.noise_figure_db == 10.0);
  CHECK(cfg.groups.size() == 2);
  CHECK(cfg.groups[0].aoa == doctest::Approx(-30.0 * M_PI / 180.0));
  CHECK(cfg.groups[1].aoa == doctest::Approx(0.0));
  CHECK(cfg.groups[0].angular_spread == doctest::Approx(15.0 * M_PI / 180.0));
  CHECK(cfg.total_streams() == 10);
  cfg.validate();
}

TEST_CASE("derived link-budget constants") {
  const NetworkConfig cfg = default_config();
  // N0 = -174 + 10log10(1e9) + 10 = -74 dBm
  CHECK(cfg.noise_watts() == doctest::Approx(3.98107170553497e-11).epsilon(1e-12));
  // kappa^2 = (lambda_c / 4 pi)^2 at 28 GHz
  CHECK(cfg.kappa_sq() == doctest::Approx(7.259846969564e-07).epsilon(1e-10));
  // P_m = P_1 / S with S = 10 streams
  CHECK(cfg.macro_stream_power() == doctest::Approx(dbm_to_watt(53.0) / 10.0));
  CHECK(cfg.pico_power() == doctest::Approx(dbm_to_watt(33.0)));
}

TEST_CASE("empty input parses to full defaults") {
  const NetworkConfig cfg = parse_config("");
  CHECK(config_hash(cfg) == config_hash(default_config()));
}

TEST_CASE("partial override changes only the named field") {
  const NetworkConfig cfg = parse_config(R"({"tier2": {"density": 3e-4}})");
  CHECK(cfg.tier2.density == doctest::Approx(3e-4));
  NetworkConfig expect = default_config();
  expect.tier2.density = 3e-4;
  CHECK(config_hash(cfg) == config_hash(expect));
  CHECK(config_hash(cfg) != config_hash(default_config()));
}

TEST_CASE("invalid configurations are rejected with the field named") {
  CHECK_THROWS_AS(parse_config(R"({"tier1": {"density": -1.0}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"bandwidth_hz": -5.0})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"laplace_form": "bogus"})"), ConfigError);
  CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
  try {
    parse_config(R"({"tier1": {"density": -1.0}})");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("density") != std::string::npos);
  }
}

TEST_CASE("dB helpers round-trip") {
  CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0));
  CHECK(watt_to_dbm(dbm_to_watt(17.3)) == doctest::Approx(17.3));
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
  CHECK(linear_to_db(db_to_linear(-7.5)) == doctest::Approx(-7.5));
}

TEST_CASE("engine flags parse") {
  CHECK(parse_config(R"({"laplace_form": "as_written"})").laplace_form == LaplaceForm::AsWritten);
  CHECK(parse_config(R"({"interference_mode": "physical"})").interference_mode ==
        InterferenceMode::Physical);
  CHECK(parse_config(R"({"full_interferer_precoding": true})").full_interferer_precoding);
}
