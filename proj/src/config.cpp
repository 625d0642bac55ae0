#include "hetnet/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hetnet {

using nlohmann::json;

double NetworkConfig::noise_watts() const {
  const double n0_dbm = -174.0 + 10.0 * std::log10(bandwidth) + noise_figure_db;
  return dbm_to_watt(n0_dbm);
}

NetworkConfig default_config() {
  NetworkConfig cfg;
  cfg.tier1 = {1e-5, dbm_to_watt(53.0), 200.0, 20.0, 4.0, 4.0};
  cfg.tier2 = {1e-4, dbm_to_watt(33.0), 60.0, 20.0, 4.0, 4.0};
  cfg.carrier_frequency = 28e9;
  cfg.bandwidth = 1e9;
  cfg.noise_figure_db = 10.0;
  cfg.num_antennas = 128;
  cfg.num_users = 10;
  cfg.antenna_spacing = 0.5;
  const double deg = M_PI / 180.0;
  cfg.groups = {{-30.0 * deg, 15.0 * deg, 0.5, 128}, {0.0, 15.0 * deg, 0.5, 128}};
  cfg.streams_per_group = {5, 5};
  cfg.user_density = 1e-3;
  cfg.energy_fraction = 0.99;
  cfg.seed = 1;
  return cfg;
}

namespace {

void check(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError("config field '" + field + "': " + what);
}

void parse_tier(const json& j, TierParams& t, const std::string& name) {
  if (j.contains("density")) t.density = j.at("density").get<double>();
  if (j.contains("power_dbm")) t.tx_power = dbm_to_watt(j.at("power_dbm").get<double>());
  if (j.contains("disc_radius")) t.disc_radius = j.at("disc_radius").get<double>();
  if (j.contains("los_radius")) t.los_radius = j.at("los_radius").get<double>();
  if (j.contains("alpha")) t.alpha_los = t.alpha_nlos = j.at("alpha").get<double>();
  if (j.contains("alpha_los")) t.alpha_los = j.at("alpha_los").get<double>();
  if (j.contains("alpha_nlos")) t.alpha_nlos = j.at("alpha_nlos").get<double>();
  check(t.density >= 0.0, name + ".density", "must be >= 0");
}

}  // namespace

void NetworkConfig::validate() const {
  auto tier_checks = [](const TierParams& t, const std::string& name) {
    check(t.tx_power > 0.0, name + ".power_dbm", "transmit power must be positive");
    check(t.disc_radius > 0.0, name + ".disc_radius", "must be positive");
    check(t.los_radius > 0.0 && t.los_radius <= t.disc_radius, name + ".los_radius",
          "must satisfy 0 < los_radius <= disc_radius");
    check(t.alpha_los <= t.alpha_nlos, name + ".alpha_los", "LOS exponent must not exceed NLOS");
    check(t.density >= 0.0, name + ".density", "must be >= 0");
  };
  tier_checks(tier1, "tier1");
  tier_checks(tier2, "tier2");
  check(carrier_frequency > 0.0, "carrier_frequency_hz", "must be positive");
  check(bandwidth > 0.0, "bandwidth_hz", "must be positive");
  check(num_antennas >= 1, "num_antennas", "must be >= 1");
  check(num_users >= 1, "num_users", "must be >= 1");
  check(antenna_spacing > 0.0, "antenna_spacing", "must be positive");
  check(!groups.empty(), "groups", "need at least one group");
  check(streams_per_group.size() == groups.size(), "streams_per_group",
        "must have one entry per group");
  for (const auto& g : groups) {
    check(g.angular_spread > 0.0 && g.angular_spread < M_PI / 2.0, "groups.angular_spread_deg",
          "must lie in (0, 90) degrees");
  }
  check(num_users % static_cast<int>(groups.size()) == 0, "num_users",
        "must be divisible by the number of groups");
  int s = 0;
  for (int sg : streams_per_group) {
    check(sg >= 1, "streams_per_group", "entries must be >= 1");
    s += sg;
  }
  check(s <= num_antennas, "streams_per_group", "total streams must not exceed num_antennas");
  check(energy_fraction > 0.0 && energy_fraction <= 1.0, "energy_fraction", "must lie in (0,1]");
  check(user_density > 0.0, "user_density", "must be positive");
}

NetworkConfig parse_config(const std::string& text) {
  NetworkConfig cfg = default_config();
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (!trimmed.empty()) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    try {
      if (j.contains("tier1")) parse_tier(j.at("tier1"), cfg.tier1, "tier1");
      if (j.contains("tier2")) parse_tier(j.at("tier2"), cfg.tier2, "tier2");
      if (j.contains("carrier_frequency_hz")) cfg.carrier_frequency = j.at("carrier_frequency_hz");
      if (j.contains("bandwidth_hz")) cfg.bandwidth = j.at("bandwidth_hz");
      if (j.contains("noise_figure_db")) cfg.noise_figure_db = j.at("noise_figure_db");
      if (j.contains("num_antennas")) cfg.num_antennas = j.at("num_antennas");
      if (j.contains("num_users")) cfg.num_users = j.at("num_users");
      if (j.contains("antenna_spacing")) cfg.antenna_spacing = j.at("antenna_spacing");
      if (j.contains("user_density")) cfg.user_density = j.at("user_density");
      if (j.contains("energy_fraction")) cfg.energy_fraction = j.at("energy_fraction");
      if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("groups")) {
        cfg.groups.clear();
        const double deg = M_PI / 180.0;
        for (const auto& jg : j.at("groups")) {
          GroupGeometry g;
          g.aoa = jg.at("aoa_deg").get<double>() * deg;
          g.angular_spread = jg.at("angular_spread_deg").get<double>() * deg;
          g.antenna_spacing = cfg.antenna_spacing;
          g.num_antennas = cfg.num_antennas;
          cfg.groups.push_back(g);
        }
        cfg.streams_per_group.assign(cfg.groups.size(),
                                     cfg.num_users / std::max<std::size_t>(1, cfg.groups.size()));
      }
      if (j.contains("streams_per_group"))
        cfg.streams_per_group = j.at("streams_per_group").get<std::vector<int>>();
      if (j.contains("interference_mode")) {
        const std::string m = j.at("interference_mode");
        if (m == "analysis_match")
          cfg.interference_mode = InterferenceMode::AnalysisMatch;
        else if (m == "physical")
          cfg.interference_mode = InterferenceMode::Physical;
        else
          throw ConfigError("interference_mode must be 'analysis_match' or 'physical'");
      }
      if (j.contains("laplace_form")) {
        const std::string m = j.at("laplace_form");
        if (m == "campbell")
          cfg.laplace_form = LaplaceForm::Campbell;
        else if (m == "as_written")
          cfg.laplace_form = LaplaceForm::AsWritten;
        else
          throw ConfigError("laplace_form must be 'campbell' or 'as_written'");
      }
      if (j.contains("full_interferer_precoding"))
        cfg.full_interferer_precoding = j.at("full_interferer_precoding").get<bool>();
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config error: ") + e.what());
    }
  }
  // keep group antenna bookkeeping in sync with top-level fields
  for (auto& g : cfg.groups) {
    g.antenna_spacing = cfg.antenna_spacing;
    g.num_antennas = cfg.num_antennas;
  }
  cfg.validate();
  return cfg;
}

NetworkConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

std::uint64_t config_hash(const NetworkConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  auto tier = [&os](const TierParams& t) {
    os << t.density << '|' << t.tx_power << '|' << t.disc_radius << '|' << t.los_radius << '|'
       << t.alpha_los << '|' << t.alpha_nlos << '|';
  };
  tier(cfg.tier1);
  tier(cfg.tier2);
  os << cfg.carrier_frequency << '|' << cfg.bandwidth << '|' << cfg.noise_figure_db << '|'
     << cfg.num_antennas << '|' << cfg.num_users << '|' << cfg.antenna_spacing << '|'
     << cfg.user_density << '|' << cfg.energy_fraction << '|'
     << static_cast<int>(cfg.interference_mode) << '|' << static_cast<int>(cfg.laplace_form) << '|'
     << cfg.full_interferer_precoding << '|' << cfg.seed << '|';
  for (const auto& g : cfg.groups) os << g.aoa << ',' << g.angular_spread << ';';
  for (int s : cfg.streams_per_group) os << s << ',';
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : os.str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hetnet
