#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetnet {

inline constexpr double kSpeedOfLight = 2.998e8;  // m/s

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One BS tier: density, transmit power and the LOS-ball geometry.
struct TierParams {
  double density = 0.0;      // BS per m^2
  double tx_power = 0.0;     // watts
  double disc_radius = 0.0;  // m
  double los_radius = 0.0;   // m
  double alpha_los = 4.0;
  double alpha_nlos = 4.0;

  bool enabled() const { return density > 0.0; }
  double alpha_at(double distance) const { return distance < los_radius ? alpha_los : alpha_nlos; }
  bool los_at(double distance) const { return distance < los_radius; }
  double mean_count() const { return density * M_PI * disc_radius * disc_radius; }
};

struct GroupGeometry {
  double aoa = 0.0;             // radians
  double angular_spread = 0.0;  // radians
  double antenna_spacing = 0.5; // carrier wavelengths
  int num_antennas = 0;
};

enum class InterferenceMode { AnalysisMatch, Physical };
enum class LaplaceForm { Campbell, AsWritten };

struct NetworkConfig {
  TierParams tier1;  // macro
  TierParams tier2;  // pico

  double carrier_frequency = 28e9;  // Hz
  double bandwidth = 1e9;           // Hz
  double noise_figure_db = 10.0;

  int num_antennas = 128;  // M
  int num_users = 10;      // K
  double antenna_spacing = 0.5;
  std::vector<GroupGeometry> groups;
  std::vector<int> streams_per_group;
  double user_density = 1e-3;
  double energy_fraction = 0.99;

  InterferenceMode interference_mode = InterferenceMode::AnalysisMatch;
  LaplaceForm laplace_form = LaplaceForm::Campbell;
  bool full_interferer_precoding = false;
  std::uint64_t seed = 1;

  int total_streams() const {
    int s = 0;
    for (int sg : streams_per_group) s += sg;
    return s;
  }
  int users_per_group() const { return num_users / static_cast<int>(groups.size()); }

  // Macro power is split equally across streams: P_m = P_1 / S, P_s = P_2.
  double macro_stream_power() const { return tier1.tx_power / total_streams(); }
  double pico_power() const { return tier2.tx_power; }

  double wavelength() const { return kSpeedOfLight / carrier_frequency; }
  double kappa_sq() const {
    double k = wavelength() / (4.0 * M_PI);
    return k * k;
  }
  double noise_watts() const;

  void validate() const;
};

/// Built-in default parameter set.
NetworkConfig default_config();

/// Load a JSON config; absent fields fall back to the built-in defaults.
NetworkConfig load_config(const std::string& path);
NetworkConfig parse_config(const std::string& json_text);

/// FNV-1a over the canonical serialized form; embedded in CSV output.
std::uint64_t config_hash(const NetworkConfig& cfg);

}  // namespace hetnet
