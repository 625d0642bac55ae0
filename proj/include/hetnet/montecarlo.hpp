#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/analytic.hpp"
#include "hetnet/link.hpp"

namespace hetnet {

struct SimPlan {
  std::uint64_t num_drops = 10000;
  std::uint64_t seed = 1;
  std::vector<double> thresholds_db;
  Scenario scenario = Scenario::TwoTier;
  InterferenceMode interference = InterferenceMode::AnalysisMatch;
  PrecodingMode precoding = PrecodingMode::ZF;
  int typical_group = 0;
  bool include_no_bs = true;  // count NoBS drops as outage (total-outage view)
};

struct SimResult {
  std::vector<double> thresholds_db;
  std::vector<double> outage;            // P(SINR < T), NoBS counted as outage
  std::vector<double> outage_ci;         // 1.96 * sqrt(p(1-p)/N)
  std::vector<double> snr_outage;        // P(SNR < T)
  std::uint64_t drops = 0;
  std::uint64_t no_bs_drops = 0;
  std::uint64_t macro_drops = 0;
  std::uint64_t pico_drops = 0;
  double mean_inr_db = 0.0;              // mean interference-to-noise ratio, dB
  std::uint64_t error_drops = 0;
  std::vector<std::string> errors;       // first few messages, for diagnostics
};

/// Per-drop SINR/SNR of the typical user. Exposed for pointwise paired
/// comparisons between precoding modes and scenarios.
struct DropOutcome {
  ServingKind kind = ServingKind::NoBS;
  double sinr = 0.0;
  double snr = 0.0;
};

DropOutcome simulate_drop(const NetworkConfig& cfg, const PrecoderSet& precoders,
                          const SimPlan& plan, std::uint64_t drop);

SimResult run_simulation(const NetworkConfig& cfg, const PrecoderSet& precoders,
                         const SimPlan& plan);

/// Convenience: build the long-term precoders from the config, then run.
SimResult run_simulation(const NetworkConfig& cfg, const SimPlan& plan);

struct DensitySweepPoint {
  double ratio = 0.0;  // lambda_2 / lambda_1
  double analytic_outage = 0.0;
  double simulated_outage = 0.0;
  double simulated_ci = 0.0;
};

/// Outage at a fixed threshold as the pico/macro density ratio sweeps a grid.
std::vector<DensitySweepPoint> sweep_density_ratio(const NetworkConfig& cfg,
                                                   const std::vector<double>& ratios,
                                                   double threshold_db, double norm_factor_sq,
                                                   std::uint64_t sim_drops, std::uint64_t seed);

}  // namespace hetnet
