#include "hetnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "hetnet/channel.hpp"

namespace hetnet {

namespace {

// Per-drop substream lanes. Geometry samples tier 1 before tier 2, so the
// macro field of drop d is identical in the one-tier and two-tier scenarios.
constexpr std::uint64_t kGeometryLane = 0;
constexpr std::uint64_t kChannelLane = 1;
constexpr std::uint64_t kInterferenceLane = 2;

}  // namespace

DropOutcome simulate_drop(const NetworkConfig& cfg, const PrecoderSet& precoders,
                          const SimPlan& plan, std::uint64_t drop) {
  NetworkConfig run_cfg = plan.scenario == Scenario::OneTier ? one_tier_config(cfg) : cfg;
  run_cfg.interference_mode = plan.interference;

  RngStream geometry_rng = RngStream::substream(plan.seed, drop, kGeometryLane);
  RngStream channel_rng = RngStream::substream(plan.seed, drop, kChannelLane);
  RngStream interference_rng = RngStream::substream(plan.seed, drop, kInterferenceLane);

  const NetworkRealization realization = sample_realization(run_cfg, geometry_rng);
  const AssociationOutcome assoc = associate(realization, run_cfg);

  DropOutcome out;
  out.kind = assoc.kind;
  if (assoc.kind == ServingKind::NoBS) return out;

  LinkContext ctx;
  ctx.cfg = &run_cfg;
  ctx.precoders = &precoders;
  ctx.typical_group = plan.typical_group;
  ctx.mode = plan.precoding;

  const LinkBudget budget = assoc.kind == ServingKind::Macro
                                ? macro_served_sinr(realization, assoc, ctx, channel_rng,
                                                    interference_rng)
                                : pico_served_sinr(realization, assoc, ctx, channel_rng,
                                                   interference_rng);
  out.sinr = budget.sinr();
  out.snr = budget.snr();
  return out;
}

SimResult run_simulation(const NetworkConfig& cfg, const PrecoderSet& precoders,
                         const SimPlan& plan) {
  SimResult result;
  result.thresholds_db = plan.thresholds_db;
  result.drops = plan.num_drops;

  std::vector<double> thresholds_linear;
  thresholds_linear.reserve(plan.thresholds_db.size());
  for (double t : plan.thresholds_db) thresholds_linear.push_back(db_to_linear(t));

  std::vector<std::uint64_t> outage_count(thresholds_linear.size(), 0);
  std::vector<std::uint64_t> snr_outage_count(thresholds_linear.size(), 0);
  double inr_sum = 0.0;
  std::uint64_t inr_samples = 0;
  const std::uint64_t max_errors = std::max<std::uint64_t>(1, plan.num_drops / 1000);

  for (std::uint64_t d = 0; d < plan.num_drops; ++d) {
    DropOutcome drop;
    try {
      drop = simulate_drop(cfg, precoders, plan, d);
    } catch (const std::exception& e) {
      ++result.error_drops;
      if (result.errors.size() < 5) result.errors.push_back(e.what());
      if (result.error_drops > max_errors)
        throw NumericsError("run_simulation: drop failure rate exceeded 0.1%: " +
                            std::string(e.what()));
      drop = DropOutcome{};  // counted as outage at every threshold
    }

    switch (drop.kind) {
      case ServingKind::NoBS: ++result.no_bs_drops; break;
      case ServingKind::Macro: ++result.macro_drops; break;
      case ServingKind::Pico: ++result.pico_drops; break;
    }
    if (drop.kind != ServingKind::NoBS && drop.snr > 0.0) {
      inr_sum += drop.snr / drop.sinr - 1.0;  // (N+I)/N - 1 = I/N
      ++inr_samples;
    }
    if (!plan.include_no_bs && drop.kind == ServingKind::NoBS) continue;
    for (std::size_t i = 0; i < thresholds_linear.size(); ++i) {
      if (drop.sinr < thresholds_linear[i]) ++outage_count[i];
      if (drop.snr < thresholds_linear[i]) ++snr_outage_count[i];
    }
  }

  const double n = std::max<double>(1.0, static_cast<double>(
      plan.include_no_bs ? plan.num_drops : plan.num_drops - result.no_bs_drops));
  result.outage.resize(thresholds_linear.size());
  result.outage_ci.resize(thresholds_linear.size());
  result.snr_outage.resize(thresholds_linear.size());
  for (std::size_t i = 0; i < thresholds_linear.size(); ++i) {
    const double p = static_cast<double>(outage_count[i]) / n;
    result.outage[i] = p;
    result.outage_ci[i] = 1.96 * std::sqrt(p * (1.0 - p) / n);
    result.snr_outage[i] = static_cast<double>(snr_outage_count[i]) / n;
  }
  result.mean_inr_db =
      inr_samples > 0 ? 10.0 * std::log10(std::max(inr_sum / inr_samples, 1e-300)) : 0.0;
  return result;
}

SimResult run_simulation(const NetworkConfig& cfg, const SimPlan& plan) {
  std::vector<GroupChannelModel> models;
  models.reserve(cfg.groups.size());
  for (const auto& g : cfg.groups)
    models.push_back(eigendecompose(one_ring_covariance(g), cfg.energy_fraction));
  const PrecoderSet precoders = build_precoder_set(cfg, models);
  return run_simulation(cfg, precoders, plan);
}

std::vector<DensitySweepPoint> sweep_density_ratio(const NetworkConfig& cfg,
                                                   const std::vector<double>& ratios,
                                                   double threshold_db, double norm_factor_sq,
                                                   std::uint64_t sim_drops, std::uint64_t seed) {
  // The long-term precoders do not depend on the deployment densities.
  std::vector<GroupChannelModel> models;
  models.reserve(cfg.groups.size());
  for (const auto& g : cfg.groups)
    models.push_back(eigendecompose(one_ring_covariance(g), cfg.energy_fraction));
  const PrecoderSet precoders = build_precoder_set(cfg, models);

  const double threshold_linear = db_to_linear(threshold_db);
  std::vector<DensitySweepPoint> points;
  points.reserve(ratios.size());
  for (double ratio : ratios) {
    NetworkConfig swept = cfg;
    swept.tier2.density = ratio * cfg.tier1.density;
    DensitySweepPoint pt;
    pt.ratio = ratio;
    pt.analytic_outage =
        total_outage(threshold_linear, swept, norm_factor_sq, OutageMode::SINR).total();
    if (sim_drops > 0) {
      SimPlan plan;
      plan.num_drops = sim_drops;
      plan.seed = seed;
      plan.thresholds_db = {threshold_db};
      const SimResult sim = run_simulation(swept, precoders, plan);
      pt.simulated_outage = sim.outage[0];
      pt.simulated_ci = sim.outage_ci[0];
    }
    points.push_back(pt);
  }
  return points;
}

}  // namespace hetnet
