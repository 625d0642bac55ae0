#include "hetnet/link.hpp"

#include <cmath>
#include <vector>

namespace hetnet {

double noise_power(double bandwidth_hz, double noise_figure_db) {
  if (!(bandwidth_hz > 0.0)) throw ConfigError("noise_power: bandwidth must be positive");
  return dbm_to_watt(-174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

namespace {

std::vector<Eigen::VectorXcd> second_stage_beams(const std::vector<Eigen::VectorXcd>& channels,
                                                 PrecodingMode mode) {
  if (mode == PrecodingMode::ZF) return zf_second_stage(channels);
  // first-stage only: one canonical beam per stream
  const Eigen::Index bg = channels.front().size();
  std::vector<Eigen::VectorXcd> beams(channels.size());
  for (std::size_t k = 0; k < channels.size(); ++k)
    beams[k] = Eigen::VectorXcd::Unit(bg, static_cast<Eigen::Index>(k) % bg);
  return beams;
}

/// Serving-BS gains for the typical user (stream 0 of its group):
/// useful |h^H p_0|^2 and residual intra-group leakage sum.
void serving_gains(const LinkContext& ctx, RngStream& rng, double& useful_gain,
                   double& intra_group_gain) {
  const GroupPrecoder& gp = ctx.precoders->groups.at(ctx.typical_group);
  const int users = ctx.cfg->users_per_group();
  std::vector<Eigen::VectorXcd> channels(users);
  for (int k = 0; k < users; ++k) channels[k] = gp.draw_reduced_channel(rng) / gp.norm_factor;

  const auto beams = second_stage_beams(channels, ctx.mode);
  useful_gain = std::norm(channels[0].dot(beams[0]));
  intra_group_gain = 0.0;
  for (std::size_t k = 1; k < beams.size(); ++k)
    intra_group_gain += std::norm(channels[0].dot(beams[k]));
}

/// Interfering-macro beam gain |h_l^H p_l|^2: unit-mean exponential by
/// default, or a fresh precoded draw when full_interferer_precoding is set.
double interferer_beam_gain(const LinkContext& ctx, RngStream& rng) {
  if (!ctx.cfg->full_interferer_precoding) return rng.exponential();
  const GroupPrecoder& gp = ctx.precoders->groups.at(ctx.typical_group);
  const int users = ctx.cfg->users_per_group();
  const Eigen::VectorXcd ours = gp.draw_reduced_channel(rng) / gp.norm_factor;
  std::vector<Eigen::VectorXcd> theirs(users);
  for (int k = 0; k < users; ++k) theirs[k] = gp.draw_reduced_channel(rng) / gp.norm_factor;
  const auto beams = second_stage_beams(theirs, ctx.mode);
  return std::norm(ours.dot(beams[0])) * gp.norm_factor_sq();
}

struct InterfererFilter {
  // ANALYSIS-MATCH mirrors the outage-analysis integrals: the serving link's
  // path-loss exponent for every interferer, distances truncated below the
  // serving distance, and (for a LOS serving link with split exponents) above
  // the interferer tier's LOS radius.
  bool analysis_match;
  double serving_distance;
  double serving_alpha;
  bool serving_los;

  bool keep(const TierParams& tier, double x) const {
    if (!analysis_match) return true;
    if (x < serving_distance) return false;
    if (serving_los && tier.alpha_los < tier.alpha_nlos && x > tier.los_radius) return false;
    return true;
  }
  double alpha(const TierParams& tier, double x, bool los) const {
    if (analysis_match) return serving_alpha;
    return los ? tier.alpha_los : tier.alpha_nlos;
  }
};

}  // namespace

LinkBudget macro_served_sinr(const NetworkRealization& realization, const AssociationOutcome& assoc,
                             const LinkContext& ctx, RngStream& channel_rng,
                             RngStream& interference_rng) {
  if (assoc.kind != ServingKind::Macro)
    throw std::invalid_argument("macro_served_sinr: association outcome is not Macro");
  if (!ctx.precoders || ctx.precoders->groups.empty())
    throw NumericsError("macro_served_sinr: missing precoder for serving BS");
  const NetworkConfig& cfg = *ctx.cfg;
  const double k2 = cfg.kappa_sq();
  const double pm = cfg.macro_stream_power();
  const double ps = cfg.pico_power();

  double useful_gain, intra_gain;
  serving_gains(ctx, channel_rng, useful_gain, intra_gain);

  LinkBudget budget;
  budget.noise_power = cfg.noise_watts();
  const double serving_pl = k2 * std::pow(assoc.serving_distance, -assoc.serving_alpha);
  budget.useful_power = pm * serving_pl * useful_gain;
  budget.interference_macro = pm * serving_pl * intra_gain;  // zero under ZF

  const InterfererFilter filter{cfg.interference_mode == InterferenceMode::AnalysisMatch,
                                assoc.serving_distance, assoc.serving_alpha, assoc.serving_los};

  // I1: other macro BSs
  for (std::size_t l = 0; l < realization.macro_distances.size(); ++l) {
    if (static_cast<int>(l) == assoc.serving_index) continue;
    const double x = realization.macro_distances[l];
    const double gain = interferer_beam_gain(ctx, interference_rng);
    if (!filter.keep(cfg.tier1, x)) continue;
    const double a = filter.alpha(cfg.tier1, x, realization.macro_los[l]);
    budget.interference_macro += pm * k2 * std::pow(x, -a) * gain;
  }
  // I2: every pico BS interferes with a macro-served user; no exclusion
  for (std::size_t j = 0; j < realization.pico_distances.size(); ++j) {
    const double x = realization.pico_distances[j];
    const double gain = interference_rng.exponential();
    if (!filter.keep(cfg.tier2, x)) continue;
    const double a = filter.alpha(cfg.tier2, x, realization.pico_los[j]);
    budget.interference_pico += ps * k2 * std::pow(x, -a) * gain;
  }
  return budget;
}

LinkBudget pico_served_sinr(const NetworkRealization& realization, const AssociationOutcome& assoc,
                            const LinkContext& ctx, RngStream& channel_rng,
                            RngStream& interference_rng) {
  if (assoc.kind != ServingKind::Pico)
    throw std::invalid_argument("pico_served_sinr: association outcome is not Pico");
  const NetworkConfig& cfg = *ctx.cfg;
  const double k2 = cfg.kappa_sq();
  const double pm = cfg.macro_stream_power();
  const double ps = cfg.pico_power();

  LinkBudget budget;
  budget.noise_power = cfg.noise_watts();
  const double fading = channel_rng.exponential();  // |h|^2, h ~ CN(0,1)
  budget.useful_power =
      ps * k2 * std::pow(assoc.serving_distance, -assoc.serving_alpha) * fading;

  const InterfererFilter filter{cfg.interference_mode == InterferenceMode::AnalysisMatch,
                                assoc.serving_distance, assoc.serving_alpha, assoc.serving_los};

  // I3: all macro BSs
  for (std::size_t l = 0; l < realization.macro_distances.size(); ++l) {
    const double x = realization.macro_distances[l];
    const double gain = interferer_beam_gain(ctx, interference_rng);
    if (!filter.keep(cfg.tier1, x)) continue;
    const double a = filter.alpha(cfg.tier1, x, realization.macro_los[l]);
    budget.interference_macro += pm * k2 * std::pow(x, -a) * gain;
  }
  // I4: other pico BSs
  for (std::size_t j = 0; j < realization.pico_distances.size(); ++j) {
    if (static_cast<int>(j) == assoc.serving_index) continue;
    const double x = realization.pico_distances[j];
    const double gain = interference_rng.exponential();
    if (!filter.keep(cfg.tier2, x)) continue;
    const double a = filter.alpha(cfg.tier2, x, realization.pico_los[j]);
    budget.interference_pico += ps * k2 * std::pow(x, -a) * gain;
  }
  return budget;
}

}  // namespace hetnet
