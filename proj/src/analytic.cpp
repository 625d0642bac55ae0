#include "hetnet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hetnet/channel.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/precoding.hpp"
#include "hetnet/quadrature.hpp"

namespace hetnet {

double outage_xi(ServingTier tier, const NetworkConfig& cfg, double norm_factor_sq) {
  const double n0 = cfg.noise_watts();
  const double k2 = cfg.kappa_sq();
  if (tier == ServingTier::Macro) return n0 * norm_factor_sq / (cfg.macro_stream_power() * k2);
  return n0 / (cfg.pico_power() * k2);
}

namespace {

const TierParams& tier_params(ServingTier t, const NetworkConfig& cfg) {
  return t == ServingTier::Macro ? cfg.tier1 : cfg.tier2;
}

double tier_power(ServingTier t, const NetworkConfig& cfg) {
  return t == ServingTier::Macro ? cfg.macro_stream_power() : cfg.pico_power();
}

}  // namespace

double laplace_interference(ServingTier interferer, const OutageQuery& query,
                            const NetworkConfig& cfg, double norm_factor_sq) {
  const TierParams& tier = tier_params(interferer, cfg);
  if (!tier.enabled()) return 1.0;

  const double lo = query.serving_distance;
  double hi = tier.disc_radius;
  // A LOS serving link with split exponents only sees interferers inside the
  // LOS ball of the interfering tier; farther ones attenuate under the larger
  // NLOS exponent and are dropped from the matched-exponent transform.
  if (query.serving_los && tier.alpha_los < tier.alpha_nlos)
    hi = std::min(hi, tier.los_radius);
  if (lo >= hi) return 1.0;

  const double alpha = query.serving_alpha;
  const double xi = outage_xi(query.tier, cfg, norm_factor_sq);
  const double da_t = std::pow(query.serving_distance, alpha) * query.threshold;
  const double p_k2 = tier_power(interferer, cfg) * cfg.kappa_sq();

  double s, radial_scale, radial_exp;
  if (cfg.laplace_form == LaplaceForm::Campbell) {
    s = xi * da_t / cfg.noise_watts();
    radial_scale = 2.0 * M_PI * tier.density;
    radial_exp = 1.0;
  } else {
    s = xi * da_t;
    radial_scale = 2.0 * M_PI * tier.density * alpha;
    radial_exp = alpha;
  }

  auto integrand = [&](double x) {
    const double pl = p_k2 * std::pow(x, -alpha);
    return radial_scale * std::pow(x, radial_exp) * (1.0 - 1.0 / (1.0 + s * pl));
  };
  // exponent sits inside exp(-x); absolute error 1e-8 is far below visibility
  const double exponent = adaptive_quadrature(integrand, lo, hi, 1e-6, 1e-8);
  return std::exp(-exponent);
}

double user_outage(const OutageQuery& query, const NetworkConfig& cfg, double norm_factor_sq,
                   InterferenceScope scope) {
  const double xi = outage_xi(query.tier, cfg, norm_factor_sq);
  const double da_t = std::pow(query.serving_distance, query.serving_alpha) * query.threshold;
  double success = std::exp(-xi * da_t);
  if (scope == InterferenceScope::Both) {
    success *= laplace_interference(ServingTier::Macro, query, cfg, norm_factor_sq);
    success *= laplace_interference(ServingTier::Pico, query, cfg, norm_factor_sq);
  } else if (scope == InterferenceScope::SameTierOnly) {
    success *= laplace_interference(query.tier, query, cfg, norm_factor_sq);
  }
  return 1.0 - success;
}

namespace {

/// Conditional outage of a served user as a function of its own nearest
/// distance, memoized: the 2-D region integrals vary the other tier's
/// coordinate without changing the outage factor.
class OutageCache {
 public:
  OutageCache(ServingTier tier, double alpha, bool los, double threshold,
              const NetworkConfig& cfg, double norm_factor_sq, InterferenceScope scope)
      : tier_(tier), alpha_(alpha), los_(los), threshold_(threshold), cfg_(cfg),
        norm_factor_sq_(norm_factor_sq), scope_(scope) {}

  double operator()(double d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    OutageQuery q;
    q.tier = tier_;
    q.serving_distance = d;
    q.serving_alpha = alpha_;
    q.serving_los = los_;
    q.threshold = threshold_;
    const double v = user_outage(q, cfg_, norm_factor_sq_, scope_);
    cache_.emplace(d, v);
    return v;
  }

 private:
  ServingTier tier_;
  double alpha_, threshold_;
  bool los_;
  const NetworkConfig& cfg_;
  double norm_factor_sq_;
  InterferenceScope scope_;
  std::map<double, double> cache_;
};

/// Outage contribution when only `tier` has a BS inside its disc: integral of
/// the conditional outage (same-tier interference only) against the nearest
/// distance pdf, split at the LOS radius.
double single_tier_term(ServingTier tier, double threshold, const NetworkConfig& cfg,
                        double norm_factor_sq, InterferenceScope scope) {
  const TierParams& p = tier_params(tier, cfg);
  if (!p.enabled()) return 0.0;
  const double split = std::clamp(p.los_radius, 0.0, p.disc_radius);
  double sum = 0.0;
  const struct { double lo, hi; bool los; } segments[] = {
      {0.0, split, true}, {split, p.disc_radius, false}};
  for (const auto& seg : segments) {
    if (seg.hi <= seg.lo) continue;
    const double alpha = seg.los ? p.alpha_los : p.alpha_nlos;
    OutageCache outage(tier, alpha, seg.los, threshold, cfg, norm_factor_sq, scope);
    auto f = [&](double d) { return outage(d) * nearest_distance_pdf(p, d); };
    sum += adaptive_quadrature(f, seg.lo, seg.hi, 1e-6);
  }
  return sum;
}

}  // namespace

OutageComponents total_outage(double threshold_linear, const NetworkConfig& cfg,
                              double norm_factor_sq, OutageMode mode) {
  OutageComponents out;
  const double void_m = std::exp(-cfg.tier1.mean_count());
  const double void_s = std::exp(-cfg.tier2.mean_count());
  out.no_bs = void_m * void_s;

  const InterferenceScope both_scope =
      mode == OutageMode::NoiseLimited ? InterferenceScope::None : InterferenceScope::Both;
  const InterferenceScope single_scope =
      mode == OutageMode::NoiseLimited ? InterferenceScope::None : InterferenceScope::SameTierOnly;

  if (cfg.tier1.enabled() && cfg.tier2.enabled()) {
    for (AlphaCase c : {AlphaCase::LL, AlphaCase::NL, AlphaCase::LN, AlphaCase::NN}) {
      const CaseRectangle rect = case_rectangle(c, cfg);
      if (rect.rm_hi <= rect.rm_lo || rect.rs_hi <= rect.rs_lo) continue;
      const double am = rect.macro_los ? cfg.tier1.alpha_los : cfg.tier1.alpha_nlos;
      const double ap = rect.pico_los ? cfg.tier2.alpha_los : cfg.tier2.alpha_nlos;

      OutageCache macro_outage(ServingTier::Macro, am, rect.macro_los, threshold_linear, cfg,
                               norm_factor_sq, both_scope);
      out.macro_served += integrate_over_region(
          c, ServingTier::Macro, cfg,
          [&](double rm, double /*rs*/) { return macro_outage(rm); });

      OutageCache pico_outage(ServingTier::Pico, ap, rect.pico_los, threshold_linear, cfg,
                              norm_factor_sq, both_scope);
      out.pico_served += integrate_over_region(
          c, ServingTier::Pico, cfg,
          [&](double /*rm*/, double rs) { return pico_outage(rs); });
    }
  }

  // Exactly-one-tier events: the other tier's disc is empty.
  out.macro_served +=
      void_s * single_tier_term(ServingTier::Macro, threshold_linear, cfg, norm_factor_sq,
                                single_scope);
  out.pico_served +=
      void_m * single_tier_term(ServingTier::Pico, threshold_linear, cfg, norm_factor_sq,
                                single_scope);
  return out;
}

OutageCurve outage_curve(const NetworkConfig& cfg, const std::vector<double>& thresholds_db,
                         double norm_factor_sq, OutageMode mode, Scenario scenario) {
  const NetworkConfig run_cfg = scenario == Scenario::OneTier ? one_tier_config(cfg) : cfg;
  OutageCurve curve;
  curve.thresholds_db = thresholds_db;
  curve.values.reserve(thresholds_db.size());
  curve.components.reserve(thresholds_db.size());
  for (double t_db : thresholds_db) {
    const OutageComponents c = total_outage(db_to_linear(t_db), run_cfg, norm_factor_sq, mode);
    curve.components.push_back(c);
    curve.values.push_back(c.total());
  }
  // Outage is non-decreasing in the threshold; a visible dip means a broken
  // integrand, not noise.
  for (std::size_t i = 1; i < curve.values.size(); ++i) {
    if (thresholds_db[i] > thresholds_db[i - 1] &&
        curve.values[i] < curve.values[i - 1] - 5e-3) {
      std::ostringstream os;
      os << "outage_curve: non-monotone outage " << curve.values[i - 1] << " -> "
         << curve.values[i] << " between " << thresholds_db[i - 1] << " and "
         << thresholds_db[i] << " dB";
      throw NumericsError(os.str());
    }
  }
  return curve;
}

double typical_group_norm_sq(const NetworkConfig& cfg, int group) {
  std::vector<GroupChannelModel> models;
  models.reserve(cfg.groups.size());
  for (const auto& g : cfg.groups) models.push_back(eigendecompose(one_ring_covariance(g), cfg.energy_fraction));
  const PrecoderSet set = build_precoder_set(cfg, models);
  return set.groups.at(static_cast<std::size_t>(group)).norm_factor_sq();
}

NetworkConfig one_tier_config(const NetworkConfig& cfg) {
  NetworkConfig out = cfg;
  out.tier2.density = 0.0;
  return out;
}

}  // namespace hetnet
