#include "hetnet/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hetnet {

namespace {

void sample_tier(const TierParams& tier, RngStream& rng, std::vector<Eigen::Vector2d>& pos,
                 std::vector<double>& dist, std::vector<bool>& los) {
  if (!tier.enabled()) return;
  const int n = rng.poisson(tier.mean_count());
  pos.reserve(n);
  dist.reserve(n);
  los.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double d = tier.disc_radius * std::sqrt(rng.uniform());
    const double phi = 2.0 * M_PI * rng.uniform();
    pos.emplace_back(d * std::cos(phi), d * std::sin(phi));
    dist.push_back(d);
    los.push_back(tier.los_at(d));
  }
}

int argmin(const std::vector<double>& v) {
  if (v.empty()) return -1;
  return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

NetworkRealization sample_realization(const NetworkConfig& cfg, RngStream& rng) {
  NetworkRealization r;
  sample_tier(cfg.tier1, rng, r.macro_positions, r.macro_distances, r.macro_los);
  sample_tier(cfg.tier2, rng, r.pico_positions, r.pico_distances, r.pico_los);
  return r;
}

double nearest_distance_pdf(const TierParams& tier, double d) {
  const double lp = tier.density * M_PI;
  return 2.0 * lp * d * std::exp(-lp * d * d);
}

AssociationOutcome associate(const NetworkRealization& realization, const NetworkConfig& cfg) {
  AssociationOutcome out;
  const int im = argmin(realization.macro_distances);
  const int is = argmin(realization.pico_distances);
  if (im < 0 && is < 0) return out;

  auto fill = [&](ServingKind kind, int idx) {
    out.kind = kind;
    out.serving_index = idx;
    if (kind == ServingKind::Macro) {
      out.serving_distance = realization.macro_distances[idx];
      out.serving_alpha = cfg.tier1.alpha_at(out.serving_distance);
      out.serving_los = cfg.tier1.los_at(out.serving_distance);
    } else {
      out.serving_distance = realization.pico_distances[idx];
      out.serving_alpha = cfg.tier2.alpha_at(out.serving_distance);
      out.serving_los = cfg.tier2.los_at(out.serving_distance);
    }
  };

  if (is < 0) {
    fill(ServingKind::Macro, im);
    return out;
  }
  if (im < 0) {
    fill(ServingKind::Pico, is);
    return out;
  }
  const double rm = realization.macro_distances[im];
  const double rs = realization.pico_distances[is];
  const double k2 = cfg.kappa_sq();
  const double macro_rx = cfg.macro_stream_power() * k2 * std::pow(rm, -cfg.tier1.alpha_at(rm));
  const double pico_rx = cfg.pico_power() * k2 * std::pow(rs, -cfg.tier2.alpha_at(rs));
  if (pico_rx >= macro_rx)
    fill(ServingKind::Pico, is);
  else
    fill(ServingKind::Macro, im);
  return out;
}

}  // namespace hetnet
