#include "hetnet/regions.hpp"

#include <cmath>
#include <sstream>

#include "hetnet/geometry.hpp"
#include "hetnet/quadrature.hpp"

namespace hetnet {

namespace {

struct CaseParams {
  double R, r, RL, rL;
  double alpha_m, alpha_p;  // macro-link and pico-link exponents for this case
  double rho;               // (P_s/P_m)^{1/alpha_p}
  double rho_inv_exp;       // alpha_m / alpha_p  (r_s boundary = rho * r_m^{am/ap})
};

CaseParams case_params(AlphaCase c, const NetworkConfig& cfg) {
  CaseParams p{};
  p.R = cfg.tier1.disc_radius;
  p.r = cfg.tier2.disc_radius;
  p.RL = cfg.tier1.los_radius;
  p.rL = cfg.tier2.los_radius;
  const bool macro_los = (c == AlphaCase::LL || c == AlphaCase::LN);
  const bool pico_los = (c == AlphaCase::LL || c == AlphaCase::NL);
  p.alpha_m = macro_los ? cfg.tier1.alpha_los : cfg.tier1.alpha_nlos;
  p.alpha_p = pico_los ? cfg.tier2.alpha_los : cfg.tier2.alpha_nlos;
  const double power_ratio = cfg.pico_power() / cfg.macro_stream_power();
  p.rho = std::pow(power_ratio, 1.0 / p.alpha_p);
  p.rho_inv_exp = p.alpha_m / p.alpha_p;
  return p;
}

// Decision boundary: pico wins iff r_s <= rho * r_m^{alpha_m/alpha_p}.
double boundary(const CaseParams& p, double r_m) {
  return p.rho * std::pow(r_m, p.rho_inv_exp);
}
// Inverse boundary: r_m at which the boundary reaches r_s.
double boundary_inv(const CaseParams& p, double r_s) {
  return std::pow(r_s / p.rho, 1.0 / p.rho_inv_exp);
}

}  // namespace

CaseRectangle case_rectangle(AlphaCase c, const NetworkConfig& cfg) {
  const bool macro_los = (c == AlphaCase::LL || c == AlphaCase::LN);
  const bool pico_los = (c == AlphaCase::LL || c == AlphaCase::NL);
  CaseRectangle rect{};
  rect.macro_los = macro_los;
  rect.pico_los = pico_los;
  rect.rm_lo = macro_los ? 0.0 : cfg.tier1.los_radius;
  rect.rm_hi = macro_los ? cfg.tier1.los_radius : cfg.tier1.disc_radius;
  rect.rs_lo = pico_los ? 0.0 : cfg.tier2.los_radius;
  rect.rs_hi = pico_los ? cfg.tier2.los_radius : cfg.tier2.disc_radius;
  return rect;
}

int region_branch(AlphaCase c, ServingTier tier, const NetworkConfig& cfg) {
  const CaseParams p = case_params(c, cfg);
  const bool macro = tier == ServingTier::Macro;
  switch (c) {
    case AlphaCase::LL:
      return (boundary(p, p.RL) <= p.rL) ? 1 : 2;
    case AlphaCase::NL: {
      const double at_R = boundary(p, p.R);
      const double at_RL = boundary(p, p.RL);
      if (at_R <= p.rL) return 1;
      if (macro) return (at_RL <= p.rL) ? 2 : 3;  // 3 = empty
      return (at_RL >= p.rL) ? 2 : 3;             // pico: 2 = whole rectangle
    }
    case AlphaCase::LN: {
      const double at_RL = boundary(p, p.RL);
      if (at_RL <= p.rL) return 1;  // macro: whole rectangle, pico: empty
      return (at_RL <= p.r) ? 2 : 3;
    }
    case AlphaCase::NN: {
      const double at_RL = boundary(p, p.RL);
      const double at_R = boundary(p, p.R);
      if (at_RL >= p.r) return 1;  // macro: empty, pico: whole rectangle
      if (at_R <= p.rL) return 2;  // macro: whole rectangle, pico: empty
      if (at_RL >= p.rL) return (at_R <= p.r) ? 3 : 4;
      return (at_R <= p.r) ? 5 : 6;
    }
  }
  return 0;
}

bool region_membership(AlphaCase c, ServingTier tier, const NetworkConfig& cfg, double r_m,
                       double r_s) {
  if (r_m < 0.0 || r_m > cfg.tier1.disc_radius || r_s < 0.0 || r_s > cfg.tier2.disc_radius) {
    std::ostringstream os;
    os << "region_membership: point (" << r_m << "," << r_s << ") outside [0,"
       << cfg.tier1.disc_radius << "]x[0," << cfg.tier2.disc_radius << "]";
    throw std::invalid_argument(os.str());
  }
  const CaseRectangle rect = case_rectangle(c, cfg);
  if (r_m < rect.rm_lo || r_m > rect.rm_hi || r_s < rect.rs_lo || r_s > rect.rs_hi) return false;

  const CaseParams p = case_params(c, cfg);
  const bool macro = tier == ServingTier::Macro;
  const int branch = region_branch(c, tier, cfg);

  switch (c) {
    case AlphaCase::LL:
      if (macro) {
        if (branch == 1) return r_s >= boundary(p, r_m);
        return r_m <= boundary_inv(p, r_s);
      }
      if (branch == 1) return r_s <= boundary(p, r_m);
      return r_m >= boundary_inv(p, r_s);

    case AlphaCase::NL:
      if (macro) {
        if (branch == 1) return r_s >= boundary(p, r_m);
        if (branch == 2) return r_m <= boundary_inv(p, p.rL) && r_s >= boundary(p, r_m);
        return false;
      }
      if (branch == 1) return r_s <= boundary(p, r_m);
      if (branch == 2) return true;
      return r_m >= boundary_inv(p, p.rL) || r_s <= boundary(p, r_m);

    case AlphaCase::LN:
      if (macro) {
        if (branch == 1) return true;
        if (branch == 2) return r_m <= boundary_inv(p, p.rL) || r_s >= boundary(p, r_m);
        return r_m <= boundary_inv(p, r_s);
      }
      if (branch == 1) return false;
      if (branch == 2) return r_m >= boundary_inv(p, p.rL) && r_s <= boundary(p, r_m);
      return r_m >= boundary_inv(p, r_s);

    case AlphaCase::NN: {
      const double line = boundary(p, r_m);
      if (macro) {
        if (branch == 1) return false;
        if (branch == 2) return true;
        if (branch == 3) return r_s >= line;
        if (branch == 4) return r_m <= boundary_inv(p, p.r) && r_s >= line;
        if (branch == 5) return r_m <= boundary_inv(p, p.rL) || r_s >= line;
        return r_m <= boundary_inv(p, r_s);
      }
      if (branch == 1) return true;
      if (branch == 2) return false;
      if (branch == 3) return r_s <= line;
      if (branch == 4) return r_m >= boundary_inv(p, p.r) || r_s <= line;
      if (branch == 5) return r_m >= boundary_inv(p, p.rL) && r_s <= line;
      return r_m >= boundary_inv(p, r_s);
    }
  }
  return false;
}

bool oracle_membership(AlphaCase c, ServingTier tier, const NetworkConfig& cfg, double r_m,
                       double r_s) {
  if (r_m < 0.0 || r_m > cfg.tier1.disc_radius || r_s < 0.0 || r_s > cfg.tier2.disc_radius)
    return false;
  const CaseRectangle rect = case_rectangle(c, cfg);
  if (r_m < rect.rm_lo || r_m > rect.rm_hi || r_s < rect.rs_lo || r_s > rect.rs_hi) return false;
  const CaseParams p = case_params(c, cfg);
  const double k2 = cfg.kappa_sq();
  const double pico_rx = cfg.pico_power() * k2 * std::pow(r_s, -p.alpha_p);
  const double macro_rx = cfg.macro_stream_power() * k2 * std::pow(r_m, -p.alpha_m);
  const bool pico_wins = pico_rx >= macro_rx;  // ties go to pico
  return (tier == ServingTier::Pico) ? pico_wins : !pico_wins;
}

double integrate_over_region(AlphaCase c, ServingTier tier, const NetworkConfig& cfg,
                             const std::function<double(double, double)>& integrand,
                             double rel_tol) {
  const CaseRectangle rect = case_rectangle(c, cfg);
  if (!cfg.tier1.enabled() || !cfg.tier2.enabled()) return 0.0;
  auto mask = [&](double rm, double rs) { return region_membership(c, tier, cfg, rm, rs); };
  auto f = [&](double rm, double rs) {
    return integrand(rm, rs) * nearest_distance_pdf(cfg.tier1, rm) *
           nearest_distance_pdf(cfg.tier2, rs);
  };
  return masked_simpson2d(f, mask, rect.rm_lo, rect.rm_hi, rect.rs_lo, rect.rs_hi, rel_tol).value;
}

}  // namespace hetnet
