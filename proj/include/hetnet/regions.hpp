#pragma once

#include <functional>

#include "hetnet/config.hpp"

namespace hetnet {

/// LOS pairing of the two links, macro link first: LL means both links LOS,
/// NL means macro NLOS / pico LOS, and so on. Cases index the four closed-form
/// feasible-region families (i = 1..4).
enum class AlphaCase { LL = 1, NL = 2, LN = 3, NN = 4 };

enum class ServingTier { Macro, Pico };

struct CaseRectangle {
  double rm_lo, rm_hi;  // macro nearest-distance bounds
  double rs_lo, rs_hi;  // pico nearest-distance bounds
  bool macro_los;
  bool pico_los;
};

CaseRectangle case_rectangle(AlphaCase c, const NetworkConfig& cfg);

/// Closed-form membership transcribed from the piecewise region definitions.
/// Inequalities are treated as closed sets; the two tiers overlap only on the
/// decision boundary (measure zero).
bool region_membership(AlphaCase c, ServingTier tier, const NetworkConfig& cfg, double r_m,
                       double r_s);

/// Which piecewise branch the configuration selects, for inspection/logging.
int region_branch(AlphaCase c, ServingTier tier, const NetworkConfig& cfg);

/// Independent validation path: rectangle bounds plus the raw received-power
/// inequality, ties resolved to pico.
bool oracle_membership(AlphaCase c, ServingTier tier, const NetworkConfig& cfg, double r_m,
                       double r_s);

/// Integral of integrand(r_m, r_s) * f_m(r_m) * f_s(r_s) over the region,
/// masked tensor-grid Simpson with Richardson refinement.
double integrate_over_region(AlphaCase c, ServingTier tier, const NetworkConfig& cfg,
                             const std::function<double(double, double)>& integrand,
                             double rel_tol = 1e-4);

}  // namespace hetnet
