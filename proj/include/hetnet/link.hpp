#pragma once

#include "hetnet/config.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/precoding.hpp"

namespace hetnet {

enum class PrecodingMode { ZF, NoSecondStage };

struct LinkBudget {
  double useful_power = 0.0;        // watts
  double interference_macro = 0.0;  // I1 (macro-served) or I3 (pico-served)
  double interference_pico = 0.0;   // I2 or I4
  double noise_power = 0.0;

  double sinr() const {
    return useful_power / (noise_power + interference_macro + interference_pico);
  }
  double snr() const { return useful_power / noise_power; }
};

/// N0(dBm) = -174 + 10 log10(B) + NF, returned in watts.
double noise_power(double bandwidth_hz, double noise_figure_db);

/// Shared per-drop context: long-term precoders plus engine switches.
struct LinkContext {
  const NetworkConfig* cfg = nullptr;
  const PrecoderSet* precoders = nullptr;
  int typical_group = 0;
  PrecodingMode mode = PrecodingMode::ZF;
};

/// Eqs. (13), (15), (16). `channel_rng` drives the serving-link draws and
/// `interference_rng` the interferer gains, so precoding-mode and scenario
/// variants stay coupled drop by drop.
LinkBudget macro_served_sinr(const NetworkRealization& realization, const AssociationOutcome& assoc,
                             const LinkContext& ctx, RngStream& channel_rng,
                             RngStream& interference_rng);

/// Eqs. (14), (17), (18).
LinkBudget pico_served_sinr(const NetworkRealization& realization, const AssociationOutcome& assoc,
                            const LinkContext& ctx, RngStream& channel_rng,
                            RngStream& interference_rng);

}  // namespace hetnet
