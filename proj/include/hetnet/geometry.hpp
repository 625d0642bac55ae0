#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hetnet/config.hpp"
#include "hetnet/rng.hpp"

namespace hetnet {

/// One PPP drop: BS positions per tier with the typical user at the origin.
struct NetworkRealization {
  std::vector<Eigen::Vector2d> macro_positions;
  std::vector<Eigen::Vector2d> pico_positions;
  std::vector<double> macro_distances;
  std::vector<double> pico_distances;
  std::vector<bool> macro_los;
  std::vector<bool> pico_los;
};

enum class ServingKind { NoBS, Macro, Pico };

struct AssociationOutcome {
  ServingKind kind = ServingKind::NoBS;
  int serving_index = -1;
  double serving_distance = 0.0;
  double serving_alpha = 0.0;
  bool serving_los = false;
};

/// Poisson counts on each disc; points uniform via d = radius*sqrt(u).
NetworkRealization sample_realization(const NetworkConfig& cfg, RngStream& rng);

/// pdf of the nearest distance in a PPP: 2*lambda*pi*d*exp(-lambda*pi*d^2).
double nearest_distance_pdf(const TierParams& tier, double d);

/// Max received power over the nearest BS of each tier; ties go to pico.
AssociationOutcome associate(const NetworkRealization& realization, const NetworkConfig& cfg);

}  // namespace hetnet
