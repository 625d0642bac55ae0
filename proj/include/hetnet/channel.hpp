#pragma once

#include <Eigen/Dense>

#include "hetnet/config.hpp"
#include "hetnet/rng.hpp"

namespace hetnet {

/// One-ring covariance of a user group together with its truncated eigenpair.
struct GroupChannelModel {
  Eigen::MatrixXcd covariance;    // M x M Hermitian, unit diagonal
  Eigen::MatrixXcd eigenvectors;  // M x r_g
  Eigen::VectorXd eigenvalues;    // r_g, descending
  int effective_rank = 0;
};

/// One-ring model: entry (m,p) = (1/2*Delta) * int exp(-j 2 pi D (m-p) sin t) dt over
/// [theta-Delta, theta+Delta]; Toeplitz, so only the first column is integrated.
Eigen::MatrixXcd one_ring_covariance(const GroupGeometry& geom);

/// Descending eigendecomposition truncated to the smallest rank capturing
/// `energy_fraction` of the trace. Negative round-off eigenvalues clamp to 0.
GroupChannelModel eigendecompose(const Eigen::MatrixXcd& covariance, double energy_fraction);

/// Karhunen-Loeve draw: h = U * Lambda^{1/2} * w, w ~ CN(0, I).
Eigen::VectorXcd draw_channel(const GroupChannelModel& model, RngStream& rng);

}  // namespace hetnet
