#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hetnet/channel.hpp"
#include "hetnet/config.hpp"
#include "hetnet/rng.hpp"

namespace hetnet {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Long-term (per-group) part of the two-stage precoder. Immutable after build.
struct GroupPrecoder {
  Eigen::MatrixXcd first_stage;     // B_g, M x B_g, orthonormal columns
  Eigen::MatrixXcd reduced_mixing;  // V = B^H U Lambda^{1/2}, B_g x r_g
  Eigen::VectorXd normalization;    // diag of C = diag(diag(V V^H))^{1/2}
  double norm_factor = 0.0;         // ||C^{-1} B^H||_F

  double norm_factor_sq() const { return norm_factor * norm_factor; }

  /// C^{-1} B^H h for a fresh small-scale draw, expressed in the reduced
  /// domain (entries are CN(0,1) by construction).
  Eigen::VectorXcd draw_reduced_channel(RngStream& rng) const {
    const Eigen::VectorXcd w = rng.complex_normal_vector(reduced_mixing.cols());
    return normalization.cwiseInverse().asDiagonal() * (reduced_mixing * w);
  }
};

struct PrecoderSet {
  std::vector<GroupPrecoder> groups;
};

/// First-stage design: project each group's dominant eigenvectors onto the
/// orthogonal complement of the other groups' dominant subspaces, then
/// orthonormalize. Guarantees ||U_{g'}^H B_g|| small for g' != g.
std::vector<Eigen::MatrixXcd> build_first_stage(const std::vector<GroupChannelModel>& models,
                                                const std::vector<int>& streams_per_group);

/// Effective channel and the normalization scalar ||C^{-1} B^H||_F.
std::pair<Eigen::VectorXcd, double> normalize_effective_channel(const Eigen::MatrixXcd& first_stage,
                                                                const Eigen::MatrixXcd& eigenvectors,
                                                                const Eigen::VectorXd& eigenvalues,
                                                                const Eigen::VectorXcd& channel);

/// Second stage: per-user unit-norm ZF columns in the null space of the other
/// users' effective channels.
std::vector<Eigen::VectorXcd> zf_second_stage(const std::vector<Eigen::VectorXcd>& effective_channels);

/// Build the full long-term precoder state for a configuration.
PrecoderSet build_precoder_set(const NetworkConfig& cfg, const std::vector<GroupChannelModel>& models);

}  // namespace hetnet
