#include <doctest.h>

#include <cmath>

#include "hetnet/precoding.hpp"

using namespace hetnet;

namespace {

std::vector<GroupChannelModel> table_models(const NetworkConfig& cfg) {
  std::vector<GroupChannelModel> models;
  for (const auto& g : cfg.groups)
    models.push_back(eigendecompose(one_ring_covariance(g), cfg.energy_fraction));
  return models;
}

}  // namespace

TEST_CASE("first-stage matrices are orthonormal and nearly null the other group") {
  const NetworkConfig cfg = default_config();
  const auto models = table_models(cfg);
  const auto stages = build_first_stage(models, cfg.streams_per_group);
  REQUIRE(stages.size() == 2);
  for (std::size_t g = 0; g < stages.size(); ++g) {
    const Eigen::MatrixXcd& b = stages[g];
    CHECK(b.rows() == cfg.num_antennas);
    CHECK(b.cols() == cfg.streams_per_group[g]);
    const Eigen::MatrixXcd gram = b.adjoint() * b;
    CHECK((gram - Eigen::MatrixXcd::Identity(b.cols(), b.cols())).norm() < 1e-10);
    // leakage into the other group's dominant subspace
    const Eigen::MatrixXcd& u_other = models[1 - g].eigenvectors;
    CHECK((u_other.adjoint() * b).norm() < 0.05);
  }
}

TEST_CASE("first-stage dimension failures name the offending group") {
  const NetworkConfig cfg = default_config();
  auto models = table_models(cfg);
  try {
    build_first_stage(models, {models[0].effective_rank + 1, 5});
    CHECK(false);
  } catch (const DimensionError& e) {
    CHECK(std::string(e.what()).find("group 0") != std::string::npos);
  }
}

TEST_CASE("normalization constants match the long-term frozen values") {
  const NetworkConfig cfg = default_config();
  const PrecoderSet set = build_precoder_set(cfg, table_models(cfg));
  REQUIRE(set.groups.size() == 2);
  // frozen from an independent eigendecomposition of the same geometry
  CHECK(set.groups[0].norm_factor_sq() == doctest::Approx(0.9877).epsilon(2e-3));
  CHECK(set.groups[1].norm_factor_sq() == doctest::Approx(1.2763).epsilon(2e-3));
  for (const auto& gp : set.groups) {
    CHECK(gp.normalization.minCoeff() > 0.0);
    // row i of C^{-1} V has unit norm by construction of C
    const Eigen::MatrixXcd rows = gp.normalization.cwiseInverse().asDiagonal() * gp.reduced_mixing;
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
      CHECK(rows.row(i).norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("reduced channel draws have unit per-entry variance") {
  const NetworkConfig cfg = default_config();
  const PrecoderSet set = build_precoder_set(cfg, table_models(cfg));
  RngStream rng(3);
  const int draws = 20000;
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(set.groups[0].first_stage.cols());
  for (int i = 0; i < draws; ++i)
    acc += set.groups[0].draw_reduced_channel(rng).cwiseAbs2();
  for (Eigen::Index i = 0; i < acc.size(); ++i)
    CHECK(acc(i) / draws == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("normalize_effective_channel agrees with the precoder-set constants") {
  const NetworkConfig cfg = default_config();
  const auto models = table_models(cfg);
  const PrecoderSet set = build_precoder_set(cfg, models);
  RngStream rng(5);
  const Eigen::VectorXcd h = draw_channel(models[0], rng);
  const auto [reduced, norm_factor] = normalize_effective_channel(
      set.groups[0].first_stage, models[0].eigenvectors, models[0].eigenvalues, h);
  CHECK(norm_factor == doctest::Approx(set.groups[0].norm_factor).epsilon(1e-12));
  CHECK(reduced.size() == set.groups[0].first_stage.cols());
}

TEST_CASE("zero-forcing beams null co-group users and have unit norm") {
  const NetworkConfig cfg = default_config();
  const PrecoderSet set = build_precoder_set(cfg, table_models(cfg));
  RngStream rng(9);
  const int users = cfg.users_per_group();
  std::vector<Eigen::VectorXcd> channels(users);
  for (int k = 0; k < users; ++k)
    channels[k] = set.groups[0].draw_reduced_channel(rng) / set.groups[0].norm_factor;
  const auto beams = zf_second_stage(channels);
  REQUIRE(static_cast<int>(beams.size()) == users);
  for (int k = 0; k < users; ++k) {
    CHECK(beams[k].norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = 0; j < users; ++j) {
      if (j == k) continue;
      CHECK(std::abs(channels[j].dot(beams[k])) < 1e-10);
    }
    // useful direction survives
    CHECK(std::abs(channels[k].dot(beams[k])) > 1e-6);
  }
}

TEST_CASE("zero-forcing rejects more users than beams") {
  std::vector<Eigen::VectorXcd> channels(3, Eigen::VectorXcd::Ones(2));
  CHECK_THROWS_AS(zf_second_stage(channels), DimensionError);
}
