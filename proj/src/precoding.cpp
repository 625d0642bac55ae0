#include "hetnet/precoding.hpp"

#include <sstream>

namespace hetnet {

std::vector<Eigen::MatrixXcd> build_first_stage(const std::vector<GroupChannelModel>& models,
                                                const std::vector<int>& streams_per_group) {
  const int num_groups = static_cast<int>(models.size());
  if (static_cast<int>(streams_per_group.size()) != num_groups)
    throw DimensionError("build_first_stage: streams_per_group size mismatch");
  const int m = static_cast<int>(models.front().eigenvectors.rows());

  std::vector<Eigen::MatrixXcd> result;
  result.reserve(num_groups);
  for (int g = 0; g < num_groups; ++g) {
    const int bg = streams_per_group[g];
    if (bg > models[g].effective_rank) {
      std::ostringstream os;
      os << "build_first_stage: group " << g << " needs " << bg
         << " beams but its covariance has effective rank " << models[g].effective_rank;
      throw DimensionError(os.str());
    }
    int other_rank = 0;
    for (int h = 0; h < num_groups; ++h)
      if (h != g) other_rank += models[h].effective_rank;
    if (other_rank + bg > m) {
      std::ostringstream os;
      os << "build_first_stage: group " << g << " has no room in the null space ("
         << other_rank << " interfering dimensions + " << bg << " beams > " << m << " antennas)";
      throw DimensionError(os.str());
    }

    Eigen::MatrixXcd candidate = models[g].eigenvectors.leftCols(bg);
    for (int h = 0; h < num_groups; ++h) {
      if (h == g) continue;
      const Eigen::MatrixXcd& u = models[h].eigenvectors;
      candidate -= u * (u.adjoint() * candidate);
    }
    // orthonormalize the projected columns
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(candidate);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m, bg);
    const Eigen::MatrixXcd r = qr.matrixQR().topRows(bg).triangularView<Eigen::Upper>();
    for (int i = 0; i < bg; ++i) {
      if (std::abs(r(i, i)) < 1e-8) {
        std::ostringstream os;
        os << "build_first_stage: group " << g
           << " loses rank after interference nulling (column " << i << ")";
        throw DimensionError(os.str());
      }
    }
    result.push_back(q);
  }
  return result;
}

std::pair<Eigen::VectorXcd, double> normalize_effective_channel(const Eigen::MatrixXcd& first_stage,
                                                                const Eigen::MatrixXcd& eigenvectors,
                                                                const Eigen::VectorXd& eigenvalues,
                                                                const Eigen::VectorXcd& channel) {
  const Eigen::MatrixXcd v =
      first_stage.adjoint() * eigenvectors * eigenvalues.cwiseSqrt().asDiagonal();
  const Eigen::VectorXd c_sq = (v * v.adjoint()).diagonal().real();
  for (Eigen::Index i = 0; i < c_sq.size(); ++i) {
    if (c_sq(i) <= 1e-14)
      throw NumericsError("normalize_effective_channel: degenerate beam (zero diagonal in VV^H)");
  }
  const Eigen::VectorXd c = c_sq.cwiseSqrt();
  const double norm_factor = (c.cwiseInverse().asDiagonal() * first_stage.adjoint()).norm();
  const Eigen::VectorXcd reduced = c.cwiseInverse().asDiagonal() * (first_stage.adjoint() * channel);
  return {reduced / norm_factor, norm_factor};
}

std::vector<Eigen::VectorXcd> zf_second_stage(const std::vector<Eigen::VectorXcd>& effective_channels) {
  const int k = static_cast<int>(effective_channels.size());
  const int bg = static_cast<int>(effective_channels.front().size());
  if (k > bg) throw DimensionError("zf_second_stage: more users than beams");

  std::vector<Eigen::VectorXcd> columns;
  columns.reserve(k);
  for (int user = 0; user < k; ++user) {
    if (k == 1) {
      columns.push_back(effective_channels[0].normalized());
      continue;
    }
    Eigen::MatrixXcd others(bg, k - 1);
    int col = 0;
    for (int j = 0; j < k; ++j)
      if (j != user) others.col(col++) = effective_channels[j];

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(others, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double tol = 1e-10 * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > tol) ++rank;
    if (rank < k - 1) {
      std::ostringstream os;
      os << "zf_second_stage: co-group channels are rank deficient for user " << user;
      throw NumericsError(os.str());
    }
    const Eigen::MatrixXcd null_basis = svd.matrixU().rightCols(bg - rank);
    Eigen::VectorXcd p = null_basis * (null_basis.adjoint() * effective_channels[user]);
    const double n = p.norm();
    if (n < 1e-14) {
      std::ostringstream os;
      os << "zf_second_stage: user " << user << " has no component in the interference null space";
      throw NumericsError(os.str());
    }
    columns.push_back(p / n);
  }
  return columns;
}

PrecoderSet build_precoder_set(const NetworkConfig& cfg, const std::vector<GroupChannelModel>& models) {
  PrecoderSet set;
  const auto first_stages = build_first_stage(models, cfg.streams_per_group);
  for (std::size_t g = 0; g < models.size(); ++g) {
    GroupPrecoder p;
    p.first_stage = first_stages[g];
    p.reduced_mixing =
        p.first_stage.adjoint() * models[g].eigenvectors * models[g].eigenvalues.cwiseSqrt().asDiagonal();
    const Eigen::VectorXd c_sq = (p.reduced_mixing * p.reduced_mixing.adjoint()).diagonal().real();
    for (Eigen::Index i = 0; i < c_sq.size(); ++i)
      if (c_sq(i) <= 1e-14)
        throw NumericsError("build_precoder_set: degenerate beam (zero diagonal in VV^H)");
    p.normalization = c_sq.cwiseSqrt();
    p.norm_factor = (p.normalization.cwiseInverse().asDiagonal() * p.first_stage.adjoint()).norm();
    set.groups.push_back(std::move(p));
  }
  return set;
}

}  // namespace hetnet
