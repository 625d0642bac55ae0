#include "hetnet/channel.hpp"

#include <cmath>
#include <complex>

#include "hetnet/quadrature.hpp"

namespace hetnet {

Eigen::MatrixXcd one_ring_covariance(const GroupGeometry& geom) {
  const int m = geom.num_antennas;
  const double lo = geom.aoa - geom.angular_spread;
  const double hi = geom.aoa + geom.angular_spread;
  const double norm = 1.0 / (2.0 * geom.angular_spread);

  Eigen::VectorXcd first_col(m);
  for (int d = 0; d < m; ++d) {
    const double freq = 2.0 * M_PI * geom.antenna_spacing * d;
    const double re = gauss_legendre64([&](double t) { return std::cos(freq * std::sin(t)); }, lo, hi);
    const double im = gauss_legendre64([&](double t) { return -std::sin(freq * std::sin(t)); }, lo, hi);
    first_col(d) = norm * std::complex<double>(re, im);
  }
  Eigen::MatrixXcd cov(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      cov(i, j) = (i >= j) ? first_col(i - j) : std::conj(first_col(j - i));
  return cov;
}

GroupChannelModel eigendecompose(const Eigen::MatrixXcd& covariance, double energy_fraction) {
  const double herm_err = (covariance - covariance.adjoint()).norm();
  if (herm_err > 1e-8 * std::max(1.0, covariance.norm()))
    throw NumericsError("eigendecompose: input matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(covariance);
  if (solver.info() != Eigen::Success)
    throw NumericsError("eigendecompose: eigenvalue decomposition failed");

  const int m = static_cast<int>(covariance.rows());
  Eigen::VectorXd vals = solver.eigenvalues().reverse();
  Eigen::MatrixXcd vecs = solver.eigenvectors().rowwise().reverse();
  vals = vals.cwiseMax(0.0);

  const double total = vals.sum();
  int rank = m;
  double cum = 0.0;
  for (int i = 0; i < m; ++i) {
    cum += vals(i);
    if (cum >= energy_fraction * total) {
      rank = i + 1;
      break;
    }
  }

  GroupChannelModel model;
  model.covariance = covariance;
  model.eigenvalues = vals.head(rank);
  model.eigenvectors = vecs.leftCols(rank);
  model.effective_rank = rank;
  return model;
}

Eigen::VectorXcd draw_channel(const GroupChannelModel& model, RngStream& rng) {
  const Eigen::VectorXcd w = rng.complex_normal_vector(model.effective_rank);
  return model.eigenvectors * model.eigenvalues.cwiseSqrt().asDiagonal() * w;
}

}  // namespace hetnet
