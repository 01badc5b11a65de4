#include "baefb/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "baefb/errors.hpp"

namespace baefb {

SymplecticForm symplectic_form(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    m(2 * k, 2 * k + 1) = 1.0;
    m(2 * k + 1, 2 * k) = -1.0;
  }
  return SymplecticForm{n_modes, std::move(m)};
}

GaussianState GaussianState::vacuum(int n_modes) {
  return {Eigen::VectorXd::Zero(2 * n_modes), Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes)};
}

GaussianState GaussianState::thermal(int n_modes, double nbar) {
  GaussianState s = vacuum(n_modes);
  s.cov *= (2.0 * nbar + 1.0);
  return s;
}

PhysicalityReport check_physicality_cov(const Eigen::MatrixXd& cov, double tol_psd,
                                        double sym_tol) {
  const auto n = cov.rows();
  if (cov.cols() != n || n % 2 != 0)
    throw std::invalid_argument("check_physicality: covariance must be square 2n x 2n");
  const double asym = (cov - cov.transpose()).norm();
  if (asym > sym_tol)
    throw NonSymmetricError("check_physicality: covariance asymmetry " + std::to_string(asym));

  const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(n) / 2).matrix;
  Eigen::MatrixXd embed(2 * n, 2 * n);
  embed << cov, -omega, omega, cov;
  // the embedding is symmetric up to the (tolerated) asymmetry of cov
  embed = 0.5 * (embed + embed.transpose()).eval();
  const double min_eig = min_eigenvalue_sym(embed);
  return {min_eig, min_eig >= -tol_psd};
}

PhysicalityReport check_physicality(const GaussianState& state, double tol_psd,
                                    double sym_tol) {
  return check_physicality_cov(state.cov, tol_psd, sym_tol);
}

double variance_q(const GaussianState& state) {
  if (state.cov.rows() != 4)
    throw std::invalid_argument("variance_q: expects the 2-mode (X,Y,Q,P) layout");
  return state.cov(kQ, kQ) / 2.0;
}

double squeezing_db(double variance, DbConvention convention) {
  if (!(variance > 0.0))
    throw NonPositiveVarianceError("squeezing_db: variance must be positive");
  switch (convention) {
    case DbConvention::kPaperAbsolute:
      return -10.0 * std::log10(variance);
    case DbConvention::kRelativeToVacuum:
      return -10.0 * std::log10(2.0 * variance);
  }
  return 0.0;
}

}  // namespace baefb
