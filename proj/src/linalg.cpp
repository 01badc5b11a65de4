#include "baefb/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace baefb {

double max_real_eigenvalue(const Mat4& a) {
  Eigen::EigenSolver<Mat4> es(a, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

Mat4 expm(const Mat4& a) { return a.exp(); }

double min_eigenvalue_sym(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace baefb
