#pragma once

#include <Eigen/Dense>

namespace baefb {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;

// Quadrature ordering shared by every module: (X, Y, Q, P).
enum Quadrature : int { kX = 0, kY = 1, kQ = 2, kP = 3 };

inline void symmetrize(Mat4& m) { m = 0.5 * (m + m.transpose()).eval(); }

inline double frobenius(const Mat4& m) { return m.norm(); }

// Largest real part over the eigenvalues of a real 4x4 matrix.
double max_real_eigenvalue(const Mat4& a);

inline bool is_hurwitz(const Mat4& a, double tol = 0.0) {
  return max_real_eigenvalue(a) < -tol;
}

// Matrix exponential of a real 4x4 (scaling-and-squaring Pade).
Mat4 expm(const Mat4& a);

// Minimum eigenvalue of a symmetric matrix.
double min_eigenvalue_sym(const Eigen::MatrixXd& m);

}  // namespace baefb
