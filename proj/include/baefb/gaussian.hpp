#pragma once

#include <Eigen/Dense>

#include "baefb/linalg.hpp"

namespace baefb {

// Symplectic form Omega for n modes: direct sum of [[0,1],[-1,0]] blocks.
// Satisfies Omega^2 = -I and Omega^T = -Omega exactly (integer entries).
struct SymplecticForm {
  int n_modes;
  Eigen::MatrixXd matrix;
};

SymplecticForm symplectic_form(int n_modes);

// Gaussian state in the convention where the vacuum covariance is the
// identity: cov = Tr[rho {r - rbar, (r - rbar)^T}], so <dQ^2> = cov(Q,Q)/2.
struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  int n_modes() const { return static_cast<int>(mean.size()) / 2; }

  static GaussianState vacuum(int n_modes);
  static GaussianState thermal(int n_modes, double nbar);
};

struct PhysicalityReport {
  double min_eigenvalue;  // of the real embedding of cov + i*Omega
  bool physical;
};

// Uncertainty-relation check: cov + i*Omega >= 0, evaluated as the minimum
// eigenvalue of the real block embedding [[cov, -Omega], [Omega, cov]].
// Throws NonSymmetricError when cov deviates from symmetry beyond sym_tol.
PhysicalityReport check_physicality(const GaussianState& state,
                                    double tol_psd = 1e-9,
                                    double sym_tol = 1e-9);
PhysicalityReport check_physicality_cov(const Eigen::MatrixXd& cov,
                                        double tol_psd = 1e-9,
                                        double sym_tol = 1e-9);

// Variance of the mechanical quadrature Q in the (X, Y, Q, P) ordering.
double variance_q(const GaussianState& state);
inline double variance_q(const Mat4& cov) { return cov(kQ, kQ) / 2.0; }

enum class DbConvention {
  kPaperAbsolute,     // -10 log10(v); vacuum registers ~3 dB
  kRelativeToVacuum,  // -10 log10(2 v); vacuum registers 0 dB
};

// Squeezing in decibel under the chosen reporting convention.
double squeezing_db(double variance,
                    DbConvention convention = DbConvention::kPaperAbsolute);

}  // namespace baefb
