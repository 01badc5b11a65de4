#pragma once

#include "baefb/dynamics.hpp"
#include "baefb/gaussian.hpp"
#include "baefb/model.hpp"

namespace baefb {

// Quadratic LQG cost h = E[<r^T S r>_c + u^T Xi u] with Xi = chi * I.
struct CostSpec {
  Mat4 s = (Eigen::Vector4d() << 0, 0, 1, 0).finished().asDiagonal();
  double chi = 0.1;

  Mat4 xi() const { return chi * Mat4::Identity(); }
  void validate() const;
};

enum class BayesVariant { kIdeal, kForceLimited };

// Feedback direction matrix: ideal = I_4, force-limited = 0_2 (+) W(t).
Mat4 bayes_direction(BayesVariant variant, double omega_m, double t);

// Pointwise optimal gain K(t) = Xi^-1 F(t)^T Y(t) on the grid of y.
// Throws SingularXiError when Xi is not invertible.
std::vector<Mat4> lqg_gain(const PeriodicTrajectory& y,
                           const std::function<Mat4(double)>& f, const Mat4& xi);

// Closed-form RWA gain for S = diag(0,0,1,0): beta = (sqrt(4/chi + gamma^2) - gamma)/2.
double bayes_gain_analytic_rwa(double gamma, double chi);

// Closed-form steady-state excess of the Q variance under ideal RWA Bayesian
// feedback, reported in variance units (<dQ^2> excess = Sigma_fb(Q,Q)/2):
//   (1/2) * sqrt(chi)/sqrt(4 + gamma^2 chi) * (gamma^2 + zeta - gamma sqrt(kappa^2+gamma^2+2 zeta))^2 / (16 g^2 eta kappa)
double excess_variance_q_analytic(const SystemParams& p, double chi);

// Closed-loop coefficients of the Bayesian law on the half-step grid:
//   A~_b(t) = A(t) - F(t) K(t),  L(t) = E - sigma_c(t) B (noise is feedback-free).
struct BayesClosedLoop {
  std::vector<Mat4> a_tilde;
  std::vector<Mat4> noise;  // L L^T
  std::vector<Mat4> l;      // L itself
  std::vector<Mat4> k;      // gain on the same grid
  double period = 0.0;
  int n_steps = 0;
};

BayesClosedLoop bayes_closed_loop(const SystemParams& p, const CostSpec& cost,
                                  BayesVariant variant, const PeriodicTrajectory& sigma_c,
                                  const PeriodicSolveOptions& opts = {});

// dS/dt = A~_b S + S A~_b^T + L L^T to (periodic) steady state.
PeriodicTrajectory excess_noise_bayes(const BayesClosedLoop& loop,
                                      const PeriodicSolveOptions& opts = {});

struct AverageFeedback {
  double dimensionless = 0.0;  // period average of Tr[F K Sigma_fb K^T F^T]
  double force_newton = 0.0;   // (hbar/x_zpf) sqrt(dimensionless) * omega_m_SI
};

// Paper's conversion factor hbar/x_zpf for x_zpf = 1e-14 m.
inline constexpr double kForceConversionNs = 1e-20;  // N*s

AverageFeedback average_feedback(const BayesClosedLoop& loop,
                                 const PeriodicTrajectory& sigma_fb,
                                 double omega_m_si = 2.0 * M_PI * 1e6);

struct BayesReport {
  double var_c = 0.0;
  TimeAverageStats var_fb;
  double db = 0.0;
  double excess_q = 0.0;  // period-averaged Sigma_fb(Q,Q)/2
  AverageFeedback avg_force;
  // Force-direction gains of the lab-frame Hamiltonian
  // H = -(beta_q(t) <Q>_c + beta_x(t) <X>_c) Q0, sampled on the grid.
  std::vector<double> beta_q, beta_x;
  bool converged = false;
  PeriodicTrajectory sigma_c;
  PeriodicTrajectory sigma_fb;
};

BayesReport bayes_report(const SystemParams& p, const CostSpec& cost, BayesVariant variant,
                         const PeriodicSolveOptions& opts = {},
                         DbConvention db_convention = DbConvention::kPaperAbsolute,
                         double omega_m_si = 2.0 * M_PI * 1e6);

BayesReport bayes_report_with_conditional(const SystemParams& p, const CostSpec& cost,
                                          BayesVariant variant,
                                          const PeriodicTrajectory& sigma_c,
                                          const PeriodicSolveOptions& opts = {},
                                          DbConvention db_convention = DbConvention::kPaperAbsolute,
                                          double omega_m_si = 2.0 * M_PI * 1e6);

}  // namespace baefb
