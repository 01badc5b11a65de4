#pragma once

#include <optional>

#include "baefb/dynamics.hpp"
#include "baefb/gaussian.hpp"
#include "baefb/model.hpp"

namespace baefb {

enum class MarkovVariant { kIdeal, kCavityLimited, kMechanicalLimited, kForceLimited };

// Lab-frame force direction in the rotating mechanical quadratures:
// W(t) = R F_force R^T = [[sin^2 wt, sin wt cos wt], [sin wt cos wt, cos^2 wt]].
// W is a rank-1 projector: W^2 = W, tr W = 1.
Mat2 force_direction(double omega_m, double t);

// Feedback direction matrix of a Markovian variant. force-limited carries the
// interpolation factor 2*lambda in front of 0_2 (+) W(t).
Mat4 markov_direction(MarkovVariant variant, double lambda, double omega_m, double t);

// M_opt = -F^{-1} (E - sigma_c_ss B) / sqrt(2): cancels the stochastic term of
// the conditional mean at steady state. Throws SingularFError when F is not
// invertible; limited variants compose the ideal gain with their F instead.
Mat4 optimal_markov_gain(const Mat4& f, const Mat4& e, const Mat4& b,
                         const Mat4& sigma_c_ss);

struct XiCoefficients {
  double xi_m;  // weight of P in the ideal feedback Hamiltonian
  double xi_f;  // weight of X
};

// Closed-form feedback weights of the RWA ideal Hamiltonian (xi_m P + xi_f X) I_Y.
XiCoefficients xi_coefficients(const SystemParams& p);

// Extract the same weights from a gain matrix: the Hamiltonian is
// -r^T Omega F M I(t), so xi_m = -(Omega F M)(P,Y) and xi_f = -(Omega F M)(X,Y).
XiCoefficients xi_from_gain(const Mat4& m, const Mat4& f = Mat4::Identity());

// Feedback-modified drift and noise coefficient on the half-step grid:
//   A~(t) = A(t) - sqrt(2) F(t) M(t) B^T,   Z(t) = (E - sigma_c(t) B) + sqrt(2) F(t) M(t),
// with M(t) the ideal gain frozen at the (periodic) conditional steady state.
struct MarkovClosedLoop {
  std::vector<Mat4> a_tilde;  // 2n+1 samples
  std::vector<Mat4> noise;    // Z Z^T, same grid
  std::vector<Mat4> z;        // Z itself (for trajectory simulation)
  double period = 0.0;
  int n_steps = 0;
};

MarkovClosedLoop markov_closed_loop(const SystemParams& p, MarkovVariant variant,
                                    double lambda, const PeriodicTrajectory& sigma_c);

// Steady/periodic-steady excess noise under the modified drift:
//   dS/dt = A~ S + S A~^T + Z Z^T.
// Throws NotHurwitzError when the loop is unstable (eigenvalues or monodromy).
PeriodicTrajectory excess_noise_markov(const MarkovClosedLoop& loop,
                                       const PeriodicSolveOptions& opts = {});

struct MarkovReport {
  double var_c = 0.0;             // period-averaged conditional <dQ^2>
  TimeAverageStats var_fb;        // unconditional <dQ^2> under feedback
  double db = 0.0;                // squeezing of var_fb.mean (chosen convention)
  double threshold = 0.0;         // good-cavity bound gamma(2nbar+1)/(gamma+kappa)
  double adiabatic = 0.0;         // bad-cavity closed form
  double excess_q = 0.0;          // period-averaged Sigma_fb(Q,Q)/2
  bool converged = false;
  PeriodicTrajectory sigma_c;
  PeriodicTrajectory sigma_fb;
};

// Full pipeline: conditional steady state -> gain -> excess noise -> variances.
// lambda is required iff variant == kForceLimited.
MarkovReport markov_report(const SystemParams& p, MarkovVariant variant,
                           std::optional<double> lambda = std::nullopt,
                           const PeriodicSolveOptions& opts = {},
                           DbConvention db_convention = DbConvention::kPaperAbsolute);

// Same pipeline reusing a precomputed conditional steady state (lambda scans).
MarkovReport markov_report_with_conditional(const SystemParams& p, MarkovVariant variant,
                                            std::optional<double> lambda,
                                            const PeriodicTrajectory& sigma_c,
                                            const PeriodicSolveOptions& opts = {},
                                            DbConvention db_convention = DbConvention::kPaperAbsolute);

struct LambdaScanPoint {
  double lambda;
  double var_fb_mean;
};

struct LambdaScanResult {
  std::vector<LambdaScanPoint> points;
  double lambda_star = 0.0;
  double var_star = 0.0;
};

// Scan the force-feedback interpolation parameter over [lo, hi] with the given
// step, then refine once around the best point with a third of the step.
LambdaScanResult scan_lambda(const SystemParams& p, double lo = 0.0, double hi = 1.5,
                             double step = 0.05, const PeriodicSolveOptions& opts = {});

}  // namespace baefb
