#pragma once

#include "baefb/dynamics.hpp"
#include "baefb/errors.hpp"
#include "baefb/linalg.hpp"

namespace baefb {

// Physical parameters of the two-tone BAE optomechanical model. All rates are
// in units of omega_m.
struct SystemParams {
  double omega_m = 1.0;
  double g = 0.05;      // linearized coupling
  double kappa = 1.0;   // cavity decay
  double gamma = 1e-4;  // mechanical decay
  double nbar = 10.0;   // thermal phonons
  double eta = 1.0;     // detection efficiency in (0, 1]
  bool rwa = true;

  double cooperativity() const { return 4.0 * g * g / (kappa * gamma); }
  double q_factor() const { return omega_m / gamma; }

  // Throws ValidationError listing every violated constraint.
  void validate() const;
};

struct DerivedScales {
  double zeta;
  double cooperativity;
  double q_factor;
};

// zeta = sqrt(gamma kappa [16 g^2 eta (1 + 2 nbar) + gamma kappa])
double zeta(const SystemParams& p);
DerivedScales derived_scales(const SystemParams& p);

// Drift/diffusion/measurement matrices of the monitored system (homodyne on
// the cavity Y quadrature). RWA: constant A; full model: A(t) with period
// pi/omega_m and entries g(1+cos 2 w t), +-g sin 2 w t.
MatrixFlowProblem build_matrices(const SystemParams& p);

// Period of the time-dependent model, pi/omega_m.
inline double model_period(const SystemParams& p) { return M_PI / p.omega_m; }

// Stationary conditional variance <dQ^2>_c of the RWA model (closed form).
// Throws ZeroCouplingError at g = 0 (thermal limit (2 nbar + 1)/2 applies).
double conditional_variance_analytic(const SystemParams& p);

// Adiabatic (bad-cavity) variance in terms of the cooperativity:
// (sqrt(1 + 4 eta C (2 nbar + 1)) - 1) / (4 C eta), evaluated in the
// cancellation-free form (2 nbar + 1) / (1 + sqrt(1 + 4 eta C (2 nbar + 1))).
double adiabatic_variance(const SystemParams& p);

struct SqueezingThreshold {
  double threshold;             // gamma (2 nbar + 1) / (gamma + kappa)
  double excluded_kappa_bound;  // 2 nbar / Q_m, in units of omega_m
};
SqueezingThreshold squeezing_threshold(const SystemParams& p);

// Step-count selection for the periodic solvers: the step is bounded by RK4
// stability against the fastest rate present (cavity, thermal, measurement,
// Riccati quadratic scale, feedback gain) and, for the time-dependent model,
// by resolving the 2 omega_m oscillation.
int choose_steps(const SystemParams& p, double period, double gain_scale = 0.0,
                 double dt_cap = 0.0);

// Thermal + algebraic warm start for the conditional Riccati flow: measured
// (Y,Q) sector thermal, unmeasured (X,P) sector at its Lyapunov steady state.
Mat4 riccati_warm_start(const SystemParams& p);

// Stationary conditional covariance. RWA: constant-coefficient fixed point;
// full model: time-periodic steady state on the half-step grid.
PeriodicTrajectory conditional_steady_state(const SystemParams& p,
                                            const PeriodicSolveOptions& opts = {});

}  // namespace baefb
