#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "baefb/errors.hpp"
#include "baefb/linalg.hpp"

namespace baefb {

// Time-dependent real 4x4 coefficient. Either constant or periodic-analytic.
class MatrixFn {
 public:
  static MatrixFn constant(const Mat4& m);
  static MatrixFn periodic(std::function<Mat4(double)> f, double period);

  bool is_constant() const { return constant_; }
  double period() const { return period_; }  // 0 when constant
  Mat4 operator()(double t) const { return constant_ ? value_ : fn_(t); }

 private:
  bool constant_ = true;
  Mat4 value_ = Mat4::Zero();
  std::function<Mat4(double)> fn_;
  double period_ = 0.0;
};

enum class FlowKind { kLyapunov, kConditionalRiccati };

// The matrix equations of motion of the monitored system:
//   lyapunov:              ds/dt = A s + s A^T + D
//   conditional_riccati:   ds/dt = A s + s A^T + D - (E - s B)(E - s B)^T
struct MatrixFlowProblem {
  MatrixFn A;
  Mat4 D = Mat4::Zero();
  Mat4 E = Mat4::Zero();
  Mat4 B = Mat4::Zero();
  FlowKind kind = FlowKind::kConditionalRiccati;
};

// A matrix-valued function over one period, sampled on a uniform grid.
// values.front() and values.back() refer to equivalent phases (t=0 and t=T).
struct PeriodicTrajectory {
  double period = 0.0;
  double dt = 0.0;  // grid spacing; divides the period exactly
  std::vector<Mat4> values;
  bool converged = false;
  double residual = 0.0;  // max-over-grid Frobenius distance between successive periods
  long periods_used = 0;

  int n_samples() const { return static_cast<int>(values.size()); }
  double time_at(int i) const { return dt * i; }
  // Periodic linear interpolation.
  Mat4 eval(double t) const;
};

struct TimeAverageStats {
  double mean = 0.0, min = 0.0, max = 0.0;
};

// Trapezoidal average and extrema of a scalar functional over the period grid.
// Throws NotConvergedError when the trajectory is not converged.
TimeAverageStats time_average(const PeriodicTrajectory& traj,
                              const std::function<double(const Mat4&)>& functional);

struct PeriodicSolveOptions {
  double tol_period = 1e-9;
  long max_periods = 1000000;
  bool aitken = true;           // geometric tail extrapolation of the period map
  double overflow_guard = 1e12;
};

// Dense trajectory of a short integration (oracle/test use).
struct FlowTrajectory {
  std::vector<double> times;
  std::vector<Mat4> values;
  const Mat4& back() const { return values.back(); }
};

// Fixed-step RK4 for ds/dt = A s + s A^T + D, symmetrized per step.
// Throws DivergenceError past the overflow guard.
FlowTrajectory integrate_lyapunov(const MatrixFlowProblem& problem, const Mat4& sigma0,
                                  double t_end, double dt, int store_every = 1);

// Fixed-step RK4 for the conditional Riccati flow, symmetrized per step.
// Physicality is spot-checked every physicality_stride steps (UnphysicalError).
FlowTrajectory integrate_conditional_riccati(const MatrixFlowProblem& problem,
                                             const Mat4& sigma0, double t_end, double dt,
                                             int store_every = 1,
                                             double unphysical_tol = 1e-6,
                                             int physicality_stride = 512);

// Steady state of A X + X A^T + N = 0 by integrating the Lyapunov flow with
// doubling of the time horizon (exact propagator squaring); requires A Hurwitz
// (NotHurwitzError otherwise). Residual is verified below 1e-10 * ||N||_F.
Mat4 steady_state_lyapunov(const Mat4& a, const Mat4& n);

// One-period propagator interface for periodic_steady_state: advances a state
// matrix across one period and can sample the trajectory it generates.
class PeriodicFlow {
 public:
  virtual ~PeriodicFlow() = default;
  virtual double period() const = 0;
  // Grid spacing of sample_period output.
  virtual double sample_dt() const = 0;
  virtual Mat4 advance_period(const Mat4& state) const = 0;
  virtual std::vector<Mat4> sample_period(const Mat4& state) const = 0;
};

// Iterates whole periods until the trajectory repeats within tol_period
// (Frobenius, max over grid samples), with stride-doubling Aitken acceleration
// of the tail. Throws NoConvergenceError after max_periods.
PeriodicTrajectory periodic_steady_state(const PeriodicFlow& flow, const Mat4& init,
                                         const PeriodicSolveOptions& opts = {});

// Conditional Riccati flow of a MatrixFlowProblem, stepping at dt = period/(2n)
// so the sampled trajectory lands on the half-step grid of downstream flows.
class ConditionalRiccatiFlow final : public PeriodicFlow {
 public:
  ConditionalRiccatiFlow(const MatrixFlowProblem& problem, double period, int n_steps,
                         double overflow_guard = 1e12);
  double period() const override { return period_; }
  double sample_dt() const override { return 0.5 * period_ / n_; }
  Mat4 advance_period(const Mat4& state) const override;
  std::vector<Mat4> sample_period(const Mat4& state) const override;

 private:
  double period_;
  int n_;  // downstream step count; this flow steps 2n times per period
  Mat4 D_, E_, B_;
  std::vector<Mat4> a_stage_;  // A at the 4n+1 stage times
  double guard_;
};

// Generic periodic Lyapunov flow dS/dt = A(t) S + S A(t)^T + N(t) with
// coefficients given on the half-step grid (2n+1 samples at spacing h/2).
class LyapunovFlow final : public PeriodicFlow {
 public:
  LyapunovFlow(std::vector<Mat4> a_half_grid, std::vector<Mat4> n_half_grid,
               double period, double overflow_guard = 1e12);
  double period() const override { return period_; }
  double sample_dt() const override { return period_ / n_; }
  Mat4 advance_period(const Mat4& state) const override;
  std::vector<Mat4> sample_period(const Mat4& state) const override;

  // Spectral radius of the one-period state-transition matrix of A(t).
  double monodromy_spectral_radius() const;

 private:
  double period_;
  int n_;
  std::vector<Mat4> a_, n_;  // 2n+1 each
  double guard_;
};

struct ControlRiccatiResult {
  PeriodicTrajectory y;  // stabilizing solution on the half-step grid
};

// Stabilizing solution of 0 = A^T Y + Y A + S - Y F Xi^-1 F^T Y by backward
// integration to (periodic) convergence. For constant A, F the closed loop
// A - F Xi^-1 F^T Y is verified Hurwitz (NonStabilizingError otherwise).
ControlRiccatiResult solve_control_riccati(const MatrixFn& a, const MatrixFn& f,
                                           const Mat4& s, const Mat4& xi, double period,
                                           int n_steps,
                                           const PeriodicSolveOptions& opts = {});

}  // namespace baefb
