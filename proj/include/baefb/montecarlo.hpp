#pragma once

#include <cstdint>
#include <vector>

#include "baefb/bayes.hpp"
#include "baefb/dynamics.hpp"
#include "baefb/markov.hpp"

namespace baefb {

// Counter-based RNG: every normal deviate is keyed by
// (base_seed, trajectory, step, component), so ensembles are reproducible
// independent of scheduling.
namespace rng {
std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);
double uniform(std::uint64_t key);          // in (0, 1)
double normal_from_key(std::uint64_t key);  // inverse-CDF transform
double normal(std::uint64_t base_seed, std::uint64_t traj, std::uint64_t step,
              std::uint32_t component);
}  // namespace rng

struct EnsembleSpec {
  int n_traj = 1000;
  double dt_sde = 5e-3;
  double t_end = 1400.0;
  std::uint64_t base_seed = 1;
  double burn_in = 400.0;
  // Simulate the photocurrent explicitly and feed it back through M instead of
  // using the combined coefficient Z (cross-check path, Markovian laws only).
  bool raw_current = false;
};

// First-moment SDE of a feedback law, discretized on the period grid:
//   dr = A~(t) r dt + V(t) dw / sqrt(2).
// For the raw-current path the update uses A r dt + L dw/sqrt2 + F M I dt with
// I dt = -sqrt(2) B^T r dt + dw, which is algebraically identical.
struct SdeCoefficients {
  std::vector<Mat4> a_tilde;  // m+1 samples at spacing dt over one period
  std::vector<Mat4> v;        // noise coefficient at the same grid
  // raw-current decomposition (optional; empty when unused)
  std::vector<Mat4> a_open, l, fm;
  Mat4 b = Mat4::Zero();
  double period = 0.0;
  double dt = 0.0;
  int steps_per_period = 0;
};

enum class McLaw { kNoFeedback, kMarkov, kBayes };

// Build SDE tables for a law at a conditional steady state. For kMarkov the
// combined coefficient Z is used (current-noise feedback folded in).
SdeCoefficients sde_coefficients(const SystemParams& p, McLaw law, MarkovVariant mvariant,
                                 double lambda, const CostSpec& cost, BayesVariant bvariant,
                                 const EnsembleSpec& spec,
                                 const PeriodicSolveOptions& opts = {});

// Euler-Maruyama path of one trajectory, sampled every sample_stride steps
// after t = 0 (includes the initial point). Wiener increments have variance
// dt per component; the update applies V dw / sqrt(2).
std::vector<Vec4> simulate_trajectory(const SdeCoefficients& coeffs, const EnsembleSpec& spec,
                                      int traj_index, int sample_stride = 1,
                                      const Vec4& r0 = Vec4::Zero());

struct EnsembleEstimate {
  Mat4 sigma_hat = Mat4::Zero();   // E[{r,r^T}] - {E[r], E[r]^T} over the ensemble
  Mat4 stderr_mat = Mat4::Zero();  // batch-means standard errors
  Mat4 z_scores = Mat4::Zero();    // vs the reference passed to the estimator
  int n_batches = 0;
};

// Runs n_traj independent trajectories, accumulates the anticommutator-
// convention sample covariance of r over the statistics window
// [burn_in, t_end] (time average; for the periodic model this covers whole
// periods), and estimates standard errors by batch means over trajectories.
// Enforces dt_sde <= reference dt and t_end - burn_in >= 10/gamma.
EnsembleEstimate ensemble_excess_noise(const SystemParams& p, const SdeCoefficients& coeffs,
                                       const EnsembleSpec& spec,
                                       const Mat4* reference = nullptr, int n_threads = 0);

struct ValidationReport {
  bool pass = false;
  int worst_row = 0, worst_col = 0;
  double worst_z = 0.0;
};

// pass iff max |z| over entries with stderr > floor is <= z_max.
ValidationReport validate_against_reference(const EnsembleEstimate& estimate,
                                            const Mat4& reference, double z_max = 4.0,
                                            double stderr_floor = 1e-12);

}  // namespace baefb
