#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geobeam/analytic.hpp"
#include "geobeam/array.hpp"
#include "geobeam/geometry.hpp"
#include "geobeam/selection.hpp"

namespace geobeam {

enum class Conditioning {
  kResampleOnInsufficient,  // redraw until >= N users are inside R
  kCountAsFailure,          // failed draws contribute zero rate / false event
};

enum class SamplerKind {
  kFullPpp,         // instantiate the point field in the disk of radius R
  kOrderStatistic,  // draw r_N directly from its Gamma law (nearest-N only)
};

struct McConfig {
  std::uint64_t n_samples = 10'000;
  std::uint64_t seed = 1;
  int workers = 1;
  Conditioning conditioning = Conditioning::kResampleOnInsufficient;
  SamplerKind sampler = SamplerKind::kOrderStatistic;

  void validate() const;
};

struct RateEstimate {
  double mean = 0.0;       // nats
  double std_error = 0.0;  // of the mean
  std::uint64_t n_effective = 0;
  double conditioning_rate = 0.0;  // fraction of resampled / failed draws
};

// An analytic bound paired with its Monte Carlo counterpart. For lower
// bounds, satisfied means analytic <= empirical + 3 sigma.
struct BoundReport {
  double analytic = 0.0;
  double empirical = 0.0;
  double mc_std_error = 0.0;
  bool satisfied = false;
};

struct SweepRow {
  double t = 0.0;
  double q = 0.0;
  double ratio = 0.0;
  double std_error = 0.0;
  double predicted = 0.0;  // q - t - 1
  SelectionPolicy policy = SelectionPolicy::kNearestN;
};

// User density for the scaling experiments: lambda * pi * H^2 = (pi^2/4) M^q.
// The (pi/2)^2 factor absorbs the Fejer argument constant (pi M/2) sin(theta),
// which makes the finite-M rate land on the asymptotic q-t-1 line instead of
// a log(16/pi^4)/log(M^2) offset below it.
double derive_intensity(double m, double q, double altitude_m);

// N = round(M^t), at least 1.
int derive_group_size(double m, double t);

// Pass as SelectionConfig.radius_m to have the estimators derive R from
// max_radius(M, p, epsilon).
inline constexpr double kAutoRadius = 0.0;

// Ergodic multicast rate E[log(1 + P M^2 f(r_N, phi_N))]. Deterministic for a
// fixed (seed, n_samples) independent of `workers`.
RateEstimate estimate_rate(const SystemConfig& sys, const ScalingParams& params,
                           const SelectionConfig& sel, const McConfig& mc);

// Empirical P[Z > M^(2p)] against the closed-form interval lower bound
// (evaluated at phi = pi/4, the general-branch reference azimuth).
BoundReport estimate_event_probability(const SystemConfig& sys,
                                       const ScalingParams& params,
                                       const SelectionConfig& sel,
                                       const McConfig& mc);

// Empirical P[M^(2-2l) f_j(r_N, phi_N) < M^(-2s)] against the
// incomplete-gamma lower bound.
BoundReport estimate_interference_probability(const SystemConfig& sys,
                                              const ScalingParams& params,
                                              const BeamConfig& beam_j,
                                              const SelectionConfig& sel,
                                              const McConfig& mc);

// One row per (t, q): ratio of the estimated rate to the ideal log(1+P M^2).
std::vector<SweepRow> sweep_fraction_vs_q(const SystemConfig& sys,
                                          std::span<const double> t_values,
                                          std::span<const double> q_values,
                                          SelectionPolicy policy,
                                          const McConfig& mc);

}  // namespace geobeam
