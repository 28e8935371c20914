#pragma once

#include <string>
#include <vector>

namespace geobeam {

// Exponents parameterizing the asymptotic statements: user density
// lambda ~ M^q, multicast group N ~ M^t, gain target M^(2p), slack epsilon,
// interference threshold M^(-2s), beam-grid spacing 2/M^l.
struct ScalingParams {
  double q = 1.8;
  double t = 0.3;
  double p = 0.5;
  double epsilon = 0.1;
  double s = 0.3;
  double ell = 0.5;
};

// Out-of-range parameters are legal to explore; these return human-readable
// warnings instead of failing.
std::vector<std::string> validate_rate_scaling_range(const ScalingParams& sp);
std::vector<std::string> validate_interference_range(const ScalingParams& sp);

enum class PhiBranch { kGeneralPhi, kPhiZero };

// Radius interval from the sufficient-condition analysis; the general branch
// carries alpha = (pi/4)*sqrt(|sin(phi)cos(phi)|).
struct SufficientInterval {
  double r_lo = 0.0;
  double r_hi = 0.0;
  double alpha = 0.0;  // meaningful for kGeneralPhi only
  PhiBranch branch = PhiBranch::kGeneralPhi;

  bool degenerate() const { return !(r_lo < r_hi); }
};

// Standardized integration limits of the Gaussian approximation to the
// Gamma(N,1) law over an x = lambda*pi*r^2 interval.
struct GaussianApproxBounds {
  double upper = 0.0;  // U_N
  double lower = 0.0;  // L_N
};

struct RateBounds {
  double lower = 0.0;  // nats
  double upper = 0.0;
};

// Largest selection radius keeping the guaranteed gain target:
// H / sqrt(pi^2/4 * M^(2p+eps) - 1). Throws DomainError when the denominator
// is nonpositive (tiny M).
double max_radius(double m, double p, double epsilon, double altitude_m);

// Radius interval whose closed-form conditions target Z > M^(2p). Selects the
// phi = 0 branch when |sin(phi)cos(phi)| < 1e-9.
SufficientInterval sufficient_interval(double m, double p, double epsilon,
                                       double phi, double altitude_m);

// P(N, x) = gamma(N, x)/Gamma(N), integer N >= 1: series for x < N+1,
// Lentz continued fraction otherwise.
double regularized_incomplete_gamma(int n, double x);

// The same value via the confluent-hypergeometric form
// x^N/N! * 1F1(N, N+1; -x), evaluated as a direct Kummer series (through the
// e^-x * 1F1(1, N+1; x) transformation, which has all-positive terms).
double kummer_1f1_bound_form(int n, double x);

// P[r_lo < r_N < r_hi] over the sufficient interval: the closed-form lower
// bound on P[Z > M^(2p)] for nearest-N selection. Degenerate interval -> 0.
double theorem1_probability_lower_bound(double m, double intensity, int n,
                                        double p, double epsilon, double phi,
                                        double altitude_m);

GaussianApproxBounds gaussian_approx_bounds(double m, double intensity, int n,
                                            double p, double epsilon, double phi,
                                            double altitude_m);

// Phi(U_N) - Phi(L_N), the central-limit stand-in for the gamma integral.
double gaussian_approx_probability(double m, double intensity, int n, double p,
                                   double epsilon, double phi, double altitude_m);

// Asymptotic fraction of the ideal unicast rate: q - t - 1 (t = 0 gives the
// unicast q - 1).
double scaling_fraction(double q, double t);

// Proof-form finite-M bounds on the ergodic rate:
// 2(q-t-1 -+ eps) log(M) + log(P), in nats.
RateBounds rate_bounds(double q, double t, double epsilon, double m, double tx_snr);

// Closed-form lower bound on P[M^(2-2l) f_j < M^(-2s)]:
// P(N, lambda*pi*H^2 / (M^(2l) - 1)). Agrees with kummer_1f1_bound_form.
double theorem3_interference_bound(int n, double intensity, double altitude_m,
                                   double m, double ell);

double std_normal_cdf(double z);

}  // namespace geobeam
