#include "geobeam/analytic.hpp"

#include <cmath>
#include <string>

#include "geobeam/errors.hpp"

namespace geobeam {

namespace {

constexpr int kMaxIterations = 10'000'000;
constexpr double kRelEps = 1e-16;
constexpr double kTiny = 1e-300;

// log of the dominant factor x^a e^-x / Gamma(a). For large a the naive
// a*log(x) - x - lgamma(a) cancels ~a-sized terms; the Stirling form keeps
// everything O(1) per term (cf. GSL's gamma_inc_D split).
double log_prefactor(double a, double x) {
  if (a < 32.0) return a * std::log(x) - x - std::lgamma(a);
  const double delta = (x - a) / a;
  // a*(log(1+delta) - delta) + (a-x) + a*log... rearranged: a*log(x/a)+a-x
  const double lead = a * (std::log1p(delta) - delta);
  const double a2 = a * a;
  const double stirling_tail =
      1.0 / (12.0 * a) - 1.0 / (360.0 * a2 * a) + 1.0 / (1260.0 * a2 * a2 * a);
  return lead + 0.5 * std::log(a / (2.0 * M_PI)) - stirling_tail;
}

// Lower-gamma series: P(a,x) = prefactor * sum_k x^k / (a(a+1)...(a+k)).
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kRelEps)
      return sum * a * std::exp(log_prefactor(a, x));
  }
  throw NumericError("regularized_incomplete_gamma: series did not converge");
}

// Upper-gamma continued fraction (modified Lentz).
double gamma_q_contfrac(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kRelEps) return std::exp(log_prefactor(a, x)) * h;
  }
  throw NumericError("regularized_incomplete_gamma: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_gamma(int n, double x) {
  if (n < 1) throw DomainError("regularized_incomplete_gamma: N must be >= 1");
  if (x < 0.0) throw DomainError("regularized_incomplete_gamma: x must be >= 0");
  if (x == 0.0) return 0.0;
  const double a = static_cast<double>(n);
  if (x < a + 1.0) return gamma_p_series(a, x);
  const double q = gamma_q_contfrac(a, x);
  return q < 1.0 ? 1.0 - q : 0.0;
}

double kummer_1f1_bound_form(int n, double x) {
  if (n < 1) throw DomainError("kummer_1f1_bound_form: N must be >= 1");
  if (x < 0.0) throw DomainError("kummer_1f1_bound_form: x must be >= 0");
  if (x == 0.0) return 0.0;
  const double a = static_cast<double>(n);
  // 1F1(N, N+1; -x) = e^-x 1F1(1, N+1; x); the transformed series has
  // positive terms term_k = x^k / ((N+1)...(N+k)), so no cancellation.
  // The partial sum can exceed the double range for large x; rescale and
  // carry the excess in log space.
  double term = 1.0;
  double sum = 1.0;
  double log_scale = 0.0;
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= x / (a + static_cast<double>(k));
    sum += term;
    if (term < sum * 1e-15) {
      const double lg = a * std::log(x) - x - std::lgamma(a + 1.0);
      const double v = std::exp(lg + log_scale + std::log(sum));
      return v > 1.0 ? 1.0 : v;
    }
    if (sum > 1e280) {
      sum *= 1e-280;
      term *= 1e-280;
      log_scale += 280.0 * M_LN10;
    }
  }
  throw NumericError("kummer_1f1_bound_form: series did not converge");
}

std::vector<std::string> validate_rate_scaling_range(const ScalingParams& sp) {
  std::vector<std::string> warnings;
  if (!(sp.t > 0.0 && sp.t < 1.0) && sp.t != 0.0)
    warnings.push_back("t outside [0,1): multicast exponent beyond the analyzed range");
  if (!(sp.p > 0.0 && sp.p < 1.0))
    warnings.push_back("p outside (0,1): gain exponent beyond the analyzed range");
  if (!(sp.epsilon > 0.0))
    warnings.push_back("epsilon must be positive for the rate bounds to separate");
  const double lo = sp.p + sp.t + 1.0 + sp.epsilon / 2.0;
  const double hi = 2.0 + sp.t + sp.epsilon / 2.0;
  if (!(sp.q > lo && sp.q < hi))
    warnings.push_back("q=" + std::to_string(sp.q) + " outside the admissible (" +
                       std::to_string(lo) + ", " + std::to_string(hi) + ")");
  return warnings;
}

std::vector<std::string> validate_interference_range(const ScalingParams& sp) {
  std::vector<std::string> warnings;
  if (!(sp.s > 0.0 && sp.s < 1.0))
    warnings.push_back("s outside (0,1)");
  if (!(sp.ell > 0.0 && sp.ell < 1.0))
    warnings.push_back("l outside (0,1)");
  if (!(sp.s + sp.ell < 1.0))
    warnings.push_back("s + l >= 1: outside the interference theorem regime");
  return warnings;
}

double max_radius(double m, double p, double epsilon, double altitude_m) {
  const double den = 0.25 * M_PI * M_PI * std::pow(m, 2.0 * p + epsilon) - 1.0;
  if (!(den > 0.0))
    throw DomainError("max_radius: pi^2/4 * M^(2p+eps) must exceed 1");
  return altitude_m / std::sqrt(den);
}

SufficientInterval sufficient_interval(double m, double p, double epsilon,
                                       double phi, double altitude_m) {
  SufficientInterval out;
  const double sc = std::sin(phi) * std::cos(phi);
  if (std::fabs(sc) < 1e-9) {
    out.branch = PhiBranch::kPhiZero;
    const double lo_den = M_PI * M_PI / 16.0 * std::pow(m, 2.0 + epsilon / 2.0) - 1.0;
    const double hi_den = M_PI * M_PI / 4.0 * std::pow(m, 2.0 * p + epsilon / 2.0) - 1.0;
    if (!(lo_den > 0.0) || !(hi_den > 0.0))
      throw DomainError("sufficient_interval: nonpositive denominator (phi = 0 branch)");
    out.r_lo = altitude_m / std::sqrt(lo_den);
    out.r_hi = altitude_m / std::sqrt(hi_den);
    return out;
  }
  out.branch = PhiBranch::kGeneralPhi;
  out.alpha = 0.25 * M_PI * std::sqrt(std::fabs(sc));
  const double a2 = out.alpha * out.alpha;
  const double lo_den = a2 * std::pow(m, 2.0 + epsilon / 2.0) - 1.0;
  const double hi_den = 4.0 * a2 * std::pow(m, (p + 1.0) + epsilon / 2.0) - 1.0;
  if (!(lo_den > 0.0) || !(hi_den > 0.0))
    throw DomainError("sufficient_interval: nonpositive denominator");
  out.r_lo = altitude_m / std::sqrt(lo_den);
  out.r_hi = altitude_m / std::sqrt(hi_den);
  return out;
}

namespace {

// lambda*pi*r^2 endpoints of the sufficient interval.
void interval_gamma_args(const SufficientInterval& iv, double intensity,
                         double* x_lo, double* x_hi) {
  *x_lo = intensity * M_PI * iv.r_lo * iv.r_lo;
  *x_hi = intensity * M_PI * iv.r_hi * iv.r_hi;
}

}  // namespace

double theorem1_probability_lower_bound(double m, double intensity, int n,
                                        double p, double epsilon, double phi,
                                        double altitude_m) {
  const SufficientInterval iv = sufficient_interval(m, p, epsilon, phi, altitude_m);
  if (iv.degenerate()) return 0.0;
  double x_lo, x_hi;
  interval_gamma_args(iv, intensity, &x_lo, &x_hi);
  return regularized_incomplete_gamma(n, x_hi) - regularized_incomplete_gamma(n, x_lo);
}

GaussianApproxBounds gaussian_approx_bounds(double m, double intensity, int n,
                                            double p, double epsilon, double phi,
                                            double altitude_m) {
  const SufficientInterval iv = sufficient_interval(m, p, epsilon, phi, altitude_m);
  double x_lo, x_hi;
  interval_gamma_args(iv, intensity, &x_lo, &x_hi);
  const double nd = static_cast<double>(n);
  const double sigma = std::sqrt(nd);
  return GaussianApproxBounds{(x_hi - nd) / sigma, (x_lo - nd) / sigma};
}

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

double gaussian_approx_probability(double m, double intensity, int n, double p,
                                   double epsilon, double phi, double altitude_m) {
  if (n < 1) throw DomainError("gaussian_approx_probability: N must be >= 1");
  const GaussianApproxBounds b =
      gaussian_approx_bounds(m, intensity, n, p, epsilon, phi, altitude_m);
  const double v = std_normal_cdf(b.upper) - std_normal_cdf(b.lower);
  return v < 0.0 ? 0.0 : v;
}

double scaling_fraction(double q, double t) { return q - t - 1.0; }

RateBounds rate_bounds(double q, double t, double epsilon, double m, double tx_snr) {
  const double log_m = std::log(m);
  const double log_p = std::log(tx_snr);
  return RateBounds{2.0 * (q - t - 1.0 - epsilon) * log_m + log_p,
                    2.0 * (q - t - 1.0 + epsilon) * log_m + log_p};
}

double theorem3_interference_bound(int n, double intensity, double altitude_m,
                                   double m, double ell) {
  const double beams = std::pow(m, 2.0 * ell);
  if (!(beams > 1.0))
    throw DomainError("theorem3_interference_bound: M^(2l) must exceed 1");
  const double x = intensity * M_PI * altitude_m * altitude_m / (beams - 1.0);
  return regularized_incomplete_gamma(n, x);
}

}  // namespace geobeam
