#include <cmath>

#include "geobeam/kernels.hpp"

namespace geobeam::kernels {

double fejer_axis_factor(double delta, double m) {
  const double den = std::sin(0.5 * M_PI * delta);
  if (std::fabs(den) < kSingularEps) return 1.0;
  const double num = std::sin(0.5 * M_PI * m * delta);
  const double ratio = num / (m * den);
  const double f = ratio * ratio;
  return f > 1.0 ? 1.0 : f;
}

namespace detail {

void beam_gain_batch_scalar(const double* dx, const double* dy, double* gain,
                            std::size_t n, double m) {
  for (std::size_t i = 0; i < n; ++i) {
    double f = fejer_axis_factor(dx[i], m) * fejer_axis_factor(dy[i], m);
    gain[i] = f < kGainClamp ? 0.0 : f;
  }
}

void rate_log1p_batch_scalar(const double* gain, double* out, std::size_t n,
                             double scale) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::log1p(scale * gain[i]);
}

}  // namespace detail
}  // namespace geobeam::kernels
