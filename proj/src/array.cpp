#include "geobeam/array.hpp"

#include <cmath>

#include "geobeam/errors.hpp"
#include "geobeam/kernels.hpp"

namespace geobeam {

bool is_physical(const SteeringDirection& dir) {
  return dir.cos_x * dir.cos_x + dir.cos_y * dir.cos_y <= 1.0 + 1e-12;
}

BeamConfig BeamConfig::nadir() { return BeamConfig{}; }

BeamConfig BeamConfig::grid_beam(int n, int m, double ell, int antennas_per_axis) {
  if (!(ell > 0.0) || ell > 1.0)
    throw DomainError("grid_beam: exponent l must lie in (0,1]");
  if (antennas_per_axis < 1) throw DomainError("grid_beam: M must be >= 1");
  BeamConfig beam;
  beam.grid_n = n;
  beam.grid_m = m;
  beam.grid_exponent = ell;
  const double spacing = 2.0 / std::pow(static_cast<double>(antennas_per_axis), ell);
  beam.direction = SteeringDirection{n * spacing, m * spacing};
  return beam;
}

std::vector<std::complex<double>> steering_vector(double dir_cos, int m) {
  if (m < 1) throw DomainError("steering_vector: M must be >= 1");
  if (static_cast<std::int64_t>(m) > kChannelVectorCap)
    throw NumericError("steering_vector: M exceeds the explicit-vector cap");
  std::vector<std::complex<double>> v(static_cast<std::size_t>(m));
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (int k = 0; k < m; ++k) {
    const double phase = -M_PI * k * dir_cos;
    v[static_cast<std::size_t>(k)] =
        std::complex<double>(norm * std::cos(phase), norm * std::sin(phase));
  }
  return v;
}

double beam_gain_closed_form(const SteeringDirection& user,
                             const BeamConfig& beam, int m) {
  if (m < 1) throw DomainError("beam_gain_closed_form: M must be >= 1");
  const double md = static_cast<double>(m);
  const double f = kernels::fejer_axis_factor(user.cos_x - beam.direction.cos_x, md) *
                   kernels::fejer_axis_factor(user.cos_y - beam.direction.cos_y, md);
  return f < kernels::kGainClamp ? 0.0 : f;
}

double beam_gain_user(const UserPosition& user, const BeamConfig& beam, int m) {
  return beam_gain_closed_form(SteeringDirection{user.dir_cos_x, user.dir_cos_y},
                               beam, m);
}

double interference_gain(const UserPosition& user, const BeamConfig& beam_j,
                         int m, double ell) {
  if (!(ell > 0.0) || !(ell < 1.0))
    throw DomainError("interference_gain: exponent l must lie in (0,1)");
  const double power_split = std::pow(static_cast<double>(m), 2.0 - 2.0 * ell);
  return power_split * beam_gain_user(user, beam_j, m);
}

double first_null_radius(int m, double phi, const SystemConfig& sys) {
  const double cphi = std::cos(phi);
  if (!(cphi > 0.0)) throw DomainError("first_null_radius: need cos(phi) > 0");
  const double target = 2.0 / (m * cphi);  // sin(theta) at the null
  if (target >= 1.0)
    throw DomainError("first_null_radius: null lies outside the visible region");
  const double h = sys.altitude_m;
  double lo = 0.0;
  double hi = h;
  while (hi / std::hypot(hi, h) < target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid / std::hypot(mid, h) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace geobeam
