#include "geobeam/geometry.hpp"

#include <cmath>
#include <string>

#include "geobeam/array.hpp"
#include "geobeam/errors.hpp"
#include "geobeam/rng.hpp"

namespace geobeam {

void SystemConfig::validate() const {
  if (antennas_per_axis < 1) throw DomainError("system.m must be >= 1");
  if (!(altitude_m > 0.0)) throw DomainError("system.altitude must be > 0");
  if (!(carrier_hz > 0.0)) throw DomainError("system.carrier must be > 0");
  if (!(light_speed > 0.0)) throw DomainError("system.light_speed must be > 0");
  if (!(tx_snr > 0.0)) throw DomainError("system.tx_snr must be > 0");
}

double PppConfig::expected_points() const {
  return intensity * M_PI * region_radius_m * region_radius_m;
}

void PppConfig::validate() const {
  if (!(intensity > 0.0)) throw DomainError("ppp.intensity must be > 0");
  if (!(region_radius_m > 0.0)) throw DomainError("ppp.region_radius must be > 0");
  if (!std::isfinite(expected_points()))
    throw DomainError("ppp: expected point count is not finite");
}

UserPosition position_from_polar(double radius_m, double azimuth,
                                 const SystemConfig& sys) {
  if (radius_m < 0.0) throw DomainError("position_from_polar: radius must be >= 0");
  UserPosition u;
  u.radius_m = radius_m;
  u.azimuth = azimuth;
  u.x = radius_m * std::cos(azimuth);
  u.y = radius_m * std::sin(azimuth);
  const double h = sys.altitude_m;
  u.slant_range_m = std::hypot(radius_m, h);
  u.sin_theta = radius_m / u.slant_range_m;
  u.dir_cos_x = u.sin_theta * std::cos(azimuth);
  u.dir_cos_y = u.sin_theta * std::sin(azimuth);
  return u;
}

std::vector<UserPosition> sample_ppp(const PppConfig& ppp,
                                     const SystemConfig& sys) {
  ppp.validate();
  const double mean = ppp.expected_points();
  if (mean > kMaxExpectedPoints)
    throw NumericError("region too dense: expected " + std::to_string(mean) +
                       " points exceeds cap " + std::to_string(kMaxExpectedPoints));
  rng::CounterStream stream(ppp.seed, 0);
  const std::uint64_t count = rng::poisson_sample(stream, mean);
  std::vector<UserPosition> users;
  users.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    // Uniform on the disk: r = R*sqrt(u).
    const double r = ppp.region_radius_m * std::sqrt(stream.next_double());
    const double phi = stream.uniform(0.0, 2.0 * M_PI);
    users.push_back(position_from_polar(r, phi, sys));
  }
  return users;
}

double large_scale_fading(double slant_range_m, const SystemConfig& sys) {
  if (!(slant_range_m > 0.0)) throw DomainError("large_scale_fading: d must be > 0");
  const double amp = sys.light_speed / (4.0 * M_PI * sys.carrier_hz * slant_range_m);
  return amp * amp;
}

std::vector<std::complex<double>> build_channel(const UserPosition& user,
                                                const SystemConfig& sys) {
  const std::int64_t m = sys.antennas_per_axis;
  if (m * m > kChannelVectorCap)
    throw NumericError("build_channel: M^2 exceeds the explicit-vector cap, "
                       "use closed-form path");
  const auto vx = steering_vector(user.dir_cos_x, static_cast<int>(m));
  const auto vy = steering_vector(user.dir_cos_y, static_cast<int>(m));
  const double amp =
      std::sqrt(large_scale_fading(user.slant_range_m, sys)) * static_cast<double>(m);
  std::vector<std::complex<double>> h(static_cast<std::size_t>(m * m));
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j)
      h[static_cast<std::size_t>(i * m + j)] = amp * vx[i] * vy[j];
  return h;
}

}  // namespace geobeam
