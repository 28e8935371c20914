#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace geobeam {

// GEO downlink with an M x M uniform planar array; all lengths in meters.
struct SystemConfig {
  int antennas_per_axis = 1;          // M; the array has M^2 elements
  double altitude_m = 3.5786e7;       // GEO altitude H
  double carrier_hz = 20e9;           // Ka-band downlink default
  double light_speed = 299792458.0;   // c0
  double tx_snr = 1.0;                // P, per-user transmit SNR (linear)

  void validate() const;  // throws DomainError
};

// Homogeneous Poisson field of ground users on a disk.
struct PppConfig {
  double intensity = 1.0;        // lambda, points per m^2
  double region_radius_m = 1.0;  // disk radius (coverage D or selection R)
  std::uint64_t seed = 1;

  double expected_points() const;
  void validate() const;
};

// Hard cap on the expected point count of a single PPP realization.
inline constexpr double kMaxExpectedPoints = 1e8;

// Explicit steering vectors are an oracle device only; M^2 must stay small.
inline constexpr std::int64_t kChannelVectorCap = 1 << 20;

// A ground point with its derived 3D geometry. With the satellite at height H
// over the beam center, sin(theta) = r / sqrt(r^2 + H^2) and the direction
// cosines are sin(theta)*cos(phi), sin(theta)*sin(phi).
struct UserPosition {
  double x = 0.0;
  double y = 0.0;
  double radius_m = 0.0;     // r = |(x,y)|
  double azimuth = 0.0;      // phi
  double sin_theta = 0.0;
  double slant_range_m = 0;  // d = sqrt(r^2 + H^2)
  double dir_cos_x = 0.0;
  double dir_cos_y = 0.0;
};

UserPosition position_from_polar(double radius_m, double azimuth,
                                 const SystemConfig& sys);

// Poisson(lambda*pi*R^2) many users, uniform on the disk, derived fields
// populated. Bit-identical output for a fixed seed.
std::vector<UserPosition> sample_ppp(const PppConfig& ppp,
                                     const SystemConfig& sys);

// Free-space large-scale fading (c0 / (4 pi f_c d))^2.
double large_scale_fading(double slant_range_m, const SystemConfig& sys);

// LoS channel sqrt(L) * M * v(dir_cos_x) (x) v(dir_cos_y), length M^2.
// Oracle-only path: throws NumericError when M^2 exceeds kChannelVectorCap.
std::vector<std::complex<double>> build_channel(const UserPosition& user,
                                                const SystemConfig& sys);

}  // namespace geobeam
