#pragma once

#include <complex>
#include <vector>

#include "geobeam/geometry.hpp"

namespace geobeam {

// Direction cosines (sin(theta)cos(phi), sin(theta)sin(phi)). Physical
// directions satisfy cos_x^2 + cos_y^2 <= 1.
struct SteeringDirection {
  double cos_x = 0.0;
  double cos_y = 0.0;
};

bool is_physical(const SteeringDirection& dir);

// A fixed beam. Grid beams point at (2n/M^l, 2m/M^l) in direction-cosine
// space; the nadir beam is (n,m) = (0,0).
struct BeamConfig {
  int grid_n = 0;
  int grid_m = 0;
  double grid_exponent = 1.0;  // l in (0,1]
  SteeringDirection direction{0.0, 0.0};

  static BeamConfig nadir();
  static BeamConfig grid_beam(int n, int m, double ell, int antennas_per_axis);
};

// v(x): entries exp(-j pi k x)/sqrt(M), k = 0..M-1. Oracle device; capped.
std::vector<std::complex<double>> steering_vector(double dir_cos, int m);

// Fejer-kernel beam gain in [0,1]: product over axes of
// |sin(pi M delta/2) / (M sin(pi delta/2))|^2 with delta the user-beam
// direction-cosine difference. Removable singularities take the limit value.
double beam_gain_closed_form(const SteeringDirection& user,
                             const BeamConfig& beam, int m);

double beam_gain_user(const UserPosition& user, const BeamConfig& beam, int m);

// Adjacent-beam interference M^(2-2l) * f_j at the user.
double interference_gain(const UserPosition& user, const BeamConfig& beam_j,
                         int m, double ell);

// Smallest r > 0 with (pi M / 2) sin(theta(r)) cos(phi) = pi, located by
// bisection; the first null of the nadir beam's x-axis pattern along azimuth
// phi (needs |phi| < pi/2 so cos(phi) > 0).
double first_null_radius(int m, double phi, const SystemConfig& sys);

}  // namespace geobeam
