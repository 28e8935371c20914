#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geobeam/geometry.hpp"
#include "geobeam/rng.hpp"

namespace geobeam {

enum class SelectionPolicy {
  kNearestN,       // the N smallest-distance users inside R
  kRandomWithinR,  // uniform N-subset of the users inside R
};

struct SelectionConfig {
  int group_size = 1;      // N
  double radius_m = 1.0;   // R
  SelectionPolicy policy = SelectionPolicy::kNearestN;

  void validate() const;
};

// The selected multicast group, distance-sorted; user N-1 is the decisive one.
struct SelectedSet {
  std::vector<UserPosition> users;

  double last_radius() const { return users.back().radius_m; }    // r_N
  double last_azimuth() const { return users.back().azimuth; }    // phi_N
};

// Throws InsufficientUsersError when fewer than N users lie inside R; the
// conditioning policy (resample vs count-as-failure) belongs to the caller.
// The stream is consumed by the random-subset policy only.
SelectedSet select(std::span<const UserPosition> users, const SelectionConfig& cfg,
                   rng::CounterStream& stream);
SelectedSet select(std::span<const UserPosition> users, const SelectionConfig& cfg,
                   std::uint64_t seed);

// P[r_N < r] for a homogeneous PPP: regularized lower incomplete gamma
// P(N, lambda*pi*r^2) (Nth-nearest-neighbor distance law).
double nth_distance_cdf(double radius_m, int n, double intensity);

// P[r_a < r_N < r_b].
double nth_distance_interval_prob(double r_a, double r_b, int n, double intensity);

// Draw r_N directly: lambda*pi*r_N^2 ~ Gamma(N,1). This is the fast path that
// avoids instantiating the point field; the azimuth is uniform by isotropy
// and drawn separately by the caller.
double sample_nth_distance(int n, double intensity, rng::CounterStream& stream);
double sample_nth_distance(int n, double intensity, std::uint64_t seed);

}  // namespace geobeam
