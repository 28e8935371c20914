#include "geobeam/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "geobeam/analytic.hpp"
#include "geobeam/errors.hpp"

namespace geobeam {

void SelectionConfig::validate() const {
  if (group_size < 1) throw DomainError("selection.n must be >= 1");
  if (!(radius_m > 0.0)) throw DomainError("selection.radius must be > 0");
}

SelectedSet select(std::span<const UserPosition> users, const SelectionConfig& cfg,
                   rng::CounterStream& stream) {
  cfg.validate();
  std::vector<std::size_t> in_radius;
  in_radius.reserve(users.size());
  for (std::size_t i = 0; i < users.size(); ++i)
    if (users[i].radius_m < cfg.radius_m) in_radius.push_back(i);

  const std::size_t n = static_cast<std::size_t>(cfg.group_size);
  if (in_radius.size() < n) throw InsufficientUsersError(in_radius.size(), n);

  if (cfg.policy == SelectionPolicy::kNearestN) {
    std::nth_element(in_radius.begin(), in_radius.begin() + (n - 1), in_radius.end(),
                     [&](std::size_t a, std::size_t b) {
                       return users[a].radius_m < users[b].radius_m;
                     });
    in_radius.resize(n);
  } else {
    // Uniform N-subset: partial Fisher-Yates over the in-radius indices.
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(stream.next_double() * (in_radius.size() - i));
      std::swap(in_radius[i], in_radius[j]);
    }
    in_radius.resize(n);
  }

  SelectedSet out;
  out.users.reserve(n);
  for (std::size_t idx : in_radius) out.users.push_back(users[idx]);
  std::sort(out.users.begin(), out.users.end(),
            [](const UserPosition& a, const UserPosition& b) {
              return a.radius_m < b.radius_m;
            });
  return out;
}

SelectedSet select(std::span<const UserPosition> users, const SelectionConfig& cfg,
                   std::uint64_t seed) {
  rng::CounterStream stream(seed, 0x5e1ec7ULL);
  return select(users, cfg, stream);
}

double nth_distance_cdf(double radius_m, int n, double intensity) {
  if (radius_m < 0.0) throw DomainError("nth_distance_cdf: r must be >= 0");
  if (n < 1) throw DomainError("nth_distance_cdf: N must be >= 1");
  if (!(intensity > 0.0)) throw DomainError("nth_distance_cdf: lambda must be > 0");
  return regularized_incomplete_gamma(n, intensity * M_PI * radius_m * radius_m);
}

double nth_distance_interval_prob(double r_a, double r_b, int n, double intensity) {
  if (r_a > r_b) throw DomainError("nth_distance_interval_prob: need r_a <= r_b");
  return nth_distance_cdf(r_b, n, intensity) - nth_distance_cdf(r_a, n, intensity);
}

double sample_nth_distance(int n, double intensity, rng::CounterStream& stream) {
  if (n < 1) throw DomainError("sample_nth_distance: N must be >= 1");
  if (!(intensity > 0.0)) throw DomainError("sample_nth_distance: lambda must be > 0");
  const double x = rng::gamma_sample(stream, static_cast<std::uint64_t>(n));
  return std::sqrt(x / (intensity * M_PI));
}

double sample_nth_distance(int n, double intensity, std::uint64_t seed) {
  rng::CounterStream stream(seed, 0);
  return sample_nth_distance(n, intensity, stream);
}

}  // namespace geobeam
