#pragma once

#include <array>
#include <cstdint>

namespace geobeam::rng {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11 definition).
// Stateless: output is a pure function of (counter, key), which is what makes
// sample-indexed Monte Carlo streams reproducible independent of worker count.
struct PhiloxCounter {
  std::array<std::uint32_t, 4> v{0, 0, 0, 0};
};
struct PhiloxKey {
  std::array<std::uint32_t, 2> v{0, 0};
};

PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key);

// One random stream addressed by (seed, stream). Streams with distinct ids
// are independent; a given (seed, stream) always replays the same sequence.
// Stream ids are sample indices in the Monte Carlo estimators.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_double();       // uniform [0,1), 53-bit
  double next_double_open();  // uniform (0,1), safe for log()
  double uniform(double lo, double hi);
  double next_exponential();  // rate 1
  double next_normal();       // standard normal, Box-Muller

 private:
  void refill();

  PhiloxKey key_;
  PhiloxCounter ctr_;
  std::array<std::uint64_t, 2> buf_{};
  int buf_pos_ = 2;  // empty
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// SplitMix64-mixed seed derivation for independent sub-experiments.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

// Gamma(shape, 1) with positive integer shape. Sum of exponentials for
// shape <= 32, Marsaglia-Tsang rejection above.
double gamma_sample(CounterStream& stream, std::uint64_t shape);

// Poisson with the given mean: inversion by multiplication for small means,
// Hormann's PTRS transformed rejection for large ones.
std::uint64_t poisson_sample(CounterStream& stream, double mean);

}  // namespace geobeam::rng
