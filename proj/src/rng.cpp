#include "geobeam/rng.hpp"

#include <cmath>

#include "geobeam/errors.hpp"

namespace geobeam::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(PhiloxCounter& x, const PhiloxKey& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * x.v[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * x.v[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  x = PhiloxCounter{{hi1 ^ x.v[1] ^ k.v[0], lo1, hi0 ^ x.v[3] ^ k.v[1], lo0}};
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) {
  for (int r = 0; r < 10; ++r) {
    philox_round(ctr, key);
    key.v[0] += kWeyl0;
    key.v[1] += kWeyl1;
  }
  return ctr;
}

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream) {
  key_.v[0] = static_cast<std::uint32_t>(seed);
  key_.v[1] = static_cast<std::uint32_t>(seed >> 32);
  ctr_.v[0] = static_cast<std::uint32_t>(stream);
  ctr_.v[1] = static_cast<std::uint32_t>(stream >> 32);
  ctr_.v[2] = 0;
  ctr_.v[3] = 0;
}

void CounterStream::refill() {
  const PhiloxCounter out = philox4x32(ctr_, key_);
  buf_[0] = (static_cast<std::uint64_t>(out.v[1]) << 32) | out.v[0];
  buf_[1] = (static_cast<std::uint64_t>(out.v[3]) << 32) | out.v[2];
  buf_pos_ = 0;
  if (++ctr_.v[2] == 0) ++ctr_.v[3];  // 64-bit position counter
}

std::uint64_t CounterStream::next_u64() {
  if (buf_pos_ >= 2) refill();
  return buf_[buf_pos_++];
}

double CounterStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterStream::next_double_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

double CounterStream::next_exponential() { return -std::log(next_double_open()); }

double CounterStream::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = next_double_open();
  const double u2 = next_double();
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  cached_normal_ = rad * std::sin(ang);
  has_cached_normal_ = true;
  return rad * std::cos(ang);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + (salt + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double gamma_sample(CounterStream& stream, std::uint64_t shape) {
  if (shape == 0) throw DomainError("gamma_sample: shape must be >= 1");
  if (shape <= 32) {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < shape; ++i) sum += stream.next_exponential();
    return sum;
  }
  // Marsaglia-Tsang (2000), alpha >= 1 branch.
  const double d = static_cast<double>(shape) - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = stream.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.next_double_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::uint64_t poisson_sample(CounterStream& stream, double mean) {
  if (!(mean >= 0.0)) throw DomainError("poisson_sample: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = stream.next_double_open();
    while (prod > limit) {
      ++k;
      prod *= stream.next_double_open();
    }
    return k;
  }
  // PTRS (Hormann 1993), valid for mean >= 10.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    double u = stream.next_double() - 0.5;
    double v = stream.next_double_open();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    if (lhs <= kf * log_mean - mean - std::lgamma(kf + 1.0))
      return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace geobeam::rng
