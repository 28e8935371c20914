#include "geobeam/montecarlo.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "geobeam/errors.hpp"
#include "geobeam/kernels.hpp"

namespace geobeam {

namespace {

constexpr std::size_t kBlockSize = 4096;
constexpr int kMaxResampleAttempts = 10'000;

enum class ValueMode { kRate, kGainAbove, kGainBelow };

struct CoreParams {
  double m = 1.0;
  double intensity = 1.0;
  int n_users = 1;
  double mean_points = 0.0;  // FULL_PPP: lambda*pi*R^2
  double radius_m = 0.0;
  SelectionPolicy policy = SelectionPolicy::kNearestN;
  Conditioning conditioning = Conditioning::kResampleOnInsufficient;
  SamplerKind sampler = SamplerKind::kOrderStatistic;
  double beam_cos_x = 0.0;
  double beam_cos_y = 0.0;
  double scale = 1.0;      // kRate: P * M^2
  double gain_thr = 0.0;   // kGainAbove / kGainBelow: threshold on f
};

struct BlockAccum {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t attempts = 0;
  std::uint64_t failures = 0;
};

struct Totals {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t attempts = 0;
  std::uint64_t failures = 0;
};

struct Draw {
  double sin_theta = 0.0;
  double azimuth = 0.0;
  bool ok = false;
};

void sample_disk_ppp(rng::CounterStream& stream, double mean_points,
                     double radius_m, const SystemConfig& sys,
                     std::vector<UserPosition>* out) {
  const std::uint64_t count = rng::poisson_sample(stream, mean_points);
  out->clear();
  out->reserve(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    const double r = radius_m * std::sqrt(stream.next_double());
    const double phi = stream.uniform(0.0, 2.0 * M_PI);
    out->push_back(position_from_polar(r, phi, sys));
  }
}

Draw draw_sample(rng::CounterStream& stream, const CoreParams& cp,
                 const SystemConfig& sys, std::vector<UserPosition>* scratch,
                 std::uint64_t* attempts) {
  Draw d;
  if (cp.sampler == SamplerKind::kOrderStatistic) {
    *attempts += 1;
    const double r = sample_nth_distance(cp.n_users, cp.intensity, stream);
    d.sin_theta = r / std::hypot(r, sys.altitude_m);
    d.azimuth = stream.uniform(0.0, 2.0 * M_PI);
    d.ok = true;
    return d;
  }
  SelectionConfig sel_cfg;
  sel_cfg.group_size = cp.n_users;
  sel_cfg.radius_m = cp.radius_m;
  sel_cfg.policy = cp.policy;
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    *attempts += 1;
    sample_disk_ppp(stream, cp.mean_points, cp.radius_m, sys, scratch);
    try {
      const SelectedSet set = select(*scratch, sel_cfg, stream);
      d.sin_theta = set.users.back().sin_theta;
      d.azimuth = set.users.back().azimuth;
      d.ok = true;
      return d;
    } catch (const InsufficientUsersError&) {
      if (cp.conditioning == Conditioning::kCountAsFailure) return d;  // ok=false
    }
  }
  throw NumericError("monte carlo: resample limit reached; fewer than N users "
                     "within R is too likely at these parameters");
}

Totals run_core(const CoreParams& cp, const SystemConfig& sys,
                const McConfig& mc, ValueMode mode) {
  const std::uint64_t n = mc.n_samples;
  const std::size_t n_blocks =
      static_cast<std::size_t>((n + kBlockSize - 1) / kBlockSize);
  std::vector<BlockAccum> blocks(n_blocks);

  auto worker_fn = [&](int w) {
    std::vector<double> dx(kBlockSize), dy(kBlockSize), gain(kBlockSize),
        value(kBlockSize);
    std::vector<bool> ok(kBlockSize);
    std::vector<UserPosition> scratch;
    for (std::size_t b = static_cast<std::size_t>(w); b < n_blocks;
         b += static_cast<std::size_t>(mc.workers)) {
      const std::uint64_t begin = b * kBlockSize;
      const std::size_t count =
          static_cast<std::size_t>(std::min<std::uint64_t>(kBlockSize, n - begin));
      BlockAccum acc;
      for (std::size_t i = 0; i < count; ++i) {
        rng::CounterStream stream(mc.seed, begin + i);
        const Draw d = draw_sample(stream, cp, sys, &scratch, &acc.attempts);
        ok[i] = d.ok;
        if (!d.ok) {
          ++acc.failures;
          dx[i] = 0.0;
          dy[i] = 0.0;
          continue;
        }
        dx[i] = d.sin_theta * std::cos(d.azimuth) - cp.beam_cos_x;
        dy[i] = d.sin_theta * std::sin(d.azimuth) - cp.beam_cos_y;
      }
      kernels::beam_gain_batch(dx.data(), dy.data(), gain.data(), count, cp.m);
      switch (mode) {
        case ValueMode::kRate:
          kernels::rate_log1p_batch(gain.data(), value.data(), count, cp.scale);
          break;
        case ValueMode::kGainAbove:
          for (std::size_t i = 0; i < count; ++i)
            value[i] = gain[i] > cp.gain_thr ? 1.0 : 0.0;
          break;
        case ValueMode::kGainBelow:
          for (std::size_t i = 0; i < count; ++i)
            value[i] = gain[i] < cp.gain_thr ? 1.0 : 0.0;
          break;
      }
      for (std::size_t i = 0; i < count; ++i) {
        const double v = ok[i] ? value[i] : 0.0;
        acc.sum += v;
        acc.sum_sq += v * v;
      }
      blocks[b] = acc;
    }
  };

  if (mc.workers == 1) {
    worker_fn(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(mc.workers));
    for (int w = 0; w < mc.workers; ++w) pool.emplace_back(worker_fn, w);
    for (auto& th : pool) th.join();
  }

  // Merge in block order so the result is independent of the worker count.
  Totals tot;
  for (const BlockAccum& acc : blocks) {
    tot.sum += acc.sum;
    tot.sum_sq += acc.sum_sq;
    tot.attempts += acc.attempts;
    tot.failures += acc.failures;
  }
  return tot;
}

CoreParams resolve_core(const SystemConfig& sys, const ScalingParams& params,
                        const SelectionConfig& sel, const McConfig& mc) {
  sys.validate();
  mc.validate();
  CoreParams cp;
  cp.m = static_cast<double>(sys.antennas_per_axis);
  cp.intensity = derive_intensity(cp.m, params.q, sys.altitude_m);
  cp.n_users = sel.group_size > 0 ? sel.group_size : derive_group_size(cp.m, params.t);
  cp.policy = sel.policy;
  cp.conditioning = mc.conditioning;
  cp.sampler = mc.sampler;
  if (mc.sampler == SamplerKind::kOrderStatistic) {
    if (sel.policy != SelectionPolicy::kNearestN)
      throw DomainError("order-statistic sampler is exact for the nearest-N "
                        "policy only; use the full-ppp sampler");
  } else {
    cp.radius_m = sel.radius_m == kAutoRadius
                      ? max_radius(cp.m, params.p, params.epsilon, sys.altitude_m)
                      : sel.radius_m;
    cp.mean_points = cp.intensity * M_PI * cp.radius_m * cp.radius_m;
    if (cp.mean_points > kMaxExpectedPoints)
      throw NumericError(
          "full-ppp sampler: expected point count " +
          std::to_string(cp.mean_points) +
          " exceeds the cap; switch to the order-statistic sampler");
  }
  return cp;
}

RateEstimate finalize_rate(const Totals& tot, const McConfig& mc) {
  const double n = static_cast<double>(mc.n_samples);
  RateEstimate est;
  est.mean = tot.sum / n;
  const double var =
      mc.n_samples > 1
          ? std::max(0.0, (tot.sum_sq - n * est.mean * est.mean) / (n - 1.0))
          : 0.0;
  est.std_error = std::sqrt(var / n);
  est.n_effective = mc.n_samples - tot.failures;
  if (mc.conditioning == Conditioning::kResampleOnInsufficient) {
    est.conditioning_rate =
        tot.attempts > 0
            ? static_cast<double>(tot.attempts - mc.n_samples) /
                  static_cast<double>(tot.attempts)
            : 0.0;
  } else {
    est.conditioning_rate = static_cast<double>(tot.failures) / n;
  }
  return est;
}

BoundReport make_bound_report(double analytic, const Totals& tot,
                              const McConfig& mc) {
  const double n = static_cast<double>(mc.n_samples);
  BoundReport rep;
  rep.analytic = analytic;
  rep.empirical = tot.sum / n;
  rep.mc_std_error = std::sqrt(rep.empirical * (1.0 - rep.empirical) / n);
  rep.satisfied = analytic <= rep.empirical + 3.0 * rep.mc_std_error;
  return rep;
}

}  // namespace

void McConfig::validate() const {
  if (n_samples < 1) throw DomainError("mc.n_samples must be >= 1");
  if (workers < 1 || workers > 1024)
    throw DomainError("mc.workers must lie in [1, 1024]");
}

double derive_intensity(double m, double q, double altitude_m) {
  return 0.25 * M_PI * std::pow(m, q) / (altitude_m * altitude_m);
}

int derive_group_size(double m, double t) {
  const double n = std::round(std::pow(m, t));
  return n < 1.0 ? 1 : static_cast<int>(n);
}

RateEstimate estimate_rate(const SystemConfig& sys, const ScalingParams& params,
                           const SelectionConfig& sel, const McConfig& mc) {
  CoreParams cp = resolve_core(sys, params, sel, mc);
  cp.scale = sys.tx_snr * cp.m * cp.m;
  const Totals tot = run_core(cp, sys, mc, ValueMode::kRate);
  return finalize_rate(tot, mc);
}

BoundReport estimate_event_probability(const SystemConfig& sys,
                                       const ScalingParams& params,
                                       const SelectionConfig& sel,
                                       const McConfig& mc) {
  CoreParams cp = resolve_core(sys, params, sel, mc);
  // Event Z > M^(2p) compared in gain space: f > M^(2p-2).
  cp.gain_thr = std::pow(cp.m, 2.0 * params.p - 2.0);
  const Totals tot = run_core(cp, sys, mc, ValueMode::kGainAbove);
  const double analytic = theorem1_probability_lower_bound(
      cp.m, cp.intensity, cp.n_users, params.p, params.epsilon, M_PI / 4.0,
      sys.altitude_m);
  return make_bound_report(analytic, tot, mc);
}

BoundReport estimate_interference_probability(const SystemConfig& sys,
                                              const ScalingParams& params,
                                              const BeamConfig& beam_j,
                                              const SelectionConfig& sel,
                                              const McConfig& mc) {
  if (beam_j.direction.cos_x == 0.0 && beam_j.direction.cos_y == 0.0)
    throw DomainError("interference beam must differ from the serving beam");
  CoreParams cp = resolve_core(sys, params, sel, mc);
  cp.beam_cos_x = beam_j.direction.cos_x;
  cp.beam_cos_y = beam_j.direction.cos_y;
  // Interference M^(2-2l) f_j < M^(-2s) in gain space: f_j < M^(2l-2-2s).
  cp.gain_thr = std::pow(cp.m, 2.0 * params.ell - 2.0 - 2.0 * params.s);
  const Totals tot = run_core(cp, sys, mc, ValueMode::kGainBelow);
  const double analytic = theorem3_interference_bound(
      cp.n_users, cp.intensity, sys.altitude_m, cp.m, params.ell);
  return make_bound_report(analytic, tot, mc);
}

std::vector<SweepRow> sweep_fraction_vs_q(const SystemConfig& sys,
                                          std::span<const double> t_values,
                                          std::span<const double> q_values,
                                          SelectionPolicy policy,
                                          const McConfig& mc) {
  std::vector<SweepRow> rows;
  rows.reserve(t_values.size() * q_values.size());
  const double m = static_cast<double>(sys.antennas_per_axis);
  const double ideal = std::log1p(sys.tx_snr * m * m);
  std::uint64_t cell = 0;
  for (double t : t_values) {
    for (double q : q_values) {
      ScalingParams params;
      params.q = q;
      params.t = t;
      SelectionConfig sel;
      sel.group_size = derive_group_size(m, t);
      sel.radius_m = kAutoRadius;
      sel.policy = policy;
      McConfig cell_mc = mc;
      cell_mc.seed = rng::derive_seed(mc.seed, cell++);
      const RateEstimate est = estimate_rate(sys, params, sel, cell_mc);
      SweepRow row;
      row.t = t;
      row.q = q;
      row.ratio = est.mean / ideal;
      row.std_error = est.std_error / ideal;
      row.predicted = scaling_fraction(q, t);
      row.policy = policy;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace geobeam
