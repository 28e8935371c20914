#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>

#include "geobeam/errors.hpp"
#include "geobeam/kernels.hpp"

namespace geobeam::kernels {

namespace {

std::atomic<Backend> g_requested{Backend::kAuto};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend env_backend() {
  const char* env = std::getenv("GEOBEAM_KERNEL");
  if (env == nullptr) return Backend::kAuto;
  if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
  if (std::strcmp(env, "avx2") == 0) return Backend::kAvx2;
  return Backend::kAuto;
}

Backend resolve() {
  Backend want = g_requested.load(std::memory_order_relaxed);
  if (want == Backend::kAuto) want = env_backend();
  if (want == Backend::kAvx2) {
    if (!avx2_usable())
      throw DomainError("kernel backend 'avx2' requested but not usable on this host");
    return Backend::kAvx2;
  }
  if (want == Backend::kScalar) return Backend::kScalar;
  return avx2_usable() ? Backend::kAvx2 : Backend::kScalar;
}

}  // namespace

bool avx2_compiled() {
#ifdef GEOBEAM_HAVE_AVX2
  return true;
#else
  return false;
#endif
}

bool avx2_usable() { return avx2_compiled() && cpu_has_avx2(); }

void set_backend(Backend backend) {
  if (backend == Backend::kAvx2 && !avx2_usable())
    throw DomainError("kernel backend 'avx2' requested but not usable on this host");
  g_requested.store(backend, std::memory_order_relaxed);
}

Backend requested_backend() { return g_requested.load(std::memory_order_relaxed); }

const char* active_backend_name() {
  return resolve() == Backend::kAvx2 ? "avx2" : "scalar";
}

void beam_gain_batch(const double* dx, const double* dy, double* gain,
                     std::size_t n, double m) {
#ifdef GEOBEAM_HAVE_AVX2
  if (resolve() == Backend::kAvx2) {
    detail::beam_gain_batch_avx2(dx, dy, gain, n, m);
    return;
  }
#endif
  detail::beam_gain_batch_scalar(dx, dy, gain, n, m);
}

void rate_log1p_batch(const double* gain, double* out, std::size_t n,
                      double scale) {
#ifdef GEOBEAM_HAVE_AVX2
  if (resolve() == Backend::kAvx2) {
    detail::rate_log1p_batch_avx2(gain, out, n, scale);
    return;
  }
#endif
  detail::rate_log1p_batch_scalar(gain, out, n, scale);
}

}  // namespace geobeam::kernels
