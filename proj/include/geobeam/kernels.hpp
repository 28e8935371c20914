#pragma once

#include <cstddef>

namespace geobeam::kernels {

// Batch kernels for the Monte Carlo inner loops. The scalar versions are the
// reference semantics; SIMD variants must match them to ~1e-12 absolute on
// gains in [0,1] (they differ only through the vector sin/log evaluation).

enum class Backend { kAuto, kScalar, kAvx2 };

// gain[i] = fejer_axis(dcos_x[i]) * fejer_axis(dcos_y[i]) for an m x m array,
// where dcos_* are direction-cosine differences between user and beam center.
void beam_gain_batch(const double* dcos_x, const double* dcos_y, double* gain,
                     std::size_t n, double m);

// out[i] = log1p(scale * gain[i]); scale = P * M^2 in the rate estimator.
void rate_log1p_batch(const double* gain, double* out, std::size_t n,
                      double scale);

// Backend selection. kAuto picks AVX2 when the CPU and build support it.
// The GEOBEAM_KERNEL environment variable (auto|scalar|avx2) is honored at
// first use; set_backend() takes precedence over it.
void set_backend(Backend backend);
Backend requested_backend();
const char* active_backend_name();
bool avx2_compiled();
bool avx2_usable();

// One Fejer-kernel axis factor in [0,1], shared with the closed-form scalar
// path. |sin(pi*delta/2)| below kSingularEps takes the removable-singularity
// limit (unnormalized m^2, i.e. 1 after normalization).
double fejer_axis_factor(double delta, double m);

inline constexpr double kSingularEps = 1e-12;
inline constexpr double kGainClamp = 1e-300;
// Above this per-axis size the AVX2 path defers to scalar libm: the two-term
// Cody-Waite reduction in the vector sin is sized for |x| <= pi*kAvx2MaxM.
inline constexpr double kAvx2MaxM = 5e5;

namespace detail {
void beam_gain_batch_scalar(const double* dx, const double* dy, double* gain,
                            std::size_t n, double m);
void rate_log1p_batch_scalar(const double* gain, double* out, std::size_t n,
                             double scale);
#ifdef GEOBEAM_HAVE_AVX2
void beam_gain_batch_avx2(const double* dx, const double* dy, double* gain,
                          std::size_t n, double m);
void rate_log1p_batch_avx2(const double* gain, double* out, std::size_t n,
                           double scale);
// Exposed for accuracy tests.
void sin_batch_avx2(const double* x, double* out, std::size_t n);
void log1p_scaled_batch_avx2(const double* y, double* out, std::size_t n);
#endif
}  // namespace detail

}  // namespace geobeam::kernels
