// AVX2+FMA variants of the batch kernels. Compiled only when the toolchain
// supports -mavx2 -mfma; runtime selection lives in kernels_dispatch.cpp.

#ifdef GEOBEAM_HAVE_AVX2

#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "geobeam/kernels.hpp"

namespace geobeam::kernels::detail {

namespace {

// ---- vector sin ------------------------------------------------------------
// Two-term Cody-Waite reduction by pi/2 (fdlibm constants), then the cephes
// minimax polynomials on [-pi/4, pi/4]. Sized for |x| <= ~pi * 5e5; larger
// arguments take the scalar path (see beam_gain_batch_avx2).

const __m256d kTwoOverPi = _mm256_set1_pd(6.36619772367581382433e-01);
const __m256d kPio2Hi = _mm256_set1_pd(1.57079632673412561417e+00);
const __m256d kPio2Lo = _mm256_set1_pd(6.07710050650619224932e-11);

const __m256d kSinC0 = _mm256_set1_pd(1.58962301576546568060e-10);
const __m256d kSinC1 = _mm256_set1_pd(-2.50507477628578072866e-8);
const __m256d kSinC2 = _mm256_set1_pd(2.75573136213857245213e-6);
const __m256d kSinC3 = _mm256_set1_pd(-1.98412698295895385996e-4);
const __m256d kSinC4 = _mm256_set1_pd(8.33333333332211858878e-3);
const __m256d kSinC5 = _mm256_set1_pd(-1.66666666666666307295e-1);

const __m256d kCosC0 = _mm256_set1_pd(-1.13585365213876817300e-11);
const __m256d kCosC1 = _mm256_set1_pd(2.08757008419747316778e-9);
const __m256d kCosC2 = _mm256_set1_pd(-2.75573141792967388112e-7);
const __m256d kCosC3 = _mm256_set1_pd(2.48015872888517179954e-5);
const __m256d kCosC4 = _mm256_set1_pd(-1.38888888888730564116e-3);
const __m256d kCosC5 = _mm256_set1_pd(4.16666666666665929218e-2);

inline __m256d vsin(__m256d x) {
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, kTwoOverPi),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, kPio2Hi, x);
  r = _mm256_fnmadd_pd(k, kPio2Lo, r);

  const __m256d z = _mm256_mul_pd(r, r);
  __m256d ps = kSinC0;
  ps = _mm256_fmadd_pd(ps, z, kSinC1);
  ps = _mm256_fmadd_pd(ps, z, kSinC2);
  ps = _mm256_fmadd_pd(ps, z, kSinC3);
  ps = _mm256_fmadd_pd(ps, z, kSinC4);
  ps = _mm256_fmadd_pd(ps, z, kSinC5);
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(ps, z), r, r);

  __m256d pc = kCosC0;
  pc = _mm256_fmadd_pd(pc, z, kCosC1);
  pc = _mm256_fmadd_pd(pc, z, kCosC2);
  pc = _mm256_fmadd_pd(pc, z, kCosC3);
  pc = _mm256_fmadd_pd(pc, z, kCosC4);
  pc = _mm256_fmadd_pd(pc, z, kCosC5);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d cos_r = _mm256_fnmadd_pd(z, half, one);
  cos_r = _mm256_fmadd_pd(_mm256_mul_pd(pc, z), z, cos_r);

  // Quadrant q = k mod 4: odd -> cos, q >= 2 -> sign flip.
  const __m128i ki = _mm256_cvtpd_epi32(k);
  const __m256i kq = _mm256_cvtepi32_epi64(ki);
  const __m256i one_i = _mm256_set1_epi64x(1);
  const __m256i two_i = _mm256_set1_epi64x(2);
  const __m256d use_cos = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(kq, one_i), one_i));
  const __m256d flip = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(kq, two_i), two_i));

  __m256d res = _mm256_blendv_pd(sin_r, cos_r, use_cos);
  const __m256d neg_zero = _mm256_set1_pd(-0.0);
  return _mm256_xor_pd(res, _mm256_and_pd(flip, neg_zero));
}

// ---- vector log1p ----------------------------------------------------------
// log(w) by mantissa/exponent split and the atanh series in s = (m-1)/(m+1),
// plus the usual (y - (w-1))/w correction for log1p. Inputs here are y >= 0.

const __m256d kLn2Hi = _mm256_set1_pd(6.93147180369123816490e-01);
const __m256d kLn2Lo = _mm256_set1_pd(1.90821492927058770002e-10);
const __m256d kSqrt2 = _mm256_set1_pd(1.41421356237309514547);

inline __m256d vlog1p_nonneg(__m256d y) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d w = _mm256_add_pd(one, y);

  const __m256i bits = _mm256_castpd_si256(w);
  const __m256i exp_mask = _mm256_set1_epi64x(0x7FF0000000000000ll);
  const __m256i man_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000ll);
  __m256i e_i = _mm256_srli_epi64(_mm256_and_si256(bits, exp_mask), 52);
  e_i = _mm256_sub_epi64(e_i, _mm256_set1_epi64x(1023));
  __m256d man = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, man_mask), one_bits));

  // Fold mantissa into [sqrt(1/2), sqrt(2)).
  const __m256d too_big = _mm256_cmp_pd(man, kSqrt2, _CMP_GT_OQ);
  man = _mm256_blendv_pd(man, _mm256_mul_pd(man, _mm256_set1_pd(0.5)), too_big);
  const __m256i e_adj = _mm256_and_si256(_mm256_castpd_si256(too_big),
                                         _mm256_set1_epi64x(1));
  e_i = _mm256_add_epi64(e_i, e_adj);

  // int64 -> double for |e| < 2^51 via the magic-number trick.
  const __m256i magic = _mm256_set1_epi64x(0x4338000000000000ll);
  const __m256d e_d = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_add_epi64(e_i, magic)),
      _mm256_castsi256_pd(magic));

  const __m256d s = _mm256_div_pd(_mm256_sub_pd(man, one), _mm256_add_pd(man, one));
  const __m256d z = _mm256_mul_pd(s, s);
  // atanh series: log(m) = 2s * (1 + z/3 + z^2/5 + ... + z^10/21)
  __m256d poly = _mm256_set1_pd(1.0 / 21.0);
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 19.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 17.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 15.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 13.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 11.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 9.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 7.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 5.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 3.0));
  poly = _mm256_fmadd_pd(poly, z, one);
  const __m256d log_m = _mm256_mul_pd(_mm256_add_pd(s, s), poly);

  __m256d log_w = _mm256_fmadd_pd(e_d, kLn2Lo, log_m);
  log_w = _mm256_fmadd_pd(e_d, kLn2Hi, log_w);

  // log1p correction: (y - (w - 1)) / w recovers the bits 1+y dropped.
  const __m256d corr = _mm256_div_pd(_mm256_sub_pd(y, _mm256_sub_pd(w, one)), w);
  return _mm256_add_pd(log_w, corr);
}

inline __m256d axis_factor(__m256d delta, double m) {
  const __m256d half_pi = _mm256_set1_pd(0.5 * M_PI);
  const __m256d half_pi_m = _mm256_set1_pd(0.5 * M_PI * m);
  const __m256d den = vsin(_mm256_mul_pd(half_pi, delta));
  const __m256d num = vsin(_mm256_mul_pd(half_pi_m, delta));

  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
  const __m256d singular = _mm256_cmp_pd(_mm256_and_pd(den, abs_mask),
                                         _mm256_set1_pd(kSingularEps), _CMP_LT_OQ);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d safe_den = _mm256_blendv_pd(den, one, singular);
  const __m256d ratio = _mm256_div_pd(num, _mm256_mul_pd(_mm256_set1_pd(m), safe_den));
  __m256d f = _mm256_mul_pd(ratio, ratio);
  f = _mm256_min_pd(f, one);
  return _mm256_blendv_pd(f, one, singular);
}

}  // namespace

void sin_batch_avx2(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, vsin(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = std::sin(x[i]);
}

void log1p_scaled_batch_avx2(const double* y, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, vlog1p_nonneg(_mm256_loadu_pd(y + i)));
  for (; i < n; ++i) out[i] = std::log1p(y[i]);
}

void beam_gain_batch_avx2(const double* dx, const double* dy, double* gain,
                          std::size_t n, double m) {
  if (m > kAvx2MaxM) {  // out of the vector sin's reduction range
    beam_gain_batch_scalar(dx, dy, gain, n, m);
    return;
  }
  const __m256d clamp = _mm256_set1_pd(kGainClamp);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d fx = axis_factor(_mm256_loadu_pd(dx + i), m);
    const __m256d fy = axis_factor(_mm256_loadu_pd(dy + i), m);
    __m256d f = _mm256_mul_pd(fx, fy);
    f = _mm256_blendv_pd(f, zero, _mm256_cmp_pd(f, clamp, _CMP_LT_OQ));
    _mm256_storeu_pd(gain + i, f);
  }
  if (i < n) beam_gain_batch_scalar(dx + i, dy + i, gain + i, n - i, m);
}

void rate_log1p_batch_avx2(const double* gain, double* out, std::size_t n,
                           double scale) {
  const __m256d vs = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i,
                     vlog1p_nonneg(_mm256_mul_pd(vs, _mm256_loadu_pd(gain + i))));
  for (; i < n; ++i) out[i] = std::log1p(scale * gain[i]);
}

}  // namespace geobeam::kernels::detail

#endif  // GEOBEAM_HAVE_AVX2
