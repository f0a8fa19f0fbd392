// Built with -mavx2; only reached after the runtime CPU check.
#include <immintrin.h>

#include "glsw/simd.hpp"

namespace glsw::simd {

namespace {

// Shoup multiplication: with fp = floor(f * 2^32 / p) and x < p,
// q = hi32(x * fp) underestimates x*f/p by at most one, so x*f - q*p lies in [0, 2p).
inline __m256i mulmod_shoup(__m256i vx, __m256i vf, __m256i vfp, __m256i vp) {
    __m256i even = _mm256_mul_epu32(vx, vfp);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(vx, 32), vfp);
    __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(vx, vf), _mm256_mullo_epi32(q, vp));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

inline uint32_t shoup_precompute(uint32_t f, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(f) << 32) / p);
}

}  // namespace

void axpy_mod_avx2(uint32_t* y, const uint32_t* x, uint32_t f, uint32_t p, size_t n) {
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
    const __m256i vfp = _mm256_set1_epi32(static_cast<int>(shoup_precompute(f, p)));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
        __m256i t = _mm256_add_epi32(vy, mulmod_shoup(vx, vf, vfp, vp));
        t = _mm256_min_epu32(t, _mm256_sub_epi32(t, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + j), t);
    }
    axpy_mod_scalar(y + j, x + j, f, p, n - j);
}

void scale_mod_avx2(uint32_t* x, uint32_t f, uint32_t p, size_t n) {
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
    const __m256i vfp = _mm256_set1_epi32(static_cast<int>(shoup_precompute(f, p)));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + j), mulmod_shoup(vx, vf, vfp, vp));
    }
    scale_mod_scalar(x + j, f, p, n - j);
}

}  // namespace glsw::simd
