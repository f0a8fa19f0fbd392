#pragma once

#include <cstddef>
#include <cstdint>

// Prime-field row kernels used by elimination and multiplication.
// y[j] <- (y[j] + f * x[j]) mod p, with all inputs already reduced and p < 2^31.
namespace glsw::simd {

enum class Isa { Scalar, Avx2 };

void axpy_mod_scalar(uint32_t* y, const uint32_t* x, uint32_t f, uint32_t p, size_t n);
void axpy_mod_avx2(uint32_t* y, const uint32_t* x, uint32_t f, uint32_t p, size_t n);

// x[j] <- f * x[j] mod p
void scale_mod_scalar(uint32_t* x, uint32_t f, uint32_t p, size_t n);
void scale_mod_avx2(uint32_t* x, uint32_t f, uint32_t p, size_t n);

bool cpu_has_avx2();
Isa active_isa();
// Force a kernel family (tests, benchmarking); Avx2 is ignored when unsupported.
void set_isa(Isa isa);

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t f, uint32_t p, size_t n);
void scale_mod(uint32_t* x, uint32_t f, uint32_t p, size_t n);

}  // namespace glsw::simd
