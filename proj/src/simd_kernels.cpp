#include "glsw/simd.hpp"

#include <atomic>

namespace glsw::simd {

void axpy_mod_scalar(uint32_t* y, const uint32_t* x, uint32_t f, uint32_t p, size_t n) {
    for (size_t j = 0; j < n; ++j)
        y[j] = static_cast<uint32_t>((y[j] + static_cast<uint64_t>(f) * x[j]) % p);
}

void scale_mod_scalar(uint32_t* x, uint32_t f, uint32_t p, size_t n) {
    for (size_t j = 0; j < n; ++j) x[j] = static_cast<uint32_t>(static_cast<uint64_t>(f) * x[j] % p);
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

namespace {
std::atomic<Isa>& isa_slot() {
    static std::atomic<Isa> isa{cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar};
    return isa;
}
}  // namespace

Isa active_isa() { return isa_slot().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
    if (isa == Isa::Avx2 && !cpu_has_avx2()) isa = Isa::Scalar;
    isa_slot().store(isa, std::memory_order_relaxed);
}

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t f, uint32_t p, size_t n) {
    if (f == 0 || n == 0) return;
    if (active_isa() == Isa::Avx2 && n >= 16)
        axpy_mod_avx2(y, x, f, p, n);
    else
        axpy_mod_scalar(y, x, f, p, n);
}

void scale_mod(uint32_t* x, uint32_t f, uint32_t p, size_t n) {
    if (active_isa() == Isa::Avx2 && n >= 16)
        scale_mod_avx2(x, f, p, n);
    else
        scale_mod_scalar(x, f, p, n);
}

}  // namespace glsw::simd
