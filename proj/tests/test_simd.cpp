#include <random>

#include "doctest.h"
#include "glsw/linear.hpp"
#include "glsw/simd.hpp"

using namespace glsw;

TEST_CASE("AVX2 row kernels agree with the scalar reference") {
    if (!simd::cpu_has_avx2()) {
        MESSAGE("AVX2 unavailable; scalar kernels only");
        return;
    }
    std::mt19937_64 rng(1);
    for (uint32_t p : {2u, 3u, 65521u, 1000003u, 2147483647u}) {
        for (size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 133u}) {
            std::vector<uint32_t> x(n), y(n);
            for (auto& v : x) v = static_cast<uint32_t>(rng() % p);
            for (auto& v : y) v = static_cast<uint32_t>(rng() % p);
            uint32_t f = static_cast<uint32_t>(rng() % p);
            auto ys = y, yv = y, xs = x, xv = x;
            simd::axpy_mod_scalar(ys.data(), x.data(), f, p, n);
            simd::axpy_mod_avx2(yv.data(), x.data(), f, p, n);
            CHECK(ys == yv);
            simd::scale_mod_scalar(xs.data(), f, p, n);
            simd::scale_mod_avx2(xv.data(), f, p, n);
            CHECK(xs == xv);
        }
    }
}

TEST_CASE("elimination is independent of the dispatched kernel") {
    std::mt19937_64 rng(9);
    Field f = Field::prime(1000003u);
    Matrix a(f, 40, 50);
    for (size_t i = 0; i < 40; ++i)
        for (size_t j = 0; j < 50; ++j) a.set_int(i, j, static_cast<long>(rng() % 1000003u));
    auto before = simd::active_isa();
    simd::set_isa(simd::Isa::Scalar);
    auto ref = row_reduce(a);
    auto prod_ref = a * a.transpose();
    simd::set_isa(simd::Isa::Avx2);
    auto vec = row_reduce(a);
    auto prod_vec = a * a.transpose();
    simd::set_isa(before);
    CHECK(ref.rref == vec.rref);
    CHECK(ref.pivots == vec.pivots);
    CHECK(prod_ref == prod_vec);
}
