#include <random>

#include "doctest.h"
#include "glsw/linear.hpp"
#include "glsw/polynomial.hpp"

using namespace glsw;

namespace {

Matrix random_matrix(Field f, size_t r, size_t c, std::mt19937_64& rng, long box = 9) {
    std::uniform_int_distribution<long> dist(-box, box);
    Matrix m(f, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set_int(i, j, dist(rng));
    return m;
}

}  // namespace

TEST_CASE("prime field scalars") {
    Field f = Field::prime(7);
    Scalar a(f, 3), b(f, -2);
    CHECK((a + b).residue() == 1);
    CHECK((a * b).residue() == 1);
    CHECK((a / b).residue() == 2);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_pow(3, 6, 7) == 1);
    CHECK(is_prime_u32(2147483647u));
    CHECK_FALSE(is_prime_u32(91));
    CHECK_THROWS_AS(Scalar(f, 1) + Scalar(Field::prime(5), 1), FieldMismatch);
    CHECK_THROWS(Field::prime(8));
}

TEST_CASE("rational inverse of the 3x3 Hilbert matrix") {
    Field q;
    Matrix h(q, 3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) h.set(i, j, Scalar(q, mpq_class(1, static_cast<long>(i + j + 1))));
    auto inv = inverse(h);
    REQUIRE(inv);
    CHECK(*inv == Matrix::from_ints(q, 3, 3, {9, -36, 30, -36, 192, -180, 30, -180, 180}));
}

TEST_CASE("rank, kernel and solve") {
    Field q;
    auto m = Matrix::from_ints(q, 3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0});
    CHECK(rank(m) == 2);
    auto k = kernel_matrix(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    auto rhs = m.apply({Scalar(q, 1), Scalar(q, 0), Scalar(q, -1), Scalar(q, 2)});
    auto x = solve(m, rhs);
    REQUIRE(x);
    CHECK(m.apply(*x) == rhs);
    CHECK_FALSE(solve(m, {Scalar(q, 1), Scalar(q, 0), Scalar(q, 0)}));
    auto e = row_reduce(m);
    CHECK(e.pivots == std::vector<size_t>{0, 1});
}

TEST_CASE("property: rank-nullity and transpose rank over Q and F_p") {
    std::mt19937_64 rng(42);
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2147483647u)}) {
        for (int trial = 0; trial < 30; ++trial) {
            size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
            auto a = random_matrix(f, r, c, rng, f.is_prime() ? 2 : 9);
            // low rank product half of the time
            if (trial % 2) a = random_matrix(f, r, 2, rng) * random_matrix(f, 2, c, rng);
            size_t rk = rank(a);
            CHECK(rk == rank(a.transpose()));
            auto k = kernel_matrix(a);
            CHECK(rk + k.cols() == c);
            if (k.cols()) CHECK((a * k).is_zero());
            if (r == c && rk == r) CHECK(*inverse(a) * a == Matrix::identity(f, r));
        }
    }
}

TEST_CASE("property: reduction mod p never raises the rank") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_matrix(Field::rationals(), 4, 5, rng, 3);
        CHECK(rank(a.reduce_to(Field::prime(3))) <= rank(a));
    }
}

TEST_CASE("nilpotent Jordan profile") {
    Field q;
    Matrix n(q, 6, 6);
    n.set_int(1, 0, 1);
    n.set_int(2, 1, 1);
    n.set_int(4, 3, 1);
    auto profile = nilpotent_block_profile(n);
    std::sort(profile.begin(), profile.end());
    CHECK(profile == std::vector<size_t>{1, 2, 3});
}

TEST_CASE("minimal polynomial and factorization over F_p") {
    Field f = Field::prime(5);
    Matrix n(f, 4, 4);
    for (size_t i = 0; i + 1 < 4; ++i) n.set_int(i + 1, i, 1);
    auto mp = poly_to_fp(minimal_polynomial(n));
    CHECK(mp == PolyFp{0, 0, 0, 0, 1});
    // x^2 + 1 is irreducible mod 3 and splits mod 5
    CHECK(factor_primefield({1, 0, 1}, 3).size() == 1);
    CHECK(factor_primefield({1, 0, 1}, 5).size() == 2);
    // (x - 1)^2 (x + 1) mod 7
    auto f3 = fp::mul(fp::mul({6, 1}, {6, 1}, 7), {1, 1}, 7);
    auto fac = factor_primefield(f3, 7);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].second + fac[1].second == 3);
}

TEST_CASE("property: Cayley-Hamilton style annihilation") {
    std::mt19937_64 rng(3);
    for (Field f : {Field::rationals(), Field::prime(11)}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_matrix(f, 5, 5, rng, 3);
            CHECK(poly_eval(minimal_polynomial(a), a).is_zero());
        }
    }
}

TEST_CASE("property: rank-nullity and consistent solves over F_p, 100 trials") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        Field f = Field::prime(trial % 2 ? 3 : 65521);
        size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        auto m = random_matrix(f, r, c, rng, 2);
        CHECK(rank(m) + kernel_basis(m).size() == c);
        Vec x(c, Scalar(f));
        for (auto& s : x) s = Scalar(f, static_cast<long>(rng() % 7));
        auto b = m.apply(x);
        auto y = solve(m, b);
        REQUIRE(y);
        CHECK(m.apply(*y) == b);
    }
}

TEST_CASE("property: nilpotent block profile against kernel dimensions of powers") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Field f = Field::prime(5);
        size_t n = 1 + rng() % 8;
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (rng() % 3) m.set_int(i, j, static_cast<long>(rng() % 5));
        // blocks of size >= k: dim ker N^k - dim ker N^(k-1)
        std::vector<size_t> oracle;
        size_t prev = 0;
        std::vector<size_t> at_least(n + 2, 0);
        for (size_t k = 1; k <= n; ++k) {
            size_t ker = n - rank(m.power(static_cast<unsigned>(k)));
            at_least[k] = ker - prev;
            prev = ker;
        }
        for (size_t k = 1; k <= n; ++k)
            for (size_t c = 0; c < at_least[k] - at_least[k + 1]; ++c) oracle.push_back(k);
        auto profile = nilpotent_block_profile(m);
        std::sort(profile.begin(), profile.end());
        CHECK(profile == oracle);
    }
}

TEST_CASE("property: factorizations multiply back") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        uint32_t p = std::vector<uint32_t>{2, 3, 5, 7}[trial % 4];
        size_t deg = 1 + rng() % 10;
        PolyFp f(deg + 1);
        for (auto& c : f) c = static_cast<uint32_t>(rng() % p);
        f[deg] = 1 + static_cast<uint32_t>(rng() % (p - 1));
        auto fac = factor_primefield(f, p);
        PolyFp prod{1};
        for (const auto& [g, e] : fac) prod = fp::mul(prod, fp::pow(g, static_cast<unsigned>(e), p), p);
        CHECK(prod == fp::monic(f, p));
    }
}
