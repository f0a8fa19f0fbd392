#include <algorithm>
#include <random>

#include "doctest.h"
#include "glsw/gls.hpp"
#include "glsw/quiver.hpp"

using namespace glsw;

namespace {

const char* kTypes[] = {"A1", "A3", "B2", "C2", "D4", "BC1", "BC2", "BD3", "CD3", "F41", "F42", "G21", "G23"};

}  // namespace

TEST_CASE("BC1 algebra has dimension 9") {
    auto h = gls_presentation(catalog_by_name("BC1").quiver);
    CHECK(h.algebra->dimension() == 9);
    CHECK(h.loop[0] >= 0);
    CHECK(h.loop[1] == -1);
    CHECK(projective(h.algebra, 0).dimension_vector() == DimVector{4, 0});
    CHECK(projective(h.algebra, 1).dimension_vector() == DimVector{4, 1});
}

TEST_CASE("Kronecker path algebra") {
    std::vector<Arrow> arrows{{0, 1, "a", 1}, {0, 1, "b", 1}};
    auto alg = std::make_shared<BoundQuiverAlgebra>(2, arrows, std::vector<Relation>{});
    CHECK(alg->dimension() == 4);
    CHECK(alg->corner(1, 0).size() == 2);
    CHECK(alg->graded_dimensions() == std::vector<long>{2, 2});
}

TEST_CASE("truncated polynomial ring") {
    std::vector<Arrow> arrows{{0, 0, "x", 1}};
    Relation cube{0, 0, {{mpq_class(1), {0, 0, 0}}}, "x^3"};
    auto alg = std::make_shared<BoundQuiverAlgebra>(1, arrows, std::vector<Relation>{cube});
    CHECK(alg->dimension() == 3);
    auto x = alg->path_element({0}, 0);
    CHECK(alg->multiply(x, alg->multiply(x, x)).empty());
}

TEST_CASE("property: GLS projectives and injectives are locally free and exhaust the algebra") {
    for (const char* name : kTypes) {
        CAPTURE(name);
        auto h = gls_presentation(catalog_by_name(name).quiver);
        size_t total = 0;
        for (int i = 0; i < static_cast<int>(h.quiver.size()); ++i) {
            auto p = projective(h.algebra, i);
            auto inj = injective(h.algebra, i);
            total += p.total_dim();
            CHECK(validate(p).empty());
            CHECK(validate(inj).empty());
            CHECK(is_locally_free(p).locally_free);
            CHECK(is_locally_free(inj).locally_free);
            auto e = generalized_simple(h, i);
            CHECK(is_locally_free(e).rank == unit_vector(h.quiver.size(), i));
            CHECK(e.total_dim() == static_cast<size_t>(h.quiver.c(i)));
        }
        CHECK(total == h.algebra->dimension());
    }
}

TEST_CASE("opposite algebra is an involution") {
    auto h = gls_presentation(catalog_by_name("C2").quiver);
    auto op = h.algebra->opposite();
    CHECK(op->dimension() == h.algebra->dimension());
    CHECK(op->opposite() == h.algebra);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(op->corner(static_cast<int>(i), static_cast<int>(j)).size() ==
                  h.algebra->corner(static_cast<int>(j), static_cast<int>(i)).size());
}

TEST_CASE("inhomogeneous relations are rejected") {
    std::vector<Arrow> arrows{{0, 0, "x", 1}};
    Relation bad{0, 0, {{mpq_class(1), {0, 0}}, {mpq_class(1), {0}}}, "mixed"};
    CHECK_THROWS_AS(BoundQuiverAlgebra(1, arrows, {bad}), std::invalid_argument);
}

TEST_CASE("property: diagonal corners have dimension c_i and the graded basis is finite") {
    for (const auto& family : catalog_families()) {
        auto [lo, hi] = rank_range(family);
        for (int r = lo; r <= std::min(hi, 8); ++r) {
            auto h = gls_presentation(catalog_affine(family, r).quiver);
            CAPTURE(h.quiver.name());
            for (int i = 0; i < static_cast<int>(h.quiver.size()); ++i)
                CHECK(h.algebra->corner(i, i).size() == static_cast<size_t>(h.quiver.c(i)));
            auto graded = h.algebra->graded_dimensions();
            REQUIRE_FALSE(graded.empty());
            CHECK(graded.back() > 0);
            long total = 0;
            for (long x : graded) total += x;
            CHECK(total == static_cast<long>(h.algebra->dimension()));
        }
    }
}

TEST_CASE("property: multiplication is associative on 100 random triples") {
    std::mt19937_64 rng(8);
    for (const char* name : {"BC1", "C2", "G21"}) {
        auto h = gls_presentation(catalog_by_name(name).quiver);
        const auto& alg = *h.algebra;
        auto random_element = [&]() {
            AlgElem x;
            for (size_t b = 0; b < alg.dimension(); ++b)
                if (rng() % 3 == 0) x.push_back({b, mpq_class(static_cast<long>(rng() % 7) - 3)});
            x.erase(std::remove_if(x.begin(), x.end(), [](const auto& t) { return t.second == 0; }), x.end());
            return x;
        };
        for (int t = 0; t < 100; ++t) {
            auto x = random_element(), y = random_element(), z = random_element();
            CHECK(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)));
        }
    }
}
