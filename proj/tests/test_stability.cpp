#include "doctest.h"
#include "glsw/families.hpp"
#include "glsw/homological.hpp"
#include "glsw/stability.hpp"

using namespace glsw;

TEST_CASE("defect weight of BC1") {
    auto h = bc1::algebra();
    auto theta = defect_weight(h.quiver);
    CHECK(theta.coords == std::vector<mpq_class>{-1, 2});
    CHECK(theta(projective(h.algebra, 0).dimension_vector()) == -4);
    CHECK(theta({4, 2}) == 0);
}

TEST_CASE("submodule lattice of a uniserial module is a chain") {
    auto h = bc1::algebra();
    auto e = generalized_simple(h, 0, Field::prime(2));
    auto lattice = submodules(e);
    CHECK(lattice.complete);
    CHECK(lattice.members.size() == 5);  // 0 and four radical layers
    auto n = bc1::family_member(h, ProjectivePoint::affine(1), Field::prime(3));
    auto big = submodules(n);
    CHECK(big.complete);
    CHECK(big.members.size() == 11);
}

TEST_CASE("defect stability over small prime fields") {
    auto h = bc1::algebra();
    auto theta = defect_weight(h.quiver);
    for (uint32_t p : {3u, 5u}) {
        Field f = Field::prime(p);
        CHECK(check_stability_fp(bc1::v_bar_infinity(h, f), theta).verdict == StabilityVerdict::Stable);
        CHECK(check_stability_fp(bc1::family_member(h, ProjectivePoint::affine(2), f), theta).verdict ==
              StabilityVerdict::Stable);
        auto inf = check_stability_fp(bc1::family_member(h, ProjectivePoint::infinity(), f), theta);
        CHECK(inf.verdict == StabilityVerdict::Semistable);
        CHECK(inf.witness_dim == DimVector{2, 1});
        auto p1 = check_stability_fp(projective(h.algebra, 0, f), theta);
        CHECK(p1.verdict == StabilityVerdict::NotSemistable);
        CHECK_FALSE(p1.candidate);
    }
}

TEST_CASE("property: stability agrees with the defect inequality on submodules") {
    // semistable iff 2 dim U(2) <= dim U(1) for every submodule
    auto h = bc1::algebra();
    auto theta = defect_weight(h.quiver);
    Field f = Field::prime(3);
    for (long l = 0; l <= 2; ++l) {
        auto v = bc1::family_member(h, ProjectivePoint::affine(l), f);
        auto lattice = submodules(v);
        bool inequality = true;
        for (const auto& m : lattice.members) inequality = inequality && 2 * m[1].cols() <= m[0].cols();
        CHECK(is_semistable(v, theta) == inequality);
    }
}

TEST_CASE("rational modules are reduced modulo the configured primes") {
    auto h = bc1::algebra();
    auto r = check_stability(bc1::family_member(h, ProjectivePoint::affine(3)), defect_weight(h.quiver));
    CHECK(r.semistable());
    CHECK(r.per_field.size() == 3);
    CHECK(r.label == "finite-field certified");
}

TEST_CASE("enumeration cap marks the lattice incomplete") {
    auto h = bc1::algebra();
    StabilityConfig tight;
    tight.enum_cap = 2;
    auto lattice = submodules(bc1::family_member(h, ProjectivePoint::affine(1), Field::prime(3)), tight);
    CHECK_FALSE(lattice.complete);
    tight = {};
    tight.max_dim = 3;
    auto r = check_stability_fp(bc1::family_member(h, ProjectivePoint::affine(1), Field::prime(3)),
                                defect_weight(h.quiver), tight);
    CHECK(r.verdict == StabilityVerdict::Unknown);
}

TEST_CASE("regular tau-rigid quasi-simples in C2") {
    auto h = gls_presentation(catalog_by_name("C2").quiver);
    for (RankVector v : {RankVector{0, 1, 0}, RankVector{1, 1, 1}}) {
        auto r = regular_tau_rigid_check(h, v, 3);
        CHECK(r.passed());
        CHECK(r.phi_period == 2);
    }
    auto bad = regular_tau_rigid_check(h, {1, 0, 0}, 3);
    CHECK_FALSE(bad.rejection.empty());
}

TEST_CASE("lf-class weights") {
    auto q = catalog_by_name("BC1").quiver;
    auto w = weight_from_lf_class(q, {1, 2});
    CHECK(w.coords == defect_weight(q).coords);
}

TEST_CASE("property: witnesses are sound and stability implies semistability") {
    auto h = bc1::algebra();
    auto theta = defect_weight(h.quiver);
    Field f = Field::prime(3);
    std::vector<Representation> modules{bc1::v_bar_infinity(h, f), projective(h.algebra, 1, f),
                                        injective(h.algebra, 1, f), generalized_simple(h, 0, f)};
    for (const auto& l : lambda_grid()) modules.push_back(bc1::family_member(h, l, f));
    modules.push_back(direct_sum(modules[0], modules[4]));
    for (const auto& v : modules) {
        auto r = check_stability_fp(v, theta);
        if (r.verdict == StabilityVerdict::Stable) CHECK(is_semistable(v, theta));
        if (!r.witness) continue;
        auto sub = subrepresentation(v, *r.witness);
        CHECK(validate(sub).empty());
        CHECK(sub.dimension_vector() == r.witness_dim);
        CHECK(theta(r.witness_dim) == r.witness_value);
        CHECK(sub.total_dim() > 0);
        CHECK(sub.total_dim() < v.total_dim());
        if (r.verdict == StabilityVerdict::NotSemistable && r.candidate) CHECK(r.witness_value > 0);
        if (r.verdict == StabilityVerdict::Semistable) CHECK(r.witness_value == 0);
    }
}

TEST_CASE("bricks of dimension (4,2) over F3 have a loop of maximal rank") {
    auto h = bc1::algebra();
    Field f = Field::prime(3);
    // loop up to conjugacy: partitions of 4
    const std::vector<std::vector<size_t>> partitions{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    size_t bricks = 0;
    for (const auto& part : partitions) {
        Matrix loop(f, 4, 4);
        size_t start = 0;
        for (size_t block : part) {
            for (size_t i = 0; i + 1 < block; ++i) loop.set_int(start + i + 1, start + i, 1);
            start += block;
        }
        for (uint32_t code = 0; code < 6561; ++code) {
            Matrix arrow(f, 4, 2);
            uint32_t c = code;
            for (size_t k = 0; k < 8; ++k, c /= 3) arrow.set(k / 2, k % 2, Scalar::residue(f, c % 3));
            std::vector<Matrix> arrows(h.algebra->arrows().size());
            arrows[h.loop[0]] = loop;
            arrows[h.edge_arrows[0][0]] = arrow;
            Representation v(h.algebra, f, {4, 2}, arrows);
            if (!validate(v).empty() || end_dim(v) != 1) continue;
            ++bricks;
            CHECK(rank(loop) == 3);
        }
    }
    CHECK(bricks > 0);
}
