#include <algorithm>
#include <random>

#include "doctest.h"
#include "glsw/decomposition.hpp"
#include "glsw/homological.hpp"

using namespace glsw;

TEST_CASE("Kac decomposition on the four-subspace quiver") {
    auto d4 = catalog_by_name("D4");
    auto eta = kac_decomposition_unfolded(d4.quiver, d4.eta, 1);
    CHECK(eta.null_multiplicity == 1);
    CHECK(eta.summands == RootMultiset{{d4.eta, 1}});
    auto two = kac_decomposition_unfolded(d4.quiver, RankVector(5, 2), 1);
    CHECK(two.null_multiplicity == 0);
    CHECK(two.summands == RootMultiset{{RankVector(5, 1), 2}});
}

TEST_CASE("folded decompositions in BC1") {
    auto q = catalog_by_name("BC1").quiver;
    auto a = folded_decomposition(q, {2, 4}, 5);
    CHECK(a.m == 2);
    CHECK(a.w == RankVector{0, 0});
    CHECK(a.rotation_invariant);
    auto b = folded_decomposition(q, {3, 5}, 5);
    CHECK(b.m == 0);
    CHECK(b.certified == RootMultiset{{{3, 5}, 1}});
    auto c = folded_decomposition(q, {2, 2}, 5);
    CHECK(c.certified == RootMultiset{{{1, 1}, 2}});
    auto d = folded_decomposition(q, {2, 6}, 5);
    CHECK(d.certified == RootMultiset{{{1, 3}, 2}});
    CHECK(d.seeds.size() >= 2);
}

TEST_CASE("property: canonical decomposition is seed-independent and defect-consistent in C2") {
    auto e = catalog_by_name("C2");
    for (RankVector v : {RankVector{2, 3, 2}, RankVector{1, 2, 1}, RankVector{3, 1, 4}, RankVector{0, 2, 5}}) {
        CAPTURE(v[0]);
        auto a = folded_decomposition(e.quiver, v, 1);
        auto b = folded_decomposition(e.quiver, v, 2);
        CHECK(a.m == b.m);
        CHECK(a.w == b.w);
        for (size_t i = 0; i < v.size(); ++i) CHECK(a.m * e.eta[i] + a.w[i] == v[i]);
        if (a.m > 0) CHECK(defect(e.quiver, a.w) == 0);
        for (const auto& [root, k] : a.certified) CHECK(is_positive_real_root(e.quiver, root));
    }
    auto r = folded_decomposition(e.quiver, {2, 3, 2}, 4);
    CHECK(r.m == 1);
    CHECK(r.w == RankVector{1, 1, 1});
}

TEST_CASE("rigid modules are determined by their rank") {
    auto h = gls_presentation(catalog_by_name("BC1").quiver);
    CHECK(is_isomorphic(rigid_of_rank(h, {1, 1}, 3), projective(h.algebra, 1)).isomorphic());
    auto t = ar_translate(injective(h.algebra, 1));
    auto w = rigid_of_rank(h, {2, 6}, 3);
    CHECK(ext1_dim(w, w) == 0);
    CHECK(is_isomorphic(w, direct_sum(t, t)).isomorphic());
}

TEST_CASE("generic rank 3 eta in BC1 splits into three rank-eta bricks") {
    auto h = gls_presentation(catalog_by_name("BC1").quiver);
    auto r = generic_decomposition_report(h, {3, 6}, 9);
    CHECK(r.m == 3);
    long bricks = 0;
    for (const auto& e : r.evidence) {
        long k = e.dimension[0];
        CHECK(e.dimension == RankVector{k, 2 * k});
        CHECK(e.end_dim == static_cast<size_t>(k));
        bricks += k;
    }
    CHECK(bricks == 3);
}

TEST_CASE("to_multiset sorts and counts") {
    auto m = to_multiset({{1, 2}, {0, 1}, {1, 2}});
    CHECK(m == RootMultiset{{{0, 1}, 1}, {{1, 2}, 2}});
}

TEST_CASE("no rigid module of rank eta: certification error") {
    auto h = gls_presentation(catalog_by_name("BC1").quiver);
    CHECK_THROWS_AS(rigid_of_rank(h, {1, 2}, 3), CertificationError);
}

TEST_CASE("property: seed independence and regular summands for BC1, C2 and A1") {
    std::mt19937_64 rng(61);
    for (const std::string name : {"BC1", "C2", "A1"}) {
        auto e = catalog_by_name(name);
        for (int t = 0; t < 30; ++t) {
            RankVector v(e.quiver.size(), 0);
            while (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
                for (auto& x : v) x = static_cast<long>(rng() % 7);
            CAPTURE(name);
            CAPTURE(t);
            auto a = folded_decomposition(e.quiver, v, rng());
            auto b = folded_decomposition(e.quiver, v, rng());
            CHECK(a.m == b.m);
            CHECK(a.w == b.w);
            CHECK(a.rotation_invariant);
            for (size_t i = 0; i < v.size(); ++i) CHECK(a.m * e.eta[i] + a.w[i] == v[i]);
            if (a.m > 0) {
                CHECK(defect(e.quiver, a.w) == 0);
                for (const auto& [root, k] : a.certified) CHECK(tits_form(e.quiver, root) > 0);
            }
        }
    }
}

TEST_CASE("property: a real root with Schur value returns itself") {
    for (const std::string name : {"BC1", "C2"}) {
        auto e = catalog_by_name(name);
        const auto& q = e.quiver;
        auto phi = coxeter_matrix(q);
        auto phi_inv = inverse_unimodular(phi);
        auto h = gls_presentation(q);
        std::vector<RankVector> roots;
        for (int i = 0; i < static_cast<int>(q.size()); ++i) {
            auto p = *is_locally_free(projective(h.algebra, i)).rank;
            auto inj = *is_locally_free(injective(h.algebra, i)).rank;
            for (int n = 0; n < 3; ++n) {
                roots.push_back(p);
                roots.push_back(inj);
                p = apply_matrix(phi_inv, p);
                inj = apply_matrix(phi, inj);
            }
        }
        for (const auto& v : roots) {
            bool schur_value = false;
            for (long c : q.symmetrizer()) schur_value = schur_value || tits_form(q, v) == c;
            if (!is_positive_real_root(q, v) || !schur_value) continue;
            auto r = folded_decomposition(q, v, 3);
            CHECK(r.m == 0);
            CHECK(r.w == v);
            CHECK(r.certified == RootMultiset{{v, 1}});
        }
    }
}
