#include <algorithm>
#include <numeric>
#include <set>

#include "glsw/quiver.hpp"

namespace glsw {

namespace {

bool leq(const RankVector& a, const RankVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<RankVector> phi_orbit(const IntMatrix& phi, const RankVector& v) {
    std::vector<RankVector> orbit{v};
    while (true) {
        RankVector w = apply_matrix(phi, orbit.back());
        if (w == orbit.front()) return orbit;
        orbit.push_back(w);
        if (orbit.size() > 512) throw std::logic_error("Coxeter orbit of a regular root did not close");
    }
}

}  // namespace

RootSystemData tubes(const ValuedQuiver& q, std::optional<long> catalog_tier) {
    RootSystemData data;
    data.eta = null_root(q);
    const size_t n = q.size();
    for (size_t i = 0; i < n; ++i) data.defect.push_back(ringel_form(q, data.eta, unit_vector(n, static_cast<int>(i))));
    const IntMatrix phi = coxeter_matrix(q);

    // positive real roots below 3 eta, grown from the simple roots by increasing reflections
    RankVector bound = data.eta;
    for (auto& b : bound) b *= 3;
    std::set<RankVector> seen;
    std::vector<RankVector> frontier;
    for (size_t i = 0; i < n; ++i) {
        frontier.push_back(unit_vector(n, static_cast<int>(i)));
        seen.insert(frontier.back());
    }
    while (!frontier.empty()) {
        std::vector<RankVector> next;
        for (auto& v : frontier)
            for (size_t i = 0; i < n; ++i) {
                RankVector w = reflect(q, static_cast<int>(i), v);
                if (w[i] <= v[i] || !leq(w, bound) || seen.count(w)) continue;
                seen.insert(w);
                next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    std::vector<RankVector> regular;
    for (auto& v : seen) {
        long d = 0;
        for (size_t i = 0; i < n; ++i) d += data.defect[i] * v[i];
        if (d == 0) regular.push_back(v);
    }

    std::vector<std::vector<RankVector>> orbits;
    for (auto& r : regular) orbits.push_back(phi_orbit(phi, r));

    std::vector<size_t> minimal;
    for (size_t a = 0; a < regular.size(); ++a) {
        bool is_min = true;
        for (size_t b = 0; b < regular.size() && is_min; ++b) {
            if (a == b || !leq(regular[b], regular[a])) continue;
            size_t period = std::lcm(orbits[a].size(), orbits[b].size());
            bool below = true;
            RankVector x = regular[b], y = regular[a];
            for (size_t t = 0; t < period && below; ++t) {
                below = leq(x, y);
                x = apply_matrix(phi, x);
                y = apply_matrix(phi, y);
            }
            if (below) is_min = false;
        }
        if (is_min) minimal.push_back(a);
    }

    std::set<RankVector> used;
    for (size_t a : minimal) {
        if (used.count(regular[a])) continue;
        Tube t;
        t.quasi_simples = orbits[a];
        for (auto& w : t.quasi_simples) used.insert(w);
        t.rank = static_cast<long>(t.quasi_simples.size());
        t.tier = tits_form(q, regular[a]);
        RankVector sum(n, 0);
        for (auto& w : t.quasi_simples)
            for (size_t i = 0; i < n; ++i) sum[i] += w[i];
        t.sum_multiple = sum[0] / data.eta[0];
        data.tubes.push_back(std::move(t));
    }
    // deterministic order: by rank then by first quasi-simple
    for (auto& t : data.tubes) std::rotate(t.quasi_simples.begin(), std::min_element(t.quasi_simples.begin(), t.quasi_simples.end()), t.quasi_simples.end());
    for (auto& t : data.tubes) {
        // restore the Coxeter order after the rotation
        std::vector<RankVector> ordered{t.quasi_simples.front()};
        while (ordered.size() < t.quasi_simples.size()) ordered.push_back(apply_matrix(phi, ordered.back()));
        t.quasi_simples = ordered;
    }
    std::sort(data.tubes.begin(), data.tubes.end(), [](const Tube& a, const Tube& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.quasi_simples < b.quasi_simples;
    });
    for (auto& t : data.tubes) data.tier = std::max(data.tier, t.tier);
    data.catalog_tier = catalog_tier;
    data.tier_matches_catalog = !catalog_tier || *catalog_tier == data.tier;
    return data;
}

}  // namespace glsw
