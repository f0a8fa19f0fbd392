#include "glsw/gls.hpp"

#include <numeric>

namespace glsw {

GlsAlgebra gls_presentation(const ValuedQuiver& q) {
    const size_t n = q.size();
    long l = 1;
    for (long c : q.symmetrizer()) l = std::lcm(l, c);
    std::vector<Arrow> arrows;
    GlsAlgebra h;
    h.quiver = q;
    h.loop.assign(n, -1);
    for (size_t i = 0; i < n; ++i) {
        if (q.c(static_cast<int>(i)) == 1) continue;
        h.loop[i] = static_cast<int>(arrows.size());
        arrows.push_back({static_cast<int>(i), static_cast<int>(i), "eps" + std::to_string(i + 1), l / q.c(static_cast<int>(i))});
    }
    std::vector<Relation> rels;
    for (size_t i = 0; i < n; ++i) {
        if (h.loop[i] < 0) continue;
        Relation r{static_cast<int>(i), static_cast<int>(i), {{1, Path(q.c(static_cast<int>(i)), h.loop[i])}},
                   "H1 at " + std::to_string(i + 1)};
        rels.push_back(std::move(r));
    }
    for (auto& e : q.edges()) {
        long g = q.g(e);
        std::vector<int> copies;
        for (long k = 0; k < g; ++k) {
            copies.push_back(static_cast<int>(arrows.size()));
            std::string name = "a" + std::to_string(e.from + 1) + std::to_string(e.to + 1);
            if (g > 1) name += "_" + std::to_string(k + 1);
            arrows.push_back({e.from, e.to, name, 1});
        }
        h.edge_arrows.push_back(copies);
        // eps_to^{f_out} alpha = alpha eps_from^{f_in}
        long f_out = q.f_out(e), f_in = q.f_in(e);
        for (int a : copies) {
            Relation r{e.from, e.to, {}, "H2 on " + arrows[a].name};
            if (h.loop[e.to] >= 0) {
                Path p{a};
                p.insert(p.end(), f_out, h.loop[e.to]);
                r.terms.push_back({1, p});
            }
            if (h.loop[e.from] >= 0) {
                Path p(f_in, h.loop[e.from]);
                p.push_back(a);
                r.terms.push_back({-1, p});
            }
            if (!r.terms.empty()) rels.push_back(std::move(r));
        }
    }
    auto alg = std::make_shared<BoundQuiverAlgebra>(n, std::move(arrows), std::move(rels), "H(" + q.name() + ")");
    std::vector<long> order(q.symmetrizer().begin(), q.symmetrizer().end());
    alg->set_loops(h.loop, order);
    h.algebra = alg;
    return h;
}

Representation projective(const AlgebraPtr& a, int vertex, Field f) {
    const size_t n = a->num_vertices();
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) dims[i] = a->corner(static_cast<int>(i), vertex).size();
    std::vector<Matrix> mats;
    for (size_t ai = 0; ai < a->arrows().size(); ++ai) {
        const Arrow& ar = a->arrows()[ai];
        const auto& src = a->corner(ar.source, vertex);
        Matrix m(f, dims[ar.target], dims[ar.source]);
        for (size_t c = 0; c < src.size(); ++c)
            for (auto& [b, coef] : a->left_multiply(static_cast<int>(ai), src[c])) m.set(a->position_in_corner(b), c, Scalar(f, coef));
        mats.push_back(std::move(m));
    }
    return Representation(a, f, std::move(dims), std::move(mats));
}

Representation injective(const AlgebraPtr& a, int vertex, Field f) {
    const size_t n = a->num_vertices();
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) dims[i] = a->corner(vertex, static_cast<int>(i)).size();
    std::vector<Matrix> mats;
    for (size_t ai = 0; ai < a->arrows().size(); ++ai) {
        const Arrow& ar = a->arrows()[ai];
        // (a f)(x) = f(x a) for x in e_v H e_target; x a lies in e_v H e_source
        const auto& tgt = a->corner(vertex, ar.target);
        AlgElem arrow_elem = a->left_multiply(static_cast<int>(ai), a->idempotent(ar.source));
        Matrix m(f, dims[ar.target], dims[ar.source]);
        for (size_t r = 0; r < tgt.size(); ++r)
            for (auto& [b, coef] : a->multiply(a->unit(tgt[r]), arrow_elem)) m.set(r, a->position_in_corner(b), Scalar(f, coef));
        mats.push_back(std::move(m));
    }
    return Representation(a, f, std::move(dims), std::move(mats));
}

Representation simple(const AlgebraPtr& a, int vertex, Field f) {
    std::vector<size_t> dims(a->num_vertices(), 0);
    dims[vertex] = 1;
    std::vector<Matrix> mats;
    for (auto& ar : a->arrows()) mats.emplace_back(f, dims[ar.target], dims[ar.source]);
    return Representation(a, f, std::move(dims), std::move(mats));
}

Representation generalized_simple(const GlsAlgebra& h, int vertex, Field f) {
    const auto& a = h.algebra;
    const size_t c = static_cast<size_t>(h.quiver.c(vertex));
    std::vector<size_t> dims(a->num_vertices(), 0);
    dims[vertex] = c;
    std::vector<Matrix> mats;
    for (size_t ai = 0; ai < a->arrows().size(); ++ai) {
        const Arrow& ar = a->arrows()[ai];
        Matrix m(f, dims[ar.target], dims[ar.source]);
        if (static_cast<int>(ai) == h.loop[vertex])
            for (size_t k = 0; k + 1 < c; ++k) m.set_int(k + 1, k, 1);
        mats.push_back(std::move(m));
    }
    return Representation(a, f, std::move(dims), std::move(mats));
}

RankVector UnfoldedQuiver::unfold(const RankVector& v) const {
    if (v.size() != fiber.size()) throw std::invalid_argument("rank vector has the wrong length");
    RankVector d(label.size(), 0);
    for (size_t i = 0; i < fiber.size(); ++i)
        for (int u : fiber[i]) d[u] = v[i];
    return d;
}

std::optional<RankVector> UnfoldedQuiver::fold_class(const RankVector& d) const {
    if (d.size() != label.size()) throw std::invalid_argument("dimension vector has the wrong length");
    RankVector v(fiber.size());
    for (size_t i = 0; i < fiber.size(); ++i) {
        v[i] = d[fiber[i][0]];
        for (int u : fiber[i])
            if (d[u] != v[i]) return std::nullopt;
    }
    return v;
}

UnfoldedQuiver unfold(const ValuedQuiver& q) {
    UnfoldedQuiver u;
    const size_t n = q.size();
    u.fiber.resize(n);
    for (size_t i = 0; i < n; ++i)
        for (long k = 0; k < q.c(static_cast<int>(i)); ++k) {
            u.fiber[i].push_back(static_cast<int>(u.label.size()));
            u.label.push_back({static_cast<int>(i), static_cast<int>(k)});
        }
    u.rotation.resize(u.label.size());
    for (size_t i = 0; i < n; ++i) {
        long c = q.c(static_cast<int>(i));
        for (long k = 0; k < c; ++k) u.rotation[u.fiber[i][k]] = u.fiber[i][(k + 1) % c];
    }
    std::vector<Edge> edges;
    for (auto& e : q.edges()) {
        long ci = q.c(e.from), cj = q.c(e.to), g = q.g(e);
        long m = std::gcd(ci, cj);
        for (long k = 0; k < ci; ++k)
            for (long l = 0; l < cj; ++l)
                if ((k - l) % m == 0) edges.push_back({u.fiber[e.from][k], u.fiber[e.to][l], g, g});
    }
    u.quiver = ValuedQuiver(std::vector<long>(u.label.size(), 1), std::move(edges), q.name() + "-unfolded");
    return u;
}

}  // namespace glsw
