#include "glsw/homological.hpp"

#include <numeric>

namespace glsw {

namespace {

AlgElem vector_to_elem(const Matrix& col_vec, size_t row0, const std::vector<size_t>& corner) {
    AlgElem x;
    for (size_t k = 0; k < corner.size(); ++k) {
        if (col_vec.is_zero_at(row0 + k, 0)) continue;
        Scalar s = col_vec.at(row0 + k, 0);
        mpq_class q = s.field().is_prime() ? mpq_class(s.residue()) : s.rational();
        x.push_back({corner[k], q});
    }
    std::sort(x.begin(), x.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return x;
}

std::vector<int> top_vertices(const Representation& v, std::vector<std::vector<size_t>>& comp) {
    auto rad = radical(v);
    std::vector<int> top;
    comp.assign(rad.size(), {});
    for (size_t j = 0; j < rad.size(); ++j) {
        comp[j] = complement_indices(rad[j]);
        for (size_t k = 0; k < comp[j].size(); ++k) top.push_back(static_cast<int>(j));
    }
    return top;
}

Representation sum_of(const std::vector<int>& vertices, const AlgebraPtr& a, Field f, bool injectives) {
    if (vertices.empty()) return Representation::zero(a, f);
    std::vector<Representation> parts;
    for (int v : vertices) parts.push_back(injectives ? injective(a, v, f) : projective(a, v, f));
    return direct_sum(parts);
}

}  // namespace

std::vector<long> Presentation::g_vector(size_t vertices) const {
    std::vector<long> g(vertices, 0);
    for (int v : top0) g[v]++;
    for (int v : top1) g[v]--;
    return g;
}

Presentation minimal_presentation(const Representation& v) {
    const AlgebraPtr& a = v.algebra_ptr();
    const Field f = v.field();
    const size_t n = a->num_vertices();
    Presentation pres;
    std::vector<std::vector<size_t>> comp;
    pres.top0 = top_vertices(v, comp);
    std::vector<size_t> gen_index;  // standard basis index of each top generator
    for (size_t j = 0; j < n; ++j)
        for (size_t k : comp[j]) gen_index.push_back(k);
    pres.cover = sum_of(pres.top0, a, f, false);
    // projection at vertex i: basis path b of summand r maps to V(b) v_r
    for (size_t i = 0; i < n; ++i) {
        Matrix pi(f, v.dim(static_cast<int>(i)), pres.cover.dim(static_cast<int>(i)));
        size_t col = 0;
        for (size_t r = 0; r < pres.top0.size(); ++r) {
            for (size_t b : a->corner(static_cast<int>(i), pres.top0[r])) {
                Matrix m = v.path_matrix(a->basis()[b].path, pres.top0[r]);
                for (size_t row = 0; row < m.rows(); ++row)
                    if (!m.is_zero_at(row, gen_index[r])) pi.set(row, col, m.at(row, gen_index[r]));
                ++col;
            }
        }
        pres.projection.push_back(std::move(pi));
    }
    std::vector<Matrix> kbases;
    for (auto& pi : pres.projection) kbases.push_back(kernel_matrix(pi));
    pres.syzygy = subrepresentation(pres.cover, kbases);
    // cover the syzygy
    std::vector<std::vector<size_t>> kcomp;
    pres.top1 = top_vertices(pres.syzygy, kcomp);
    for (size_t r = 0; r < pres.top0.size(); ++r) pres.map.push_back(std::vector<AlgElem>(pres.top1.size()));
    size_t c = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t k : kcomp[i]) {
            Matrix in_cover = kbases[i].select_columns({k});
            size_t row0 = 0;
            for (size_t r = 0; r < pres.top0.size(); ++r) {
                const auto& corner = a->corner(static_cast<int>(i), pres.top0[r]);
                pres.map[r][c] = vector_to_elem(in_cover, row0, corner);
                row0 += corner.size();
            }
            ++c;
        }
    return pres;
}

std::vector<long> g_vector(const Representation& v) { return minimal_presentation(v).g_vector(v.algebra().num_vertices()); }

size_t ext1_dim(const Representation& v, const Representation& w) {
    if (v.is_zero() || w.is_zero()) return 0;
    Presentation p = minimal_presentation(v);
    long hp0 = 0;
    for (int t : p.top0) hp0 += static_cast<long>(w.dim(t));
    long e = static_cast<long>(hom_dim(p.syzygy, w)) - hp0 + static_cast<long>(hom_dim(v, w));
    if (e < 0) throw std::logic_error("negative Ext dimension");
    return static_cast<size_t>(e);
}

long ext1_dim_euler(const GlsAlgebra& h, const Representation& v, const Representation& w) {
    auto lv = is_locally_free(v);
    if (!lv.locally_free) throw std::invalid_argument("Euler shortcut needs a locally free first argument");
    RankVector rw(w.dims().size());
    for (size_t i = 0; i < rw.size(); ++i) rw[i] = static_cast<long>(w.dim(static_cast<int>(i)));
    // <rkv V, dimv W / c> is the Euler form when W is not locally free too
    long pairing = 0;
    const auto& q = h.quiver;
    for (size_t i = 0; i < rw.size(); ++i) pairing += (*lv.rank)[i] * rw[i];
    for (auto& e : q.edges()) {
        // c_i nu_ij r_i w_j / c_j with d_j = c_j w_j
        pairing -= q.c(e.from) * e.v_out * (*lv.rank)[e.from] * rw[e.to] / q.c(e.to);
    }
    return static_cast<long>(hom_dim(v, w)) - pairing;
}

Representation ar_translate(const Representation& v) {
    const AlgebraPtr& a = v.algebra_ptr();
    const Field f = v.field();
    if (v.is_zero()) return v;
    Presentation p = minimal_presentation(v);
    if (p.top1.empty()) return Representation::zero(a, f);
    Representation nu1 = sum_of(p.top1, a, f, true);
    Representation nu0 = sum_of(p.top0, a, f, true);
    const size_t n = a->num_vertices();
    std::vector<Matrix> map;
    for (size_t i = 0; i < n; ++i) {
        Matrix m(f, nu0.dim(static_cast<int>(i)), nu1.dim(static_cast<int>(i)));
        size_t row0 = 0;
        for (size_t r = 0; r < p.top0.size(); ++r) {
            const auto& rows = a->corner(p.top0[r], static_cast<int>(i));
            size_t col0 = 0;
            for (size_t c = 0; c < p.top1.size(); ++c) {
                const auto& cols = a->corner(p.top1[c], static_cast<int>(i));
                const AlgElem& x = p.map[r][c];
                if (!x.empty()) {
                    // transpose of y -> x y on e_{top0[r]} H e_i -> e_{top1[c]} H e_i
                    for (size_t yr = 0; yr < rows.size(); ++yr)
                        for (auto& [b, coef] : a->multiply(x, a->unit(rows[yr])))
                            m.add_to(row0 + yr, col0 + a->position_in_corner(b), Scalar(f, coef));
                }
                col0 += cols.size();
            }
            row0 += rows.size();
        }
        map.push_back(std::move(m));
    }
    if (!is_intertwiner(nu1, nu0, map)) throw std::logic_error("Nakayama image of the presentation is not a module map");
    return kernel_of(nu1, map);
}

Representation ar_inverse(const Representation& v) { return dual(ar_translate(dual(v))); }

Scalar random_scalar(Field f, std::mt19937_64& rng, long box) {
    if (f.is_prime()) {
        std::uniform_int_distribution<uint32_t> d(0, f.modulus() - 1);
        return Scalar::residue(f, d(rng));
    }
    std::uniform_int_distribution<long> d(-box, box);
    return Scalar(f, d(rng));
}

IsoResult is_isomorphic(const Representation& v, const Representation& w, uint64_t seed, int attempts) {
    IsoResult res;
    if (v.dims() != w.dims()) {
        res.verdict = IsoVerdict::NotIsomorphic;
        return res;
    }
    const size_t n = v.algebra().num_vertices();
    if (v.total_dim() == 0) {
        res.verdict = IsoVerdict::Isomorphic;
        std::vector<Matrix> id;
        for (size_t i = 0; i < n; ++i) id.emplace_back(v.field(), 0, 0);
        res.certificate = id;
        return res;
    }
    HomSpace h = hom_basis(v, w);
    auto invertible = [&](const std::vector<Matrix>& f) {
        for (size_t i = 0; i < n; ++i)
            if (rank(f[i]) != v.dim(static_cast<int>(i))) return false;
        return true;
    };
    for (auto& f : h.basis)
        if (invertible(f)) {
            res.verdict = IsoVerdict::Isomorphic;
            res.certificate = f;
            return res;
        }
    if (!h.basis.empty()) {
        std::mt19937_64 rng(seed ^ 0x5bd1e995u);
        for (int t = 0; t < attempts; ++t) {
            std::vector<Matrix> f;
            for (size_t i = 0; i < n; ++i) f.emplace_back(v.field(), w.dim(static_cast<int>(i)), v.dim(static_cast<int>(i)));
            for (auto& b : h.basis) {
                Scalar s = random_scalar(v.field(), rng);
                for (size_t i = 0; i < n; ++i) f[i] = f[i] + b[i].scaled(s);
            }
            if (invertible(f)) {
                res.verdict = IsoVerdict::Isomorphic;
                res.certificate = f;
                return res;
            }
        }
    }
    size_t hv = end_dim(v), hw = end_dim(w);
    res.verdict = (h.dimension() == hv && hv == hw) ? IsoVerdict::ProbablyNot : IsoVerdict::NotIsomorphic;
    return res;
}

Representation random_locally_free(const GlsAlgebra& h, const RankVector& rank_vec, Field f, uint64_t seed, long box) {
    const auto& q = h.quiver;
    const auto& a = h.algebra;
    const size_t n = q.size();
    if (rank_vec.size() != n) throw std::invalid_argument("rank vector has the wrong length");
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) {
        if (rank_vec[i] < 0) throw std::invalid_argument("negative rank");
        dims[i] = static_cast<size_t>(rank_vec[i] * q.c(static_cast<int>(i)));
    }
    std::vector<Matrix> mats(a->arrows().size());
    std::vector<Matrix> loops(n);
    for (size_t i = 0; i < n; ++i) {
        size_t c = static_cast<size_t>(q.c(static_cast<int>(i)));
        Matrix e(f, dims[i], dims[i]);
        for (long b = 0; b < rank_vec[i]; ++b)
            for (size_t m = 0; m + 1 < c; ++m) e.set_int(b * c + m + 1, b * c + m, 1);
        loops[i] = e;
        if (h.loop[i] >= 0) mats[h.loop[i]] = e;
    }
    std::mt19937_64 rng(seed);
    for (size_t ei = 0; ei < q.edges().size(); ++ei) {
        const Edge& e = q.edges()[ei];
        const size_t ds = dims[e.from], dt = dims[e.to];
        // E_t^{f_out} A - A E_s^{f_in} = 0, with an absent loop contributing nothing
        Matrix lt = h.loop[e.to] >= 0 ? loops[e.to].power(static_cast<unsigned>(q.f_out(e))) : Matrix(f, dt, dt);
        Matrix ls = h.loop[e.from] >= 0 ? loops[e.from].power(static_cast<unsigned>(q.f_in(e))) : Matrix(f, ds, ds);
        Matrix sys(f, dt * ds, dt * ds);
        for (size_t r = 0; r < dt; ++r)
            for (size_t c = 0; c < ds; ++c) {
                size_t row = r * ds + c;
                for (size_t k = 0; k < dt; ++k)
                    if (!lt.is_zero_at(r, k)) sys.add_to(row, k * ds + c, lt.at(r, k));
                for (size_t k = 0; k < ds; ++k)
                    if (!ls.is_zero_at(k, c)) sys.add_to(row, r * ds + k, -ls.at(k, c));
            }
        Matrix kb = dt * ds == 0 ? Matrix(f, 0, 0) : kernel_matrix(sys);
        for (int arrow : h.edge_arrows[ei]) {
            Matrix m(f, dt, ds);
            for (size_t j = 0; j < kb.cols(); ++j) {
                Scalar s = random_scalar(f, rng, box);
                if (s.is_zero()) continue;
                for (size_t v = 0; v < kb.rows(); ++v)
                    if (!kb.is_zero_at(v, j)) m.add_to(v / ds, v % ds, kb.at(v, j) * s);
            }
            mats[arrow] = std::move(m);
        }
    }
    Representation rep(a, f, dims, std::move(mats));
    if (!validate(rep).empty()) throw std::logic_error("sampled representation violates a relation");
    return rep;
}

}  // namespace glsw
