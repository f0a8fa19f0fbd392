#include "glsw/representation.hpp"

#include <algorithm>
#include <numeric>

namespace glsw {

namespace {

Scalar coeff_in(Field f, const mpq_class& q) { return Scalar(f, q); }

}  // namespace

Representation::Representation(AlgebraPtr algebra, Field field, std::vector<size_t> dims, std::vector<Matrix> arrows)
    : alg_(std::move(algebra)), field_(field), dims_(std::move(dims)), arrows_(std::move(arrows)) {
    if (!alg_) throw std::invalid_argument("representation without an algebra");
    if (dims_.size() != alg_->num_vertices()) throw std::invalid_argument("dimension vector has the wrong length");
    if (arrows_.size() != alg_->arrows().size()) throw std::invalid_argument("wrong number of arrow matrices");
    for (size_t a = 0; a < arrows_.size(); ++a) {
        const Arrow& ar = alg_->arrows()[a];
        const Matrix& m = arrows_[a];
        if (m.field() != field_) throw FieldMismatch("arrow matrix over the wrong field");
        if (m.rows() != dims_[ar.target] || m.cols() != dims_[ar.source])
            throw std::invalid_argument("arrow matrix " + ar.name + " has the wrong shape");
    }
}

Representation Representation::zero(AlgebraPtr algebra, Field field) {
    std::vector<Matrix> arrows;
    for (size_t a = 0; a < algebra->arrows().size(); ++a) arrows.emplace_back(field, 0, 0);
    std::vector<size_t> dims(algebra->num_vertices(), 0);
    return Representation(std::move(algebra), field, std::move(dims), std::move(arrows));
}

size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), size_t{0}); }

DimVector Representation::dimension_vector() const { return DimVector(dims_.begin(), dims_.end()); }

Matrix Representation::path_matrix(const Path& p, int source) const {
    Matrix m = Matrix::identity(field_, dims_[source]);
    int at = source;
    for (int a : p) {
        if (alg_->arrows()[a].source != at) throw std::invalid_argument("path is not composable");
        m = arrows_[a] * m;
        at = alg_->arrows()[a].target;
    }
    return m;
}

Matrix Representation::element_matrix(const AlgElem& x, int target, int source) const {
    Matrix m(field_, dims_[target], dims_[source]);
    for (auto& [b, c] : x) {
        const BasisElement& be = alg_->basis()[b];
        if (be.source != source || be.target != target) throw std::invalid_argument("element not in the requested corner");
        m = m + path_matrix(be.path, source).scaled(coeff_in(field_, c));
    }
    return m;
}

Representation Representation::reduce_to(Field f) const {
    if (f == field_) return *this;
    std::vector<Matrix> arrows;
    for (auto& m : arrows_) arrows.push_back(m.reduce_to(f));
    return Representation(alg_, f, dims_, std::move(arrows));
}

std::vector<Violation> validate(const Representation& v) {
    std::vector<Violation> out;
    const auto& rels = v.algebra().relations();
    for (size_t r = 0; r < rels.size(); ++r) {
        Matrix acc(v.field(), v.dim(rels[r].target), v.dim(rels[r].source));
        for (auto& t : rels[r].terms) acc = acc + v.path_matrix(t.path, rels[r].source).scaled(coeff_in(v.field(), t.coeff));
        if (!acc.is_zero()) out.push_back({r, rels[r].label});
    }
    return out;
}

LocalFreeness is_locally_free(const Representation& v) {
    const auto& alg = v.algebra();
    if (!alg.has_loop_markers()) throw std::invalid_argument("local freeness needs an algebra with truncated loops");
    RankVector rank(alg.num_vertices());
    for (size_t i = 0; i < alg.num_vertices(); ++i) {
        long c = alg.loop_order(static_cast<int>(i));
        size_t d = v.dim(static_cast<int>(i));
        if (d % c != 0) return {false, std::nullopt};
        rank[i] = static_cast<long>(d / c);
        int loop = alg.loop_at(static_cast<int>(i));
        if (loop < 0 || d == 0) continue;
        std::vector<size_t> profile;
        try {
            profile = nilpotent_block_profile(v.arrow(loop));
        } catch (const std::invalid_argument&) {
            return {false, std::nullopt};
        }
        for (size_t b : profile)
            if (b != static_cast<size_t>(c)) return {false, std::nullopt};
    }
    return {true, rank};
}

namespace {

struct HomSystem {
    Matrix eqs;
    std::vector<size_t> offset;
};

HomSystem hom_system(const Representation& v, const Representation& w) {
    if (v.algebra_ptr() != w.algebra_ptr() && &v.algebra() != &w.algebra()) throw std::invalid_argument("hom between modules over different algebras");
    if (v.field() != w.field()) throw FieldMismatch("hom between modules over different fields");
    const Field f = v.field();
    const auto& alg = v.algebra();
    const size_t n = alg.num_vertices();
    std::vector<size_t> off(n + 1, 0);
    for (size_t i = 0; i < n; ++i) off[i + 1] = off[i] + w.dim(static_cast<int>(i)) * v.dim(static_cast<int>(i));
    size_t rows = 0;
    for (auto& a : alg.arrows()) rows += w.dim(a.target) * v.dim(a.source);
    Matrix eqs(f, rows, off[n]);
    size_t row0 = 0;
    const bool prime = f.is_prime();
    const uint64_t p = f.modulus();
    for (size_t ai = 0; ai < alg.arrows().size(); ++ai) {
        const Arrow& a = alg.arrows()[ai];
        const Matrix& A = v.arrow(static_cast<int>(ai));
        const Matrix& B = w.arrow(static_cast<int>(ai));
        const size_t dvs = v.dim(a.source), dvt = v.dim(a.target), dws = w.dim(a.source), dwt = w.dim(a.target);
        for (size_t r = 0; r < dwt; ++r)
            for (size_t c = 0; c < dvs; ++c) {
                size_t row = row0 + r * dvs + c;
                // + sum_k B[r,k] f_s[k,c]
                for (size_t k = 0; k < dws; ++k) {
                    if (B.is_zero_at(r, k)) continue;
                    size_t col = off[a.source] + k * dvs + c;
                    if (prime)
                        eqs.z(row, col) = static_cast<uint32_t>((eqs.z(row, col) + B.z(r, k)) % p);
                    else
                        eqs.q(row, col) += B.q(r, k);
                }
                // - sum_k f_t[r,k] A[k,c]
                for (size_t k = 0; k < dvt; ++k) {
                    if (A.is_zero_at(k, c)) continue;
                    size_t col = off[a.target] + r * dvt + k;
                    if (prime)
                        eqs.z(row, col) = static_cast<uint32_t>((eqs.z(row, col) + p - A.z(k, c)) % p);
                    else
                        eqs.q(row, col) -= A.q(k, c);
                }
            }
        row0 += dwt * dvs;
    }
    return {std::move(eqs), std::move(off)};
}

}  // namespace

HomSpace hom_basis(const Representation& v, const Representation& w) {
    HomSystem sys = hom_system(v, w);
    HomSpace h;
    if (sys.eqs.cols() == 0) return h;
    Matrix k = kernel_matrix(sys.eqs);
    const size_t n = v.algebra().num_vertices();
    for (size_t j = 0; j < k.cols(); ++j) {
        std::vector<Matrix> f;
        for (size_t i = 0; i < n; ++i) {
            size_t dv = v.dim(static_cast<int>(i)), dw = w.dim(static_cast<int>(i));
            Matrix m(v.field(), dw, dv);
            for (size_t r = 0; r < dw; ++r)
                for (size_t c = 0; c < dv; ++c) {
                    size_t var = sys.offset[i] + r * dv + c;
                    if (!k.is_zero_at(var, j)) m.set(r, c, k.at(var, j));
                }
            f.push_back(std::move(m));
        }
        h.basis.push_back(std::move(f));
    }
    return h;
}

size_t hom_dim(const Representation& v, const Representation& w) {
    HomSystem sys = hom_system(v, w);
    if (sys.eqs.cols() == 0) return 0;
    return sys.eqs.cols() - rank(sys.eqs);
}

size_t end_dim(const Representation& v) { return hom_dim(v, v); }

bool is_intertwiner(const Representation& v, const Representation& w, const std::vector<Matrix>& f) {
    const auto& arrows = v.algebra().arrows();
    for (size_t a = 0; a < arrows.size(); ++a)
        if (w.arrow(static_cast<int>(a)) * f[arrows[a].source] != f[arrows[a].target] * v.arrow(static_cast<int>(a))) return false;
    return true;
}

Representation subrepresentation(const Representation& v, const std::vector<Matrix>& bases) {
    const auto& arrows = v.algebra().arrows();
    std::vector<size_t> dims;
    for (auto& b : bases) dims.push_back(b.cols());
    std::vector<Matrix> mats;
    for (size_t a = 0; a < arrows.size(); ++a) {
        const Matrix& bs = bases[arrows[a].source];
        const Matrix& bt = bases[arrows[a].target];
        Matrix img = v.arrow(static_cast<int>(a)) * bs;
        auto x = solve_matrix(bt, img);
        if (!x) throw std::invalid_argument("subspace is not stable under arrow " + arrows[a].name);
        mats.push_back(std::move(*x));
    }
    return Representation(v.algebra_ptr(), v.field(), std::move(dims), std::move(mats));
}

Representation quotient(const Representation& v, const std::vector<Matrix>& bases) {
    const auto& arrows = v.algebra().arrows();
    const size_t n = v.algebra().num_vertices();
    std::vector<Matrix> lift(n), proj(n);
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) {
        size_t d = v.dim(static_cast<int>(i));
        std::vector<size_t> comp = complement_indices(bases[i]);
        Matrix e(v.field(), d, comp.size());
        for (size_t j = 0; j < comp.size(); ++j) e.set_int(comp[j], j, 1);
        Matrix full = hstack(bases[i], e);
        auto inv = inverse(full);
        if (!inv) throw std::logic_error("quotient basis is singular");
        proj[i] = inv->block(bases[i].cols(), 0, comp.size(), d);
        lift[i] = std::move(e);
        dims[i] = comp.size();
    }
    std::vector<Matrix> mats;
    for (size_t a = 0; a < arrows.size(); ++a)
        mats.push_back(proj[arrows[a].target] * v.arrow(static_cast<int>(a)) * lift[arrows[a].source]);
    return Representation(v.algebra_ptr(), v.field(), std::move(dims), std::move(mats));
}

Representation direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
    const auto& alg = parts[0].algebra();
    std::vector<size_t> dims(alg.num_vertices(), 0);
    for (auto& p : parts)
        for (size_t i = 0; i < dims.size(); ++i) dims[i] += p.dim(static_cast<int>(i));
    std::vector<Matrix> mats;
    for (size_t a = 0; a < alg.arrows().size(); ++a) {
        std::vector<Matrix> blocks;
        for (auto& p : parts) blocks.push_back(p.arrow(static_cast<int>(a)));
        mats.push_back(block_diagonal(blocks, parts[0].field()));
    }
    return Representation(parts[0].algebra_ptr(), parts[0].field(), std::move(dims), std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum(std::vector<Representation>{a, b}); }

Representation dual(const Representation& v) {
    std::vector<Matrix> mats;
    for (auto& m : v.arrows()) mats.push_back(m.transpose());
    return Representation(v.algebra().opposite(), v.field(), v.dims(), std::move(mats));
}

Representation conjugate(const Representation& v, const std::vector<Matrix>& g) {
    const auto& arrows = v.algebra().arrows();
    std::vector<Matrix> ginv;
    for (auto& m : g) {
        auto inv = inverse(m);
        if (!inv) throw std::invalid_argument("change of basis is singular");
        ginv.push_back(std::move(*inv));
    }
    std::vector<Matrix> mats;
    for (size_t a = 0; a < arrows.size(); ++a) mats.push_back(g[arrows[a].target] * v.arrow(static_cast<int>(a)) * ginv[arrows[a].source]);
    return Representation(v.algebra_ptr(), v.field(), v.dims(), std::move(mats));
}

Representation kernel_of(const Representation& v, const std::vector<Matrix>& f) {
    std::vector<Matrix> bases;
    for (auto& m : f) bases.push_back(kernel_matrix(m));
    return subrepresentation(v, bases);
}

namespace {

// Incremental span membership via a reduced echelon basis.
class SpanBuilder {
public:
    SpanBuilder(Field f, size_t dim) : f_(f), dim_(dim) {}
    // Returns true when v was outside the span (and adds it).
    bool add(const Vec& v) {
        Vec r = v;
        for (size_t k = 0; k < rows_.size(); ++k) {
            const Scalar& x = r[piv_[k]];
            if (x.is_zero()) continue;
            Scalar s = x;
            for (size_t j = 0; j < dim_; ++j)
                if (!rows_[k][j].is_zero()) r[j] -= s * rows_[k][j];
        }
        size_t p = 0;
        while (p < dim_ && r[p].is_zero()) ++p;
        if (p == dim_) return false;
        Scalar inv = r[p].inverse();
        for (auto& x : r) x *= inv;
        // keep fully reduced
        for (auto& row : rows_) {
            if (row[p].is_zero()) continue;
            Scalar s = row[p];
            for (size_t j = 0; j < dim_; ++j)
                if (!r[j].is_zero()) row[j] -= s * r[j];
        }
        rows_.push_back(std::move(r));
        piv_.push_back(p);
        originals_.push_back(v);
        return true;
    }
    Matrix basis() const { return Matrix::from_columns(f_, dim_, originals_); }

private:
    Field f_;
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> piv_;
    std::vector<Vec> originals_;
};

}  // namespace

std::vector<Matrix> spin(const Representation& v, int vertex, const std::vector<Vec>& vectors) {
    const auto& alg = v.algebra();
    const size_t n = alg.num_vertices();
    std::vector<SpanBuilder> spans;
    for (size_t i = 0; i < n; ++i) spans.emplace_back(v.field(), v.dim(static_cast<int>(i)));
    std::vector<std::pair<int, Vec>> work;
    for (auto& x : vectors)
        if (spans[vertex].add(x)) work.push_back({vertex, x});
    while (!work.empty()) {
        auto [i, x] = std::move(work.back());
        work.pop_back();
        for (size_t a = 0; a < alg.arrows().size(); ++a) {
            if (alg.arrows()[a].source != i) continue;
            int t = alg.arrows()[a].target;
            Vec y = v.arrow(static_cast<int>(a)).apply(x);
            if (spans[t].add(y)) work.push_back({t, std::move(y)});
        }
    }
    std::vector<Matrix> out;
    for (auto& s : spans) out.push_back(s.basis());
    return out;
}

std::vector<Matrix> radical(const Representation& v) {
    const auto& alg = v.algebra();
    std::vector<Matrix> out;
    for (size_t t = 0; t < alg.num_vertices(); ++t) {
        Matrix acc(v.field(), v.dim(static_cast<int>(t)), 0);
        for (size_t a = 0; a < alg.arrows().size(); ++a)
            if (alg.arrows()[a].target == static_cast<int>(t)) acc = hstack(acc, v.arrow(static_cast<int>(a)));
        out.push_back(column_space(acc));
    }
    return out;
}

}  // namespace glsw
