#include "glsw/families.hpp"

#include "glsw/homological.hpp"

namespace glsw {

std::string ProjectivePoint::to_string() const {
    if (is_infinity()) return "inf";
    mpq_class v = x / y;
    return v.get_str();
}

std::vector<ProjectivePoint> lambda_grid() {
    std::vector<ProjectivePoint> g;
    for (long k = 0; k <= 9; ++k) g.push_back(ProjectivePoint::affine(k));
    g.push_back(ProjectivePoint::infinity());
    return g;
}

namespace bc1 {

GlsAlgebra algebra() { return gls_presentation(catalog_by_name("BC1").quiver); }

IntMatrix expected_coxeter() { return {{-1, 1}, {-4, 3}}; }
RankVector expected_defect() { return {-1, 2}; }

namespace {
void check_args(int vertex, long n) {
    if (vertex != 0 && vertex != 1) throw std::invalid_argument("BC1 vertex must be 0 or 1");
    if (n < 0) throw std::invalid_argument("series index must be non-negative");
}
}  // namespace

RankVector preprojective_root(int vertex, long n) {
    check_args(vertex, n);
    return vertex == 0 ? RankVector{2 * n + 1, 4 * n} : RankVector{n + 1, 2 * n + 1};
}

RankVector preinjective_root(int vertex, long n) {
    check_args(vertex, n);
    return vertex == 0 ? RankVector{2 * n + 1, 4 * n + 4} : RankVector{n, 2 * n + 1};
}

std::vector<long> listed_g_preprojective(int vertex, long n) {
    check_args(vertex, n);
    return vertex == 0 ? std::vector<long>{-4 * n, 8 * n + 4} : std::vector<long>{-2 * n - 1, 4 * n + 4};
}

std::vector<long> listed_g_preinjective(int vertex, long n) {
    check_args(vertex, n);
    return vertex == 0 ? std::vector<long>{-4 * n - 4, 8 * n + 4} : std::vector<long>{-2 * n - 1, 4 * n};
}

std::vector<long> to_listed_coordinates(const std::vector<long>& g) {
    if (g.size() != 2) throw std::invalid_argument("BC1 g-vectors have two coordinates");
    return {-g[1], 4 * (g[0] + g[1])};
}

namespace {
Representation build(const GlsAlgebra& h, Field f, size_t d0, size_t d1, const Matrix& loop, const Matrix& arrow) {
    std::vector<Matrix> m(h.algebra->arrows().size());
    m[h.loop[0]] = loop;
    m[h.edge_arrows[0][0]] = arrow;
    return Representation(h.algebra, f, {d0, d1}, std::move(m));
}

Matrix shift(Field f, size_t n) {
    Matrix e(f, n, n);
    for (size_t i = 0; i + 1 < n; ++i) e.set_int(i + 1, i, 1);
    return e;
}
}  // namespace

Representation family_member(const GlsAlgebra& h, const ProjectivePoint& lambda, Field f) {
    if (lambda.x == 0 && lambda.y == 0) throw std::invalid_argument("(0:0) is not a point of the projective line");
    Matrix a(f, 4, 2);
    a.set_int(0, 0, 1);
    a.set(1, 1, Scalar(f, lambda.y));
    a.set(2, 1, Scalar(f, lambda.x));
    return build(h, f, 4, 2, shift(f, 4), a);
}

Representation v_bar_infinity(const GlsAlgebra& h, Field f) {
    Matrix a(f, 2, 1);
    a.set_int(0, 0, 1);
    return build(h, f, 2, 1, shift(f, 2), a);
}

Representation preprojective(const GlsAlgebra& h, int vertex, long n) {
    check_args(vertex, n);
    Representation v = projective(h.algebra, vertex);
    for (long k = 0; k < n; ++k) v = ar_inverse(v);
    auto lf = is_locally_free(v);
    if (!lf.locally_free || *lf.rank != preprojective_root(vertex, n))
        throw std::logic_error("preprojective module has an unexpected rank vector");
    return v;
}

Representation preinjective(const GlsAlgebra& h, int vertex, long n) {
    check_args(vertex, n);
    Representation v = injective(h.algebra, vertex);
    for (long k = 0; k < n; ++k) v = ar_translate(v);
    auto lf = is_locally_free(v);
    if (!lf.locally_free || *lf.rank != preinjective_root(vertex, n))
        throw std::logic_error("preinjective module has an unexpected rank vector");
    return v;
}

std::optional<mpq_class> normal_form_invariant(const Representation& v) {
    if (v.field().is_prime()) throw std::invalid_argument("normal form invariant is computed over Q");
    auto lf = is_locally_free(v);
    if (!lf.locally_free || *lf.rank != RankVector{1, 2}) return std::nullopt;
    const auto& h = v.algebra();
    int loop = h.loop_at(0);
    const Matrix& e = v.arrow(loop);
    int arrow = -1;
    for (size_t a = 0; a < h.arrows().size(); ++a)
        if (!h.arrows()[a].is_loop()) arrow = static_cast<int>(a);
    // generator of V(0) as a K[e]-module: a standard vector outside the image of e
    size_t gen = complement_indices(e).front();
    Vec x = zero_vec(v.field(), 4);
    x[gen] = Scalar(v.field(), 1);
    std::vector<Vec> powers{x};
    for (int k = 1; k < 4; ++k) powers.push_back(e.apply(powers.back()));
    Matrix basis = Matrix::from_columns(v.field(), 4, powers);
    auto coords = solve_matrix(basis, v.arrow(arrow));
    if (!coords) return std::nullopt;
    // rows of the echelon form: w1 = 1 + r e^2 + s e^3, w2 = e + a e^2 + b e^3
    Echelon ech = row_reduce(coords->transpose());
    if (ech.pivots.size() != 2 || ech.pivots[0] != 0 || ech.pivots[1] != 1) return std::nullopt;
    mpq_class r = ech.rref.at(0, 2).rational();
    mpq_class a = ech.rref.at(1, 2).rational(), b = ech.rref.at(1, 3).rational();
    return (b - r) - a * a;
}

Representation normal_form(const GlsAlgebra& h, const mpq_class& invariant, Field f) {
    Matrix a(f, 4, 2);
    a.set_int(0, 0, 1);
    a.set_int(1, 1, 1);
    a.set(3, 1, Scalar(f, invariant));
    return build(h, f, 4, 2, shift(f, 4), a);
}

}  // namespace bc1

std::string to_string(ExtendingCase c) {
    switch (c) {
        case ExtendingCase::Kronecker: return "kronecker";
        case ExtendingCase::Gentle: return "gentle";
        case ExtendingCase::ThreeTerm: return "three-term";
        case ExtendingCase::BcTranspose: return "bc1-transpose";
    }
    return "?";
}

ExtendingAlgebra extending_algebra(const ExtendingData& data) {
    ExtendingAlgebra b;
    b.data = data;
    std::vector<Arrow> arrows;
    std::vector<Relation> rels;
    auto truncate = [&](int loop, int vertex, long order) {
        rels.push_back({vertex, vertex, {{1, Path(static_cast<size_t>(order), loop)}}, "delta" + std::to_string(vertex) + " nilpotent"});
    };
    const auto key = std::make_tuple(data.c0, data.c1, data.nu01, data.nu10);
    if (key == std::make_tuple(1L, 1L, 2L, 2L)) {
        b.kind = ExtendingCase::Kronecker;
        arrows = {{0, 1, "beta1", 1}, {0, 1, "beta2", 1}};
        b.beta = {0, 1};
    } else if (key == std::make_tuple(2L, 2L, 2L, 2L) || key == std::make_tuple(3L, 3L, 2L, 2L)) {
        long c = data.c0;
        b.kind = c == 2 ? ExtendingCase::Gentle : ExtendingCase::ThreeTerm;
        arrows = {{0, 0, "delta0", 1}, {1, 1, "delta1", 1}, {0, 1, "beta", 1}};
        b.delta0 = 0;
        b.delta1 = 1;
        b.beta = {2};
        truncate(0, 0, c);
        truncate(1, 1, c);
        if (c == 3)
            rels.push_back({0, 1, {{1, {2, 1, 1}}, {1, {0, 2, 1}}, {1, {0, 0, 2}}}, "three-term"});
    } else if (key == std::make_tuple(4L, 1L, 1L, 4L)) {
        b.kind = ExtendingCase::BcTranspose;
        arrows = {{0, 0, "delta0", 1}, {0, 1, "beta", 1}};
        b.delta0 = 0;
        b.beta = {1};
        truncate(0, 0, 4);
    } else {
        throw std::invalid_argument("no extending algebra for " + data.label());
    }
    auto alg = std::make_shared<BoundQuiverAlgebra>(2, std::move(arrows), std::move(rels), "B(" + data.label() + ")");
    alg->set_loops({b.delta0, b.delta1}, {b.delta0 >= 0 ? data.c0 : 1, b.delta1 >= 0 ? data.c1 : 1});
    b.algebra = alg;
    if (b.bimodule_dimension() != static_cast<size_t>(data.pairing))
        throw std::logic_error("extending bimodule has the wrong dimension");
    return b;
}

namespace {
Matrix lower_shift(Field f, size_t n) {
    Matrix e(f, n, n);
    for (size_t i = 0; i + 1 < n; ++i) e.set_int(i + 1, i, 1);
    return e;
}
}  // namespace

Representation b_family(const ExtendingAlgebra& b, const ProjectivePoint& lambda, Field f) {
    if (lambda.x == 0 && lambda.y == 0) throw std::invalid_argument("(0:0) is not a point of the projective line");
    const Scalar x(f, lambda.x), y(f, lambda.y);
    std::vector<Matrix> m(b.algebra->arrows().size());
    switch (b.kind) {
        case ExtendingCase::Kronecker: {
            m[b.beta[0]] = Matrix(f, 1, 1);
            m[b.beta[0]].set(0, 0, x);
            m[b.beta[1]] = Matrix(f, 1, 1);
            m[b.beta[1]].set(0, 0, y);
            return Representation(b.algebra, f, {1, 1}, std::move(m));
        }
        case ExtendingCase::Gentle: {
            m[b.delta0] = lower_shift(f, 2);
            m[b.delta1] = lower_shift(f, 2);
            Matrix beta(f, 2, 2);
            if (lambda.is_infinity()) {
                // self-extension of the (1,1) brick
                beta = Matrix::identity(f, 2);
            } else {
                // band: beta x2 = y1, beta x1 = lambda y2
                beta.set_int(0, 1, 1);
                beta.set(1, 0, x / y);
            }
            m[b.beta[0]] = beta;
            return Representation(b.algebra, f, {2, 2}, std::move(m));
        }
        case ExtendingCase::ThreeTerm: {
            m[b.delta0] = lower_shift(f, 3);
            m[b.delta1] = lower_shift(f, 3);
            Matrix beta(f, 3, 3);
            if (lambda.is_infinity()) {
                // filtered by the (1,1) brick, hence Hom-orthogonal to the affine members
                beta = Matrix::from_ints(f, 3, 3, {-2, 0, 0, -1, 1, 0, 0, 0, 1});
            } else {
                // (s : t) = (1 : lambda)
                const Scalar s(f, 1), t = x / y;
                beta.set(0, 0, s - t);
                beta.set(0, 1, s);
                beta.set(1, 0, -s);
                beta.set(1, 1, -s);
                beta.set(1, 2, -s);
                beta.set(2, 0, s);
                beta.set(2, 1, t);
                beta.set(2, 2, t);
            }
            m[b.beta[0]] = beta;
            return Representation(b.algebra, f, {3, 3}, std::move(m));
        }
        case ExtendingCase::BcTranspose: {
            // transpose of the BC1 family member
            m[b.delta0] = lower_shift(f, 4).transpose();
            Matrix beta(f, 2, 4);
            beta.set_int(0, 0, 1);
            beta.set(1, 1, y);
            beta.set(1, 2, x);
            m[b.beta[0]] = beta;
            return Representation(b.algebra, f, {4, 2}, std::move(m));
        }
    }
    throw std::logic_error("unhandled extending case");
}

Representation b_small_brick(const ExtendingAlgebra& b, Field f) {
    if (b.kind != ExtendingCase::Gentle && b.kind != ExtendingCase::ThreeTerm)
        throw std::invalid_argument("the (1,1) brick exists in the gentle and three-term cases");
    std::vector<Matrix> m(b.algebra->arrows().size());
    m[b.delta0] = Matrix(f, 1, 1);
    m[b.delta1] = Matrix(f, 1, 1);
    m[b.beta[0]] = Matrix::identity(f, 1);
    return Representation(b.algebra, f, {1, 1}, std::move(m));
}

bool EtaBrickReport::passed() const {
    bool ok = locally_free && rank_is_eta && end_dim == 1 && hom_to_projectives == 0 && ext1_self == 1 && tau_periodic;
    if (bc1_invariant.has_value() || type == "BC1") ok = ok && bc1_invariant.has_value() && bc1_normal_form_iso;
    return ok;
}

namespace {
EtaBrickReport eta_attempt(const GlsAlgebra& h, uint64_t seed) {
    EtaBrickReport r;
    r.type = h.quiver.name();
    r.seed = seed;
    const RankVector eta = null_root(h.quiver);
    r.module = random_locally_free(h, eta, Field::rationals(), seed);
    const Representation& v = r.module;
    auto lf = is_locally_free(v);
    r.locally_free = lf.locally_free;
    r.rank_is_eta = lf.locally_free && *lf.rank == eta;
    r.end_dim = end_dim(v);
    for (size_t i = 0; i < h.quiver.size(); ++i) r.hom_to_projectives += hom_dim(v, projective(h.algebra, static_cast<int>(i)));
    r.ext1_self = ext1_dim(v, v);
    r.tau_periodic = is_isomorphic(ar_translate(v), v, seed).isomorphic();
    if (r.type == "BC1") {
        r.bc1_invariant = bc1::normal_form_invariant(v);
        if (r.bc1_invariant) r.bc1_normal_form_iso = is_isomorphic(v, bc1::normal_form(h, *r.bc1_invariant), seed).isomorphic();
    }
    return r;
}
}  // namespace

EtaBrickReport eta_brick_sample(const GlsAlgebra& h, uint64_t seed) {
    EtaBrickReport r = eta_attempt(h, seed);
    if (r.passed()) return r;
    return eta_attempt(h, seed ^ 0xa0761d6478bd642fULL);
}

}  // namespace glsw
