#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "glsw/linear.hpp"
#include "glsw/quiver.hpp"

namespace glsw {

ValuedQuiver::ValuedQuiver(std::vector<long> symmetrizer, std::vector<Edge> edges, std::string name)
    : c_(std::move(symmetrizer)), edges_(std::move(edges)), name_(std::move(name)) {
    const int n = static_cast<int>(c_.size());
    for (long ci : c_)
        if (ci <= 0) throw std::invalid_argument("symmetrizer entries must be positive");
    std::vector<std::vector<int>> adj(n);
    for (auto& e : edges_) {
        if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.from == e.to) throw std::invalid_argument("valued quivers have no loops");
        if (e.v_out <= 0 || e.v_in <= 0) throw std::invalid_argument("valuations must be positive");
        if (c_[e.from] * e.v_out != c_[e.to] * e.v_in)
            throw std::invalid_argument("symmetrizer law c_i nu_ij = c_j nu_ji fails on edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
        for (int k : adj[e.from])
            if (k == e.to) throw std::invalid_argument("at most one edge per vertex pair");
        for (int k : adj[e.to])
            if (k == e.from) throw std::invalid_argument("at most one edge per vertex pair");
        adj[e.from].push_back(e.to);
    }
    // acyclicity via Kahn
    std::vector<int> indeg(n, 0);
    for (auto& e : edges_) indeg[e.to]++;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (!indeg[i]) stack.push_back(i);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : adj[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    if (seen != n) throw std::invalid_argument("orientation has an oriented cycle");
}

bool ValuedQuiver::simply_laced() const {
    return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 1; });
}

long ValuedQuiver::nu(int i, int j) const {
    for (auto& e : edges_) {
        if (e.from == i && e.to == j) return e.v_out;
        if (e.from == j && e.to == i) return e.v_in;
    }
    return 0;
}

long ValuedQuiver::g(const Edge& e) const { return std::gcd(e.v_out, e.v_in); }
long ValuedQuiver::f_in(const Edge& e) const { return e.v_in / g(e); }
long ValuedQuiver::f_out(const Edge& e) const { return e.v_out / g(e); }

bool ValuedQuiver::has_arrow(int i, int j) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.from == i && e.to == j; });
}

ValuedQuiver ValuedQuiver::with_source(int v) const {
    std::vector<Edge> es = edges_;
    for (auto& e : es)
        if (e.to == v) {
            std::swap(e.from, e.to);
            std::swap(e.v_out, e.v_in);
        }
    return ValuedQuiver(c_, es, name_);
}

ValuedQuiver ValuedQuiver::reoriented(const std::vector<std::pair<int, int>>& arrows) const {
    std::vector<Edge> es = edges_;
    for (auto& e : es) {
        bool keep = std::find(arrows.begin(), arrows.end(), std::make_pair(e.from, e.to)) != arrows.end();
        bool flip = std::find(arrows.begin(), arrows.end(), std::make_pair(e.to, e.from)) != arrows.end();
        if (!keep && !flip) throw std::invalid_argument("orientation omits an edge");
        if (flip) {
            std::swap(e.from, e.to);
            std::swap(e.v_out, e.v_in);
        }
    }
    return ValuedQuiver(c_, es, name_);
}

namespace {
void check_size(const ValuedQuiver& q, const RankVector& v) {
    if (v.size() != q.size()) throw std::invalid_argument("rank vector length does not match the quiver");
}
}  // namespace

long ringel_form(const ValuedQuiver& q, const RankVector& v, const RankVector& w) {
    check_size(q, v);
    check_size(q, w);
    long s = 0;
    for (size_t i = 0; i < q.size(); ++i) s += q.c(i) * v[i] * w[i];
    for (auto& e : q.edges()) s -= q.c(e.from) * e.v_out * v[e.from] * w[e.to];
    return s;
}

long symmetrized_form(const ValuedQuiver& q, const RankVector& v, const RankVector& w) {
    return ringel_form(q, v, w) + ringel_form(q, w, v);
}

long tits_form(const ValuedQuiver& q, const RankVector& v) { return ringel_form(q, v, v); }

RankVector unit_vector(size_t n, int i) {
    RankVector v(n, 0);
    v[i] = 1;
    return v;
}

RankVector reflect(const ValuedQuiver& q, int i, const RankVector& w) {
    long s = symmetrized_form(q, w, unit_vector(q.size(), i));
    if (s % q.c(i) != 0) throw std::logic_error("reflection leaves the lattice");
    RankVector r = w;
    r[i] -= s / q.c(i);
    return r;
}

namespace {
std::vector<int> topo_sinks_first(const ValuedQuiver& q, std::mt19937_64* rng) {
    const int n = static_cast<int>(q.size());
    std::vector<int> outdeg(n, 0);
    for (auto& e : q.edges()) outdeg[e.from]++;
    std::vector<int> order, avail;
    std::vector<char> done(n, 0);
    for (int step = 0; step < n; ++step) {
        avail.clear();
        for (int i = 0; i < n; ++i)
            if (!done[i] && outdeg[i] == 0) avail.push_back(i);
        int pick = avail.front();
        if (rng) pick = avail[std::uniform_int_distribution<size_t>(0, avail.size() - 1)(*rng)];
        done[pick] = 1;
        order.push_back(pick);
        for (auto& e : q.edges())
            if (e.to == pick) outdeg[e.from]--;
    }
    return order;
}
}  // namespace

std::vector<int> admissible_ordering(const ValuedQuiver& q) { return topo_sinks_first(q, nullptr); }

std::vector<int> admissible_ordering(const ValuedQuiver& q, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return topo_sinks_first(q, &rng);
}

IntMatrix coxeter_matrix(const ValuedQuiver& q, const std::vector<int>& ordering) {
    const size_t n = q.size();
    IntMatrix m(n, std::vector<long>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        RankVector v = unit_vector(n, static_cast<int>(j));
        for (int i : ordering) v = reflect(q, i, v);
        for (size_t i = 0; i < n; ++i) m[i][j] = v[i];
    }
    return m;
}

IntMatrix coxeter_matrix(const ValuedQuiver& q) { return coxeter_matrix(q, admissible_ordering(q)); }

RankVector apply_matrix(const IntMatrix& m, const RankVector& v) {
    RankVector r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    const size_t n = m.size();
    Matrix a(Field::rationals(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a.set_int(i, j, m[i][j]);
    auto inv = inverse(a);
    if (!inv) throw std::invalid_argument("matrix is singular");
    IntMatrix r(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const mpq_class& x = inv->q(i, j);
            if (x.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
            r[i][j] = x.get_num().get_si();
        }
    return r;
}

RankVector null_root(const ValuedQuiver& q) {
    const size_t n = q.size();
    Matrix cartan(Field::rationals(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            cartan.set_int(i, j, symmetrized_form(q, unit_vector(n, static_cast<int>(i)), unit_vector(n, static_cast<int>(j))));
    auto ker = kernel_basis(cartan);
    if (ker.size() != 1) throw std::invalid_argument("not affine: radical has rank " + std::to_string(ker.size()));
    // clear denominators, make primitive and positive
    mpz_class l = 1;
    for (auto& s : ker[0]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (auto& s : ker[0]) {
        mpq_class t = s.rational() * l;
        ints.push_back(t.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num_mpz_t());
    }
    RankVector eta;
    int sign = 0;
    for (auto& z : ints) {
        mpz_class v = z / g;
        if (sign == 0 && v != 0) sign = v > 0 ? 1 : -1;
        eta.push_back(v.get_si());
    }
    for (auto& x : eta) {
        x *= sign;
        if (x <= 0) throw std::invalid_argument("not affine: radical generator is not sincere positive");
    }
    // positive semidefinite: q >= 0 on a sample box would be costly; affine graphs have sincere radical
    return eta;
}

long defect(const ValuedQuiver& q, const RankVector& v) { return ringel_form(q, null_root(q), v); }

bool is_positive_real_root(const ValuedQuiver& q, const RankVector& v0) {
    check_size(q, v0);
    RankVector v = v0;
    const size_t n = q.size();
    bool nonzero = false;
    for (long x : v) {
        if (x < 0) return false;
        nonzero |= x != 0;
    }
    if (!nonzero) return false;
    while (true) {
        long total = 0;
        int support = -1, count = 0;
        for (size_t i = 0; i < n; ++i)
            if (v[i] != 0) {
                ++count;
                support = static_cast<int>(i);
                total += v[i];
            }
        if (count == 1 && total == 1) return true;
        if (count == 0) return false;
        bool moved = false;
        for (size_t i = 0; i < n; ++i) {
            long s = symmetrized_form(q, v, unit_vector(n, static_cast<int>(i)));
            if (s <= 0) continue;
            if (s % q.c(i) != 0) return false;
            v[i] -= s / q.c(i);
            if (v[i] < 0) return false;
            moved = true;
            break;
        }
        // trapped in the fundamental region: q(v) <= 0, so v is imaginary or not a root
        if (!moved) return false;
        (void)support;
    }
}

ValuedQuiver ExtendingData::upsilon() const {
    return ValuedQuiver({c0, c1}, {Edge{0, 1, nu01, nu10}}, "upsilon");
}

std::string ExtendingData::label() const {
    return std::to_string(c0) + " ->[" + std::to_string(nu10) + "|" + std::to_string(nu01) + "] " + std::to_string(c1);
}

ExtendingData extending_data(const CatalogEntry& entry) {
    if (entry.family == "A" && entry.rank >= 2) throw std::invalid_argument("extending data excludes type A_n with n >= 2");
    const ValuedQuiver& q = entry.quiver;
    const size_t n = q.size();
    ExtendingData d;
    d.vertex = entry.extending_vertex;
    RankVector eta = null_root(q);
    RankVector red = eta;
    red[d.vertex] -= 1;
    if (entry.is_bc())
        for (auto& x : red) {
            if (x % 2) throw std::logic_error("reduced root is not integral");
            x /= 2;
        }
    d.eta_reduced = red;
    d.c0 = q.c(d.vertex);
    d.c1 = tits_form(q, red);
    // with the extending vertex a source, <alpha_0, eta'> equals the symmetrized pairing
    // since eta' vanishes at the extending vertex; it is non-positive, we keep its size
    d.pairing = std::labs(symmetrized_form(q, unit_vector(n, d.vertex), red));
    if (d.pairing % d.c0 || d.pairing % d.c1) throw std::logic_error("extending type violates the symmetrizer law");
    d.nu01 = d.pairing / d.c0;
    d.nu10 = d.pairing / d.c1;
    if (!is_positive_real_root(q, red)) throw std::logic_error("reduced root is not a positive real root");
    return d;
}

}  // namespace glsw
