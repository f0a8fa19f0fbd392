#include "glsw/polynomial.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace glsw {

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar(a[0].field()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Matrix poly_eval(const Poly& f, const Matrix& m) {
    Matrix acc(m.field(), m.rows(), m.cols());
    for (size_t k = f.size(); k-- > 0;) {
        acc = acc * m;
        for (size_t i = 0; i < m.rows(); ++i) acc.add_to(i, i, f[k]);
    }
    return acc;
}

namespace {
Vec eval_on_vector(const Poly& f, const Matrix& m, const Vec& v) {
    Vec acc = zero_vec(m.field(), v.size());
    for (size_t k = f.size(); k-- > 0;) {
        acc = m.apply(acc);
        for (size_t i = 0; i < v.size(); ++i) acc[i] += f[k] * v[i];
    }
    return acc;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// monic local minimal polynomial of w with respect to m
Poly local_minpoly(const Matrix& m, const Vec& w) {
    const Field f = m.field();
    std::vector<Vec> krylov{w};
    while (true) {
        Vec next = m.apply(krylov.back());
        Matrix k = Matrix::from_columns(f, w.size(), krylov);
        if (auto c = solve(k, next)) {
            Poly mu;
            for (auto& s : *c) mu.push_back(-s);
            mu.push_back(Scalar(f, 1));
            return mu;
        }
        krylov.push_back(std::move(next));
    }
}
}  // namespace

Poly minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal polynomial of non-square matrix");
    const Field f = m.field();
    Poly acc{Scalar(f, 1)};
    for (size_t i = 0; i < m.rows(); ++i) {
        Vec e = zero_vec(f, m.rows());
        e[i] = Scalar(f, 1);
        Vec w = eval_on_vector(acc, m, e);
        if (vec_is_zero(w)) continue;
        acc = poly_mul(acc, local_minpoly(m, w));
    }
    return acc;
}

Poly poly_from_fp(const PolyFp& f, Field field) {
    Poly r;
    for (uint32_t c : f) r.push_back(Scalar::residue(field, c));
    return r;
}

PolyFp poly_to_fp(const Poly& f) {
    PolyFp r;
    for (auto& s : f) {
        if (!s.field().is_prime()) throw FieldMismatch("poly_to_fp on a rational polynomial");
        r.push_back(s.residue());
    }
    fp::trim(r);
    return r;
}

namespace fp {

void trim(PolyFp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const PolyFp& f) { return static_cast<int>(f.size()) - 1; }

PolyFp mul(const PolyFp& a, const PolyFp& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    }
    PolyFp out(r.begin(), r.end());
    trim(out);
    return out;
}

PolyFp sub(const PolyFp& a, const PolyFp& b, uint32_t p) {
    PolyFp r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = static_cast<uint32_t>((x + p - y) % p);
    }
    trim(r);
    return r;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, uint32_t p) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    PolyFp r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    PolyFp q(r.size() - b.size() + 1, 0);
    uint32_t inv = mod_inverse(b.back(), p);
    for (size_t k = q.size(); k-- > 0;) {
        uint64_t c = static_cast<uint64_t>(r[k + b.size() - 1]) * inv % p;
        q[k] = static_cast<uint32_t>(c);
        if (!c) continue;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] = static_cast<uint32_t>((r[k + j] + (p - c) * b[j]) % p);
    }
    trim(r);
    trim(q);
    return {q, r};
}

PolyFp monic(const PolyFp& f, uint32_t p) {
    if (f.empty()) return f;
    uint32_t inv = mod_inverse(f.back(), p);
    PolyFp r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = static_cast<uint32_t>(static_cast<uint64_t>(f[i]) * inv % p);
    return r;
}

PolyFp gcd(PolyFp a, PolyFp b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyFp r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

PolyFp derivative(const PolyFp& f, uint32_t p) {
    PolyFp d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(static_cast<uint32_t>(static_cast<uint64_t>(i % p) * f[i] % p));
    trim(d);
    return d;
}

PolyFp powmod(PolyFp base, uint64_t e, const PolyFp& mod, uint32_t p) {
    PolyFp r{1};
    base = divmod(base, mod, p).second;
    while (e) {
        if (e & 1) r = divmod(mul(r, base, p), mod, p).second;
        e >>= 1;
        if (e) base = divmod(mul(base, base, p), mod, p).second;
    }
    return r;
}

PolyFp pow(const PolyFp& f, unsigned e, uint32_t p) {
    PolyFp r{1};
    for (unsigned k = 0; k < e; ++k) r = mul(r, f, p);
    return r;
}

}  // namespace fp

namespace {

using Factors = std::vector<std::pair<PolyFp, int>>;

// square-free factorization over F_p (handles p-th powers)
void squarefree(const PolyFp& f, uint32_t p, int mult, Factors& out) {
    if (fp::degree(f) < 1) return;
    PolyFp d = fp::derivative(f, p);
    if (d.empty()) {
        // f(x) = g(x^p): the p-th root of a coefficient is itself in F_p
        PolyFp g;
        for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
        squarefree(g, p, mult * static_cast<int>(p), out);
        return;
    }
    PolyFp c = fp::gcd(f, d, p);
    PolyFp w = fp::divmod(f, c, p).first;
    int i = 1;
    while (fp::degree(w) > 0) {
        PolyFp y = fp::gcd(w, c, p);
        PolyFp fac = fp::divmod(w, y, p).first;
        if (fp::degree(fac) > 0) out.push_back({fp::monic(fac, p), i * mult});
        w = y;
        c = fp::divmod(c, y, p).first;
        ++i;
    }
    if (fp::degree(c) > 0) {
        PolyFp g;
        for (size_t k = 0; k < c.size(); k += p) g.push_back(c[k]);
        squarefree(g, p, mult * static_cast<int>(p), out);
    }
}

// distinct-degree split of a monic square-free polynomial
std::vector<std::pair<PolyFp, int>> distinct_degree(PolyFp f, uint32_t p) {
    std::vector<std::pair<PolyFp, int>> out;
    PolyFp h{0, 1};  // x
    const PolyFp x{0, 1};
    for (int d = 1; 2 * d <= fp::degree(f); ++d) {
        h = fp::powmod(h, p, f, p);
        PolyFp g = fp::gcd(f, fp::sub(h, x, p), p);
        if (fp::degree(g) > 0) {
            out.push_back({g, d});
            f = fp::divmod(f, g, p).first;
            h = fp::divmod(h, f, p).second;
        }
    }
    if (fp::degree(f) > 0) out.push_back({f, fp::degree(f)});
    return out;
}

void equal_degree(const PolyFp& f, int d, uint32_t p, std::mt19937_64& rng, std::vector<PolyFp>& out) {
    int n = fp::degree(f);
    if (n == d) {
        out.push_back(fp::monic(f, p));
        return;
    }
    std::uniform_int_distribution<uint32_t> coin(0, p - 1);
    while (true) {
        PolyFp a(n, 0);
        for (auto& c : a) c = coin(rng);
        fp::trim(a);
        if (fp::degree(a) < 1) continue;
        PolyFp b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            PolyFp t = a, acc = a;
            for (int k = 1; k < d; ++k) {
                t = fp::divmod(fp::mul(t, t, p), f, p).second;
                acc = fp::sub(acc, fp::sub({}, t, p), p);
            }
            b = acc;
        } else {
            uint64_t e = 1;
            for (int k = 0; k < d; ++k) e *= p;
            b = fp::sub(fp::powmod(a, (e - 1) / 2, f, p), {1}, p);
        }
        PolyFp g = fp::gcd(f, b, p);
        if (fp::degree(g) > 0 && fp::degree(g) < n) {
            equal_degree(g, d, p, rng, out);
            equal_degree(fp::divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<PolyFp, int>> factor_primefield(const PolyFp& f0, uint32_t p) {
    PolyFp f = f0;
    fp::trim(f);
    if (f.empty()) throw std::invalid_argument("cannot factor the zero polynomial");
    f = fp::monic(f, p);
    Factors sqf;
    squarefree(f, p, 1, sqf);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    Factors out;
    for (auto& [g, m] : sqf) {
        for (auto& [part, d] : distinct_degree(g, p)) {
            std::vector<PolyFp> irr;
            equal_degree(part, d, p, rng, irr);
            for (auto& q : irr) out.push_back({q, m});
        }
    }
    // merge equal factors (can arise from the p-th power recursion)
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    Factors merged;
    for (auto& fm : out) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(fm);
    }
    return merged;
}

}  // namespace glsw
