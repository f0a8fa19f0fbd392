#include "glsw/krull_schmidt.hpp"

#include <algorithm>
#include <random>

#include "glsw/homological.hpp"
#include "glsw/polynomial.hpp"

namespace glsw {

namespace {

void split(const Representation& v, std::mt19937_64& rng, std::vector<Representation>& out) {
    if (v.is_zero()) return;
    HomSpace e = hom_basis(v, v);
    if (e.dimension() <= 1) {
        out.push_back(v);
        return;
    }
    const Field f = v.field();
    const uint32_t p = f.modulus();
    const size_t n = v.dims().size();
    for (int attempt = 0; attempt < kMaxNonSplits; ++attempt) {
        std::vector<Matrix> phi;
        for (size_t i = 0; i < n; ++i) phi.emplace_back(f, v.dim(static_cast<int>(i)), v.dim(static_cast<int>(i)));
        for (auto& b : e.basis) {
            Scalar s = random_scalar(f, rng);
            for (size_t i = 0; i < n; ++i) phi[i] = phi[i] + b[i].scaled(s);
        }
        PolyFp mu = poly_to_fp(minimal_polynomial(block_diagonal(phi, f)));
        auto factors = factor_primefield(mu, p);
        if (factors.size() < 2) continue;
        PolyFp g = fp::pow(factors[0].first, static_cast<unsigned>(factors[0].second), p);
        PolyFp h = fp::divmod(mu, g, p).first;
        Poly gp = poly_from_fp(g, f), hp = poly_from_fp(h, f);
        std::vector<Matrix> kg, kh;
        for (size_t i = 0; i < n; ++i) {
            kg.push_back(kernel_matrix(poly_eval(gp, phi[i])));
            kh.push_back(kernel_matrix(poly_eval(hp, phi[i])));
        }
        split(subrepresentation(v, kg), rng, out);
        split(subrepresentation(v, kh), rng, out);
        return;
    }
    out.push_back(v);
}

}  // namespace

std::vector<Representation> krull_schmidt(const Representation& v, uint64_t seed) {
    if (!v.field().is_prime()) throw std::invalid_argument("Krull-Schmidt decomposition needs a prime field");
    std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dULL);
    std::vector<Representation> out;
    split(v, rng, out);
    std::stable_sort(out.begin(), out.end(),
                     [](const Representation& a, const Representation& b) { return a.dimension_vector() < b.dimension_vector(); });
    return out;
}

}  // namespace glsw
