#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glsw/linear.hpp"

namespace glsw {

// Coefficients low degree first; the zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;
using PolyFp = std::vector<uint32_t>;

// Monic annihilator of least degree (iterated Krylov: multiply in the local
// minimal polynomial of f(M) e_i for each basis vector e_i).
Poly minimal_polynomial(const Matrix& m);
Matrix poly_eval(const Poly& f, const Matrix& m);

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_from_fp(const PolyFp& f, Field field);
PolyFp poly_to_fp(const Poly& f);

namespace fp {
void trim(PolyFp& f);
int degree(const PolyFp& f);
PolyFp mul(const PolyFp& a, const PolyFp& b, uint32_t p);
PolyFp sub(const PolyFp& a, const PolyFp& b, uint32_t p);
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, uint32_t p);
PolyFp gcd(PolyFp a, PolyFp b, uint32_t p);
PolyFp monic(const PolyFp& f, uint32_t p);
PolyFp derivative(const PolyFp& f, uint32_t p);
PolyFp powmod(PolyFp base, uint64_t e, const PolyFp& mod, uint32_t p);
PolyFp pow(const PolyFp& f, unsigned e, uint32_t p);
}  // namespace fp

// Complete factorization into monic irreducibles with multiplicities, sorted by
// (degree, coefficients). Throws on the zero polynomial.
std::vector<std::pair<PolyFp, int>> factor_primefield(const PolyFp& f, uint32_t p);

}  // namespace glsw
