#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "glsw/gls.hpp"
#include "glsw/representation.hpp"

namespace glsw {

// Minimal projective presentation P1 -> P0 -> V -> 0 with
// P0 = sum_r H e_{top0[r]} and P1 = sum_c H e_{top1[c]}; the map sends the
// generator of summand c to sum_r map[r][c], map[r][c] in e_{top1[c]} H e_{top0[r]}.
struct Presentation {
    std::vector<int> top0, top1;
    std::vector<std::vector<AlgElem>> map;
    Representation cover;    // P0
    Representation syzygy;   // kernel of P0 -> V
    std::vector<Matrix> projection;  // P0 -> V per vertex
    std::vector<long> g_vector(size_t vertices) const;
};

Presentation minimal_presentation(const Representation& v);
// [P0] - [P1] in the basis of indecomposable projectives
std::vector<long> g_vector(const Representation& v);

// dim Ext^1 via the syzygy: hom(K,W) - hom(P0,W) + hom(V,W)
size_t ext1_dim(const Representation& v, const Representation& w);
// Locally free shortcut hom(V,W) - <rkv V, rkv W>; V must be locally free
long ext1_dim_euler(const GlsAlgebra& h, const Representation& v, const Representation& w);

// tau V = kernel of nu(P1) -> nu(P0); tau^- by duality over the opposite algebra
Representation ar_translate(const Representation& v);
Representation ar_inverse(const Representation& v);

enum class IsoVerdict { Isomorphic, NotIsomorphic, ProbablyNot };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::ProbablyNot;
    std::optional<std::vector<Matrix>> certificate;
    bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
};

IsoResult is_isomorphic(const Representation& v, const Representation& w, uint64_t seed = 0, int attempts = 20);

// Loops block-regular nilpotent, arrows a random solution of the commutation
// relations; rationals sample free entries in [-box, box].
Representation random_locally_free(const GlsAlgebra& h, const RankVector& rank, Field f, uint64_t seed, long box = 50);

// Random scalar of a field: uniform in [-box, box] over Q, uniform over F_p.
Scalar random_scalar(Field f, std::mt19937_64& rng, long box = 50);

}  // namespace glsw
