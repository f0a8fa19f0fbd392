#pragma once

#include <optional>
#include <vector>

#include "glsw/algebra.hpp"
#include "glsw/quiver.hpp"
#include "glsw/representation.hpp"

namespace glsw {

// H(Gamma) with a loop at every vertex with c_i > 1 (loops with c_i = 1 vanish
// in the algebra and are omitted).
struct GlsAlgebra {
    ValuedQuiver quiver;
    AlgebraPtr algebra;
    std::vector<int> loop;                     // arrow index of the loop at i, or -1
    std::vector<std::vector<int>> edge_arrows;  // per edge of the quiver: the g parallel copies
};

GlsAlgebra gls_presentation(const ValuedQuiver& q);

Representation projective(const AlgebraPtr& a, int vertex, Field f = Field::rationals());
Representation injective(const AlgebraPtr& a, int vertex, Field f = Field::rationals());
Representation generalized_simple(const GlsAlgebra& h, int vertex, Field f = Field::rationals());
// Simple module at a vertex
Representation simple(const AlgebraPtr& a, int vertex, Field f = Field::rationals());

// Simply-laced quiver with vertices (i,k), k in Z/c_i.
struct UnfoldedQuiver {
    ValuedQuiver quiver;                     // c = 1, nu = number of parallel arrows
    std::vector<std::pair<int, int>> label;  // (i, k) per unfolded vertex
    std::vector<std::vector<int>> fiber;     // unfolded vertices over i
    std::vector<int> rotation;               // (i,k) -> (i,k+1)

    RankVector unfold(const RankVector& v) const;  // the fiber-sum embedding
    std::optional<RankVector> fold_class(const RankVector& d) const;
};

UnfoldedQuiver unfold(const ValuedQuiver& q);

}  // namespace glsw
