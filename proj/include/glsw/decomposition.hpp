#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glsw/gls.hpp"
#include "glsw/quiver.hpp"
#include "glsw/representation.hpp"

namespace glsw {

// A randomized conclusion that could not be certified, even after a retry.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr uint32_t kGenericPrime = 101;

using RootMultiset = std::vector<std::pair<RankVector, long>>;  // sorted, multiplicity > 0

struct SummandEvidence {
    RankVector dimension;  // rank vector for folded reports
    size_t end_dim = 0;
    size_t ext1_self = 0;
};

struct KacDecomposition {
    RootMultiset summands;  // dimension vectors of the unfolded quiver
    long null_multiplicity = 0;
    std::vector<SummandEvidence> evidence;
    std::vector<uint64_t> seeds;
};

// Generic decomposition of the path algebra of a simply-laced affine quiver:
// sample over F_p, Krull-Schmidt, certify by pairwise Ext vanishing, a second
// seed and a rational End-dimension cross-check.
KacDecomposition kac_decomposition_unfolded(const ValuedQuiver& unfolded, const RankVector& d, uint64_t seed);

struct DecompositionReport {
    RankVector v;
    long m = 0;
    RankVector w;
    RootMultiset certified;          // folded summands of w
    RootMultiset unfolded_summands;  // Kac summands upstairs
    bool rotation_invariant = false;
    std::vector<SummandEvidence> evidence;  // module evidence when sampled downstairs
    std::vector<uint64_t> seeds;
};

DecompositionReport folded_decomposition(const ValuedQuiver& q, const RankVector& v, uint64_t seed);

// Rigid locally free module of rank w, unique up to isomorphism.
Representation rigid_of_rank(const GlsAlgebra& h, const RankVector& w, uint64_t seed, Field f = Field::rationals());

// Folded decomposition plus a Krull-Schmidt profile of a sampled generic
// locally free module of rank v over F_p.
DecompositionReport generic_decomposition_report(const GlsAlgebra& h, const RankVector& v, uint64_t seed);

RootMultiset to_multiset(std::vector<RankVector> vectors);

}  // namespace glsw
