#pragma once

#include <cstdint>
#include <vector>

#include "glsw/representation.hpp"

namespace glsw {

// Fitting decomposition by random endomorphisms over a prime field. A summand
// is declared indecomposable once End is one-dimensional or after
// kMaxNonSplits consecutive samples whose minimal polynomial is a prime power.
// Summands come back sorted by dimension vector.
inline constexpr int kMaxNonSplits = 12;

std::vector<Representation> krull_schmidt(const Representation& v, uint64_t seed = 0);

}  // namespace glsw
