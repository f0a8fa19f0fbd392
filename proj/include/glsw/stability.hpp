#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glsw/gls.hpp"
#include "glsw/quiver.hpp"
#include "glsw/representation.hpp"

namespace glsw {

// Linear functional on dimension vectors.
struct Weight {
    std::vector<mpq_class> coords;
    std::string provenance;  // "defect", "lf-class" or "custom"
    mpq_class operator()(const DimVector& d) const;
    std::string to_string() const;
};

// d -> <w, D^{-1} d> for a rank vector w
Weight weight_from_lf_class(const ValuedQuiver& q, const RankVector& w);
// weight_from_lf_class(eta)
Weight defect_weight(const ValuedQuiver& q);

struct StabilityConfig {
    size_t max_dim = 8;
    size_t enum_cap = 1000000;
    std::vector<uint32_t> primes{3, 5, 7};
};

// All subrepresentations of a module over F_p: every submodule is a sum of
// cyclic submodules generated at single vertices.
struct SubmoduleLattice {
    std::vector<std::vector<Matrix>> members;  // column bases per vertex
    size_t cyclic_generators = 0;
    size_t closure_rounds = 0;
    bool complete = true;
};

SubmoduleLattice submodules(const Representation& v, const StabilityConfig& cfg = {});

enum class StabilityVerdict { NotSemistable, Semistable, Stable, Unknown };
std::string to_string(StabilityVerdict v);

struct StabilityResult {
    Field field;
    bool complete = true;
    bool candidate = true;  // theta(V) = 0
    StabilityVerdict verdict = StabilityVerdict::Unknown;
    std::optional<std::vector<Matrix>> witness;  // destabilizing subrepresentation
    DimVector witness_dim;
    mpq_class witness_value;
    size_t lattice_size = 0;
};

struct StabilityReport {
    std::vector<StabilityResult> per_field;
    StabilityVerdict verdict = StabilityVerdict::Unknown;
    std::string label;  // "finite-field certified" for rational input
    bool semistable() const { return verdict == StabilityVerdict::Semistable || verdict == StabilityVerdict::Stable; }
    bool stable() const { return verdict == StabilityVerdict::Stable; }
};

// Over F_p directly; a rational module is reduced mod each configured prime
// and the verdicts are combined.
StabilityResult check_stability_fp(const Representation& v, const Weight& theta, const StabilityConfig& cfg = {});
StabilityReport check_stability(const Representation& v, const Weight& theta, const StabilityConfig& cfg = {});
bool is_semistable(const Representation& v, const Weight& theta, const StabilityConfig& cfg = {});
bool is_stable(const Representation& v, const Weight& theta, const StabilityConfig& cfg = {});

struct RegularTauRigidReport {
    RankVector v;
    std::string rejection;  // empty when the precondition holds
    bool rigid = false;
    StabilityReport stability;
    long phi_period = 0;  // 0 when not periodic within the bound
    bool tau_rank_matches = false;
    bool passed() const;
};

RegularTauRigidReport regular_tau_rigid_check(const GlsAlgebra& h, const RankVector& v, uint64_t seed,
                                              const StabilityConfig& cfg = {});

}  // namespace glsw
