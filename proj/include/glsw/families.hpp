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

// Point (x : y) of the projective line over Q; infinity is (1 : 0).
struct ProjectivePoint {
    mpq_class x = 0, y = 1;
    static ProjectivePoint affine(const mpq_class& value) { return {value, 1}; }
    static ProjectivePoint infinity() { return {1, 0}; }
    bool is_infinity() const { return y == 0; }
    std::string to_string() const;
};

// The grid {0, ..., 9, infinity} used by the family suites.
std::vector<ProjectivePoint> lambda_grid();

// Affine type BC1: vertex 0 carries the loop (c = 4), vertex 1 has c = 1,
// and the arrow points 1 -> 0.
namespace bc1 {

GlsAlgebra algebra();
IntMatrix expected_coxeter();
RankVector expected_defect();  // on dimension vectors

// Rank vectors of tau^{-n} P_i and tau^n I_i (vertex 0 or 1)
RankVector preprojective_root(int vertex, long n);
RankVector preinjective_root(int vertex, long n);
// Tabulated g-vector tuples of the same modules
std::vector<long> listed_g_preprojective(int vertex, long n);
std::vector<long> listed_g_preinjective(int vertex, long n);
// The tabulated tuples use coordinates (-g_1, c_0 (g_0 + g_1)) relative to the
// basis of indecomposable projectives.
std::vector<long> to_listed_coordinates(const std::vector<long>& g);

// Rank (1,2): loop the regular nilpotent, arrow columns (1,0,0,0), (0,y,x,0)
Representation family_member(const GlsAlgebra& h, const ProjectivePoint& lambda, Field f = Field::rationals());
// Dimension (2,1): arrow (1,0)^T, loop the nilpotent 2-block
Representation v_bar_infinity(const GlsAlgebra& h, Field f = Field::rationals());
Representation preprojective(const GlsAlgebra& h, int vertex, long n);
Representation preinjective(const GlsAlgebra& h, int vertex, long n);

// For a locally free module of rank (1,2) in general position: the arrow spans
// span(1, q) in K[e]/e^4 after a unit change, q = e + k e^3 with k the returned
// invariant. The family member at lambda has k = -lambda^2.
std::optional<mpq_class> normal_form_invariant(const Representation& v);
Representation normal_form(const GlsAlgebra& h, const mpq_class& invariant, Field f = Field::rationals());

}  // namespace bc1

enum class ExtendingCase { Kronecker, Gentle, ThreeTerm, BcTranspose };
std::string to_string(ExtendingCase c);

struct ExtendingAlgebra {
    ExtendingCase kind = ExtendingCase::Kronecker;
    ExtendingData data;
    AlgebraPtr algebra;
    int delta0 = -1, delta1 = -1;  // loop arrows, -1 when absent
    std::vector<int> beta;         // arrows 0 -> 1
    size_t bimodule_dimension() const { return algebra->corner(1, 0).size(); }
};

ExtendingAlgebra extending_algebra(const ExtendingData& data);

// The quasi-simple generating family over the extending algebra.
Representation b_family(const ExtendingAlgebra& b, const ProjectivePoint& lambda, Field f = Field::rationals());
// The dimension (1,1) brick of the gentle and three-term cases.
Representation b_small_brick(const ExtendingAlgebra& b, Field f = Field::rationals());

struct EtaBrickReport {
    std::string type;
    uint64_t seed = 0;
    Representation module;
    bool locally_free = false;
    bool rank_is_eta = false;
    size_t end_dim = 0;
    size_t hom_to_projectives = 0;
    size_t ext1_self = 0;
    bool tau_periodic = false;
    // BC1 only: normal-form invariant and the certificate against it
    std::optional<mpq_class> bc1_invariant;
    bool bc1_normal_form_iso = false;
    bool passed() const;
};

// Generic locally free module of rank eta with the null-family checks; retries
// once with a derived seed.
EtaBrickReport eta_brick_sample(const GlsAlgebra& h, uint64_t seed);

}  // namespace glsw
