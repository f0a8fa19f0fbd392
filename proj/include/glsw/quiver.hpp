#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glsw {

using RankVector = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

// Arrow from -> to; v_out = nu_{from,to} (the weight in the Ringel form),
// v_in = nu_{to,from}.
struct Edge {
    int from = 0, to = 0;
    long v_out = 1, v_in = 1;
};

class ValuedQuiver {
public:
    ValuedQuiver() = default;
    ValuedQuiver(std::vector<long> symmetrizer, std::vector<Edge> edges, std::string name = "");

    size_t size() const { return c_.size(); }
    const std::vector<long>& symmetrizer() const { return c_; }
    long c(int i) const { return c_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name() const { return name_; }
    bool simply_laced() const;

    // nu_ij for the unordered edge {i,j}; 0 when i and j are not adjacent
    long nu(int i, int j) const;
    // for the arrow i -> j: g = gcd(nu_ji, nu_ij); f_ji = nu_ji / g; f_ij = nu_ij / g
    long g(const Edge& e) const;
    long f_in(const Edge& e) const;   // f_{to,from}: exponent of the loop at the source
    long f_out(const Edge& e) const;  // f_{from,to}: exponent of the loop at the target
    bool has_arrow(int i, int j) const;

    // same graph, with every arrow touching v pointing away from v
    ValuedQuiver with_source(int v) const;
    ValuedQuiver reoriented(const std::vector<std::pair<int, int>>& arrows) const;

private:
    std::vector<long> c_;
    std::vector<Edge> edges_;
    std::string name_;
};

long ringel_form(const ValuedQuiver& q, const RankVector& v, const RankVector& w);
long symmetrized_form(const ValuedQuiver& q, const RankVector& v, const RankVector& w);
long tits_form(const ValuedQuiver& q, const RankVector& v);
RankVector unit_vector(size_t n, int i);
RankVector reflect(const ValuedQuiver& q, int i, const RankVector& w);

// Sinks first: a path i_s ~> i_t forces s >= t. Ties broken by index; the
// seeded variant picks uniformly among available sinks.
std::vector<int> admissible_ordering(const ValuedQuiver& q);
std::vector<int> admissible_ordering(const ValuedQuiver& q, uint64_t seed);
IntMatrix coxeter_matrix(const ValuedQuiver& q);
IntMatrix coxeter_matrix(const ValuedQuiver& q, const std::vector<int>& ordering);
RankVector apply_matrix(const IntMatrix& m, const RankVector& v);
IntMatrix inverse_unimodular(const IntMatrix& m);

// Affine structure
RankVector null_root(const ValuedQuiver& q);
long defect(const ValuedQuiver& q, const RankVector& v);
bool is_positive_real_root(const ValuedQuiver& q, const RankVector& v);

struct Tube {
    std::vector<RankVector> quasi_simples;  // v_{lambda,k}, k in Z/r, v_{k+1} = Phi(v_k)
    long rank = 0;
    long tier = 0;          // q of a quasi-simple
    long sum_multiple = 0;  // the sum of the quasi-simples is this multiple of eta
};

struct RootSystemData {
    RankVector eta;
    RankVector defect;  // coefficients: d(v) = sum defect_i v_i
    std::vector<Tube> tubes;
    long tier = 0;  // computed; 0 when no tube carries real quasi-simple roots
    std::optional<long> catalog_tier;
    bool tier_matches_catalog = true;
};

RootSystemData tubes(const ValuedQuiver& q, std::optional<long> catalog_tier = std::nullopt);

struct ExtendingData {
    int vertex = 0;
    RankVector eta_reduced;
    long c0 = 0, c1 = 0;
    long nu01 = 0, nu10 = 0;  // arrow 0 -> 1 of the extending type
    long pairing = 0;         // c0 nu01 = c1 nu10 = |<alpha_0, eta'>|
    ValuedQuiver upsilon() const;
    std::string label() const;
};

// Catalog of affine valued graphs
struct CatalogEntry {
    std::string family;  // "A1","A","B","C","D","BC1","BC","BD","CD","E6","E7","E8","F41","F42","G21","G23"
    int rank = 0;
    ValuedQuiver quiver;
    RankVector eta;  // tabulated null root
    int extending_vertex = 0;
    long tier = 0;  // tabulated
    std::vector<std::string> vertex_labels;
    bool is_bc() const { return family == "BC1" || family == "BC"; }
};

class UnknownFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> catalog_families();
int default_rank(const std::string& family);
std::pair<int, int> rank_range(const std::string& family);
// Throws UnknownFamily for an unknown name or rank; orientation overrides the default
CatalogEntry catalog_affine(const std::string& family, int rank = 0);
CatalogEntry catalog_affine(const std::string& family, int rank, const std::vector<std::pair<int, int>>& orientation);
// Parse names like "BC1", "C2", "E8", "A3", "G21"
CatalogEntry catalog_by_name(const std::string& name);

ExtendingData extending_data(const CatalogEntry& entry);

}  // namespace glsw
