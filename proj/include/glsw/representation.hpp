#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glsw/algebra.hpp"
#include "glsw/linear.hpp"
#include "glsw/quiver.hpp"

namespace glsw {

using DimVector = std::vector<long>;

// A module over a bound quiver algebra: a space per vertex and a matrix per
// arrow (target dim x source dim), loops included.
class Representation {
public:
    Representation() = default;
    Representation(AlgebraPtr algebra, Field field, std::vector<size_t> dims, std::vector<Matrix> arrows);
    static Representation zero(AlgebraPtr algebra, Field field);

    const BoundQuiverAlgebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    const Field& field() const { return field_; }
    const std::vector<size_t>& dims() const { return dims_; }
    size_t dim(int v) const { return dims_[v]; }
    size_t total_dim() const;
    DimVector dimension_vector() const;
    const Matrix& arrow(int a) const { return arrows_[a]; }
    const std::vector<Matrix>& arrows() const { return arrows_; }
    bool is_zero() const { return total_dim() == 0; }

    // matrix of a path (traversal order) starting at source
    Matrix path_matrix(const Path& p, int source) const;
    // action of an algebra element in e_t H e_s as a map V(s) -> V(t)
    Matrix element_matrix(const AlgElem& x, int target, int source) const;
    Representation reduce_to(Field f) const;

private:
    AlgebraPtr alg_;
    Field field_;
    std::vector<size_t> dims_;
    std::vector<Matrix> arrows_;
};

struct Violation {
    size_t relation = 0;
    std::string label;
};

std::vector<Violation> validate(const Representation& v);

struct LocalFreeness {
    bool locally_free = false;
    std::optional<RankVector> rank;
};

// Needs loop markers on the algebra (GLS algebras carry them).
LocalFreeness is_locally_free(const Representation& v);

struct HomSpace {
    std::vector<std::vector<Matrix>> basis;  // one matrix per vertex, W(i) x V(i)
    size_t dimension() const { return basis.size(); }
};

HomSpace hom_basis(const Representation& v, const Representation& w);
size_t hom_dim(const Representation& v, const Representation& w);
size_t end_dim(const Representation& v);
bool is_intertwiner(const Representation& v, const Representation& w, const std::vector<Matrix>& f);

// Subrepresentation spanned by column bases per vertex (must be arrow-stable).
Representation subrepresentation(const Representation& v, const std::vector<Matrix>& bases);
// Quotient by an arrow-stable subspace; returns the quotient and per-vertex projections.
Representation quotient(const Representation& v, const std::vector<Matrix>& bases);
Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);
// Linear dual, a module over the opposite algebra.
Representation dual(const Representation& v);
// Transport a module along a change of basis g_i at every vertex.
Representation conjugate(const Representation& v, const std::vector<Matrix>& g);
// Kernel of an intertwiner as a subrepresentation of the source.
Representation kernel_of(const Representation& v, const std::vector<Matrix>& f);
// Smallest subrepresentation containing the given vectors at the given vertex.
std::vector<Matrix> spin(const Representation& v, int vertex, const std::vector<Vec>& vectors);
// Radical: sum of images of all arrows, as column bases per vertex.
std::vector<Matrix> radical(const Representation& v);

}  // namespace glsw
