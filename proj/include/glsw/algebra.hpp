#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glsw {

// Paths are arrow indices in traversal order; the trivial path at v is empty.
using Path = std::vector<int>;

struct Arrow {
    int source = 0, target = 0;
    std::string name;
    long weight = 1;  // grading degree; every relation must be homogeneous
    bool is_loop() const { return source == target; }
};

struct PathTerm {
    mpq_class coeff;
    Path path;
};

// A linear combination of parallel paths, all of the same degree.
struct Relation {
    int source = 0, target = 0;
    std::vector<PathTerm> terms;
    std::string label;
};

struct BasisElement {
    int source = 0, target = 0;
    Path path;
    long degree = 0;
};

// Sparse element of the algebra in basis coordinates, sorted by index.
using AlgElem = std::vector<std::pair<size_t, mpq_class>>;

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite-dimensional K Q / I. The basis is the set of paths that are not
// leading terms of the ideal, computed degree by degree by linear algebra;
// larger paths (length-lex, loops after other arrows, then arrow index)
// are eliminated first.
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
public:
    BoundQuiverAlgebra(size_t vertices, std::vector<Arrow> arrows, std::vector<Relation> relations, std::string name = "",
                       size_t max_dimension = 20000);

    size_t num_vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const std::string& name() const { return name_; }

    size_t dimension() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    // basis indices of e_target H e_source
    const std::vector<size_t>& corner(int target, int source) const { return corner_[target * vertices_ + source]; }
    size_t position_in_corner(size_t basis_index) const { return corner_pos_[basis_index]; }
    size_t idempotent(int v) const { return static_cast<size_t>(v); }
    std::vector<long> graded_dimensions() const;

    // a * b: follow the basis path b, then the arrow a
    const AlgElem& left_multiply(int arrow, size_t basis_index) const { return left_[arrow][basis_index]; }
    AlgElem left_multiply(int arrow, const AlgElem& x) const;
    // x * y: y first, then x
    AlgElem multiply(const AlgElem& x, const AlgElem& y) const;
    AlgElem path_element(const Path& path, int source) const;
    AlgElem unit(size_t basis_index) const { return {{basis_index, mpq_class(1)}}; }

    // Reverse every arrow and every relation path; cached. The opposite of an
    // opposite is the original object. Requires ownership by a shared_ptr.
    std::shared_ptr<const BoundQuiverAlgebra> opposite() const;

    // Optional markers for truncated loops (GLS algebras): arrow index or -1.
    void set_loops(std::vector<int> loop_arrow, std::vector<long> loop_order);
    int loop_at(int v) const { return loop_arrow_.empty() ? -1 : loop_arrow_[v]; }
    long loop_order(int v) const { return loop_order_.empty() ? 1 : loop_order_[v]; }
    bool has_loop_markers() const { return !loop_arrow_.empty(); }

    std::string path_name(const Path& p, int source) const;

private:
    void build(size_t max_dimension);
    void add_scaled(AlgElem& acc, const AlgElem& x, const mpq_class& s) const;

    size_t vertices_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<size_t>> corner_;
    std::vector<size_t> corner_pos_;
    std::vector<std::vector<AlgElem>> left_;
    std::vector<int> loop_arrow_;
    std::vector<long> loop_order_;
    mutable std::once_flag op_once_;
    mutable std::shared_ptr<const BoundQuiverAlgebra> op_;
    std::weak_ptr<const BoundQuiverAlgebra> origin_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

}  // namespace glsw
