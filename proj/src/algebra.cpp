#include "glsw/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "glsw/linear.hpp"

namespace glsw {

namespace {

// ordering key: length first, then arrow by arrow with loops after other arrows
std::vector<std::pair<int, int>> path_key(const Path& p, const std::vector<Arrow>& arrows) {
    std::vector<std::pair<int, int>> k;
    k.reserve(p.size() + 1);
    k.push_back({static_cast<int>(p.size()), 0});
    for (int a : p) k.push_back({arrows[a].is_loop() ? 1 : 0, a});
    return k;
}

}  // namespace

BoundQuiverAlgebra::BoundQuiverAlgebra(size_t vertices, std::vector<Arrow> arrows, std::vector<Relation> relations, std::string name,
                                       size_t max_dimension)
    : vertices_(vertices), arrows_(std::move(arrows)), relations_(std::move(relations)), name_(std::move(name)) {
    for (auto& a : arrows_) {
        if (a.source < 0 || a.target < 0 || static_cast<size_t>(a.source) >= vertices_ || static_cast<size_t>(a.target) >= vertices_)
            throw std::invalid_argument("arrow endpoint out of range");
        if (a.weight < 1) throw std::invalid_argument("arrow weights must be positive");
    }
    for (auto& r : relations_) {
        for (auto& t : r.terms) {
            int at = r.source;
            for (int a : t.path) {
                if (a < 0 || static_cast<size_t>(a) >= arrows_.size() || arrows_[a].source != at)
                    throw std::invalid_argument("relation " + r.label + " is not a path combination");
                at = arrows_[a].target;
            }
            if (at != r.target) throw std::invalid_argument("relation " + r.label + " has non-parallel terms");
        }
    }
    build(max_dimension);
}

void BoundQuiverAlgebra::add_scaled(AlgElem& acc, const AlgElem& x, const mpq_class& s) const {
    if (sgn(s) == 0 || x.empty()) return;
    AlgElem out;
    out.reserve(acc.size() + x.size());
    size_t i = 0, j = 0;
    while (i < acc.size() || j < x.size()) {
        if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
            out.push_back(std::move(acc[i++]));
        } else if (i == acc.size() || x[j].first < acc[i].first) {
            out.push_back({x[j].first, x[j].second * s});
            ++j;
        } else {
            mpq_class v = acc[i].second + x[j].second * s;
            if (sgn(v) != 0) out.push_back({acc[i].first, v});
            ++i;
            ++j;
        }
    }
    acc = std::move(out);
}

AlgElem BoundQuiverAlgebra::left_multiply(int arrow, const AlgElem& x) const {
    AlgElem acc;
    for (auto& [b, c] : x) add_scaled(acc, left_[arrow][b], c);
    return acc;
}

AlgElem BoundQuiverAlgebra::multiply(const AlgElem& x, const AlgElem& y) const {
    AlgElem acc;
    for (auto& [b, c] : x) {
        const BasisElement& be = basis_[b];
        AlgElem cur;
        for (auto& [yb, yc] : y)
            if (basis_[yb].target == be.source) cur.push_back({yb, yc});
        for (int a : be.path) cur = left_multiply(a, cur);
        add_scaled(acc, cur, c);
    }
    return acc;
}

AlgElem BoundQuiverAlgebra::path_element(const Path& path, int source) const {
    AlgElem cur = unit(idempotent(source));
    for (int a : path) {
        if (arrows_[a].source != (cur.empty() ? arrows_[a].source : basis_[cur.front().first].target))
            throw std::invalid_argument("path is not composable");
        cur = left_multiply(a, cur);
    }
    return cur;
}

std::vector<long> BoundQuiverAlgebra::graded_dimensions() const {
    std::vector<long> g;
    for (auto& b : basis_) {
        if (g.size() <= static_cast<size_t>(b.degree)) g.resize(b.degree + 1, 0);
        g[b.degree]++;
    }
    return g;
}

std::string BoundQuiverAlgebra::path_name(const Path& p, int source) const {
    if (p.empty()) return "e" + std::to_string(source);
    std::string s;
    for (size_t k = p.size(); k-- > 0;) {
        if (!s.empty()) s += "*";
        s += arrows_[p[k]].name;
    }
    return s;
}

void BoundQuiverAlgebra::build(size_t max_dimension) {
    const Field Q = Field::rationals();
    left_.assign(arrows_.size(), {});
    auto set_left = [&](int a, size_t b, AlgElem v) {
        if (left_[a].size() <= b) left_[a].resize(b + 1);
        left_[a][b] = std::move(v);
    };
    for (size_t v = 0; v < vertices_; ++v) basis_.push_back({static_cast<int>(v), static_cast<int>(v), {}, 0});

    long max_weight = 1;
    for (auto& a : arrows_) max_weight = std::max(max_weight, a.weight);
    auto path_degree = [&](const Path& p) {
        long d = 0;
        for (int a : p) d += arrows_[a].weight;
        return d;
    };
    std::map<long, std::vector<size_t>> relations_by_degree;
    for (size_t r = 0; r < relations_.size(); ++r) {
        auto& rel = relations_[r];
        if (rel.terms.empty()) continue;
        long d = path_degree(rel.terms[0].path);
        for (auto& t : rel.terms)
            if (path_degree(t.path) != d) throw std::invalid_argument("relation " + rel.label + " is not homogeneous");
        if (d == 0) throw std::invalid_argument("relation " + rel.label + " involves trivial paths");
        relations_by_degree[d].push_back(r);
    }

    // normal form of a path whose degree is already processed
    auto nf_prefix = [&](const Path& p, int source) {
        AlgElem cur = unit(static_cast<size_t>(source));
        for (int a : p) cur = left_multiply(a, cur);
        return cur;
    };

    // lifted rows of the ideal, per degree: combinations of paths
    std::map<long, std::vector<std::vector<std::pair<Path, mpq_class>>>> ideal_rows;
    std::map<long, std::vector<size_t>> basis_by_degree;
    for (size_t v = 0; v < vertices_; ++v) basis_by_degree[0].push_back(v);

    long empty_streak = 0;
    for (long d = 1;; ++d) {
        // monomials a * b with b a basis path of degree d - w(a)
        struct Mono {
            size_t b;
            int a;
            Path path;
        };
        std::vector<Mono> monos;
        for (size_t a = 0; a < arrows_.size(); ++a) {
            long w = arrows_[a].weight;
            if (w > d) continue;
            auto it = basis_by_degree.find(d - w);
            if (it == basis_by_degree.end()) continue;
            for (size_t b : it->second) {
                if (basis_[b].target != arrows_[a].source) continue;
                Path p = basis_[b].path;
                p.push_back(static_cast<int>(a));
                monos.push_back({b, static_cast<int>(a), std::move(p)});
            }
        }
        if (monos.empty()) {
            if (++empty_streak >= max_weight && relations_by_degree.lower_bound(d) == relations_by_degree.end()) break;
            continue;
        }
        empty_streak = 0;
        // largest first so that they become pivots
        std::sort(monos.begin(), monos.end(),
                  [&](const Mono& x, const Mono& y) { return path_key(x.path, arrows_) > path_key(y.path, arrows_); });
        std::map<Path, size_t> col;
        for (size_t i = 0; i < monos.size(); ++i) col[monos[i].path] = i;

        // expand an arbitrary degree-d path into monomial coordinates
        auto expand = [&](const Path& p, int source, const mpq_class& coeff, std::vector<mpq_class>& row) {
            Path prefix(p.begin(), p.end() - 1);
            int last = p.back();
            AlgElem pre = nf_prefix(prefix, source);
            for (auto& [b, c] : pre) {
                Path q = basis_[b].path;
                q.push_back(last);
                auto it = col.find(q);
                if (it == col.end()) throw std::logic_error("monomial missing during algebra construction");
                row[it->second] += c * coeff;
            }
        };

        std::vector<std::vector<mpq_class>> gens;
        if (auto it = relations_by_degree.find(d); it != relations_by_degree.end()) {
            for (size_t r : it->second) {
                std::vector<mpq_class> row(monos.size());
                for (auto& t : relations_[r].terms) expand(t.path, relations_[r].source, t.coeff, row);
                gens.push_back(std::move(row));
            }
        }
        for (size_t a = 0; a < arrows_.size(); ++a) {
            long w = arrows_[a].weight;
            auto it = ideal_rows.find(d - w);
            if (w > d || it == ideal_rows.end()) continue;
            for (auto& lifted : it->second) {
                std::vector<mpq_class> row(monos.size());
                bool any = false;
                for (auto& [p, c] : lifted) {
                    // first arrow of p must start at the target of a
                    if (arrows_[p.front()].source != arrows_[a].target) break;
                    Path q;
                    q.reserve(p.size() + 1);
                    q.push_back(static_cast<int>(a));
                    q.insert(q.end(), p.begin(), p.end());
                    expand(q, arrows_[a].source, c, row);
                    any = true;
                }
                if (any) gens.push_back(std::move(row));
            }
        }

        std::vector<bool> is_pivot(monos.size(), false);
        Matrix rref;
        std::vector<size_t> pivots;
        if (!gens.empty()) {
            Matrix g(Q, gens.size(), monos.size());
            for (size_t i = 0; i < gens.size(); ++i)
                for (size_t j = 0; j < monos.size(); ++j)
                    if (sgn(gens[i][j]) != 0) g.q(i, j) = gens[i][j];
            Echelon e = row_reduce(g);
            rref = std::move(e.rref);
            pivots = std::move(e.pivots);
            for (size_t pc : pivots) is_pivot[pc] = true;
        }
        // new basis elements, smallest first
        std::vector<size_t> free_cols;
        for (size_t j = monos.size(); j-- > 0;)
            if (!is_pivot[j]) free_cols.push_back(j);
        std::vector<size_t> new_index(monos.size(), SIZE_MAX);
        for (size_t j : free_cols) {
            new_index[j] = basis_.size();
            basis_.push_back({basis_[monos[j].b].source, arrows_[monos[j].a].target, monos[j].path, d});
            basis_by_degree[d].push_back(new_index[j]);
        }
        if (basis_.size() > max_dimension) throw AlgebraError("algebra " + name_ + " exceeds the dimension cap; ideal not admissible?");
        for (size_t j : free_cols) set_left(monos[j].a, monos[j].b, unit(new_index[j]));
        auto& rows = ideal_rows[d];
        for (size_t r = 0; r < pivots.size(); ++r) {
            AlgElem v;
            std::vector<std::pair<Path, mpq_class>> lifted;
            for (size_t j = 0; j < monos.size(); ++j) {
                const mpq_class& x = rref.q(r, j);
                if (sgn(x) == 0) continue;
                lifted.push_back({monos[j].path, x});
                if (j != pivots[r]) v.push_back({new_index[j], -x});
            }
            std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
            set_left(monos[pivots[r]].a, monos[pivots[r]].b, std::move(v));
            rows.push_back(std::move(lifted));
        }
        if (d > static_cast<long>(max_dimension) * max_weight) throw AlgebraError("algebra construction did not terminate");
    }
    for (auto& l : left_) l.resize(basis_.size());

    corner_.assign(vertices_ * vertices_, {});
    corner_pos_.assign(basis_.size(), 0);
    for (size_t b = 0; b < basis_.size(); ++b) {
        auto& c = corner_[basis_[b].target * vertices_ + basis_[b].source];
        corner_pos_[b] = c.size();
        c.push_back(b);
    }
}

void BoundQuiverAlgebra::set_loops(std::vector<int> loop_arrow, std::vector<long> loop_order) {
    if (loop_arrow.size() != vertices_ || loop_order.size() != vertices_) throw std::invalid_argument("loop markers sized wrongly");
    loop_arrow_ = std::move(loop_arrow);
    loop_order_ = std::move(loop_order);
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::opposite() const {
    if (auto o = origin_.lock()) return o;
    std::call_once(op_once_, [&] {
        std::vector<Arrow> arrows = arrows_;
        for (auto& a : arrows) {
            std::swap(a.source, a.target);
            a.name += "'";
        }
        std::vector<Relation> rels = relations_;
        for (auto& r : rels) {
            std::swap(r.source, r.target);
            for (auto& t : r.terms) std::reverse(t.path.begin(), t.path.end());
        }
        auto op = std::make_shared<BoundQuiverAlgebra>(vertices_, std::move(arrows), std::move(rels), name_ + "^op");
        if (!loop_arrow_.empty()) op->set_loops(loop_arrow_, loop_order_);
        op->origin_ = shared_from_this();
        op_ = op;
    });
    return op_;
}

}  // namespace glsw
