#include "glsw/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "glsw/decomposition.hpp"
#include "glsw/homological.hpp"

namespace glsw {

mpq_class Weight::operator()(const DimVector& d) const {
    if (d.size() != coords.size()) throw std::invalid_argument("weight and dimension vector lengths differ");
    mpq_class s = 0;
    for (size_t i = 0; i < d.size(); ++i) s += coords[i] * d[i];
    return s;
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + coords[i].get_str();
    return s + ")";
}

Weight weight_from_lf_class(const ValuedQuiver& q, const RankVector& w) {
    if (w.size() != q.size()) throw std::invalid_argument("rank vector has the wrong length");
    Weight t;
    t.provenance = "lf-class";
    for (size_t j = 0; j < q.size(); ++j) {
        mpq_class x(ringel_form(q, w, unit_vector(q.size(), static_cast<int>(j))), q.c(static_cast<int>(j)));
        x.canonicalize();
        t.coords.push_back(x);
    }
    return t;
}

Weight defect_weight(const ValuedQuiver& q) {
    Weight t = weight_from_lf_class(q, null_root(q));
    t.provenance = "defect";
    return t;
}

std::string to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::NotSemistable: return "not-semistable";
        case StabilityVerdict::Semistable: return "semistable";
        case StabilityVerdict::Stable: return "stable";
        case StabilityVerdict::Unknown: return "unknown (cap)";
    }
    return "?";
}

namespace {

using Key = std::vector<uint32_t>;

// canonical row-reduced basis of a column space, as rows
Matrix canonical(const Matrix& basis) {
    if (basis.cols() == 0) return Matrix(basis.field(), 0, basis.rows());
    Echelon e = row_reduce(basis.transpose());
    return e.rref.block(0, 0, e.pivots.size(), basis.rows());
}

struct Member {
    std::vector<Matrix> rows;  // canonical rows per vertex
    Key key;
};

Member make_member(std::vector<Matrix> rows) {
    Member m;
    m.rows = std::move(rows);
    for (auto& r : m.rows) {
        m.key.push_back(static_cast<uint32_t>(r.rows()));
        for (size_t i = 0; i < r.rows(); ++i)
            for (size_t j = 0; j < r.cols(); ++j) m.key.push_back(r.at(i, j).residue());
    }
    return m;
}

Member from_columns(const std::vector<Matrix>& bases) {
    std::vector<Matrix> rows;
    for (auto& b : bases) rows.push_back(canonical(b));
    return make_member(std::move(rows));
}

Member sum(const Member& a, const Member& b) {
    std::vector<Matrix> rows;
    for (size_t i = 0; i < a.rows.size(); ++i) {
        Matrix s = vstack(a.rows[i], b.rows[i]);
        if (s.rows() == 0) {
            rows.push_back(s);
            continue;
        }
        Echelon e = row_reduce(s);
        rows.push_back(e.rref.block(0, 0, e.pivots.size(), s.cols()));
    }
    return make_member(std::move(rows));
}

// next vector of F_p^n whose first nonzero entry is 1; false when exhausted
bool next_projective(std::vector<uint32_t>& x, uint32_t p) {
    const size_t n = x.size();
    size_t lead = 0;
    while (lead < n && x[lead] == 0) ++lead;
    for (size_t k = n; k-- > lead + 1;) {
        if (++x[k] < p) return true;
        x[k] = 0;
    }
    if (lead == 0) return false;
    std::fill(x.begin(), x.end(), 0);
    x[lead - 1] = 1;
    return true;
}

}  // namespace

SubmoduleLattice submodules(const Representation& v, const StabilityConfig& cfg) {
    const Field f = v.field();
    if (!f.is_prime()) throw std::invalid_argument("submodule enumeration needs a prime field");
    const uint32_t p = f.modulus();
    const size_t n = v.dims().size();
    SubmoduleLattice lat;
    if (v.total_dim() > cfg.max_dim) {
        lat.complete = false;
        return lat;
    }
    std::map<Key, size_t> index;
    std::vector<Member> members;
    auto add = [&](Member m) -> bool {
        if (index.count(m.key)) return false;
        index[m.key] = members.size();
        members.push_back(std::move(m));
        return true;
    };
    std::vector<Matrix> zero_rows;
    for (size_t i = 0; i < n; ++i) zero_rows.emplace_back(f, 0, v.dim(static_cast<int>(i)));
    add(make_member(zero_rows));
    // cyclic submodules generated by a single vector at one vertex
    std::vector<Member> cyclic;
    std::set<Key> cyclic_keys;
    size_t enumerated = 0;
    for (size_t i = 0; i < n && lat.complete; ++i) {
        const size_t d = v.dim(static_cast<int>(i));
        if (d == 0) continue;
        std::vector<uint32_t> x(d, 0);
        x[d - 1] = 1;
        do {
            if (++enumerated > cfg.enum_cap) {
                lat.complete = false;
                break;
            }
            Vec vec;
            for (uint32_t e : x) vec.push_back(Scalar::residue(f, e));
            Member m = from_columns(spin(v, static_cast<int>(i), {vec}));
            if (cyclic_keys.insert(m.key).second) cyclic.push_back(std::move(m));
        } while (next_projective(x, p));
    }
    lat.cyclic_generators = cyclic.size();
    // close under sums with cyclic submodules
    std::vector<size_t> frontier{0};
    for (auto& c : cyclic)
        if (add(c)) frontier.push_back(members.size() - 1);
    while (!frontier.empty() && lat.complete) {
        ++lat.closure_rounds;
        std::vector<size_t> next;
        for (size_t idx : frontier)
            for (auto& c : cyclic) {
                if (members.size() > cfg.enum_cap) {
                    lat.complete = false;
                    break;
                }
                if (add(sum(members[idx], c))) next.push_back(members.size() - 1);
            }
        frontier = std::move(next);
    }
    for (auto& m : members) {
        std::vector<Matrix> cols;
        for (auto& r : m.rows) cols.push_back(r.transpose());
        lat.members.push_back(std::move(cols));
    }
    return lat;
}

StabilityResult check_stability_fp(const Representation& v, const Weight& theta, const StabilityConfig& cfg) {
    StabilityResult r;
    r.field = v.field();
    const DimVector dv = v.dimension_vector();
    if (theta(dv) != 0) {
        r.candidate = false;
        r.verdict = StabilityVerdict::NotSemistable;
        return r;
    }
    SubmoduleLattice lat = submodules(v, cfg);
    r.complete = lat.complete;
    r.lattice_size = lat.members.size();
    if (!lat.complete) return r;
    bool semistable = true, stable = true;
    for (auto& u : lat.members) {
        DimVector du;
        for (auto& b : u) du.push_back(static_cast<long>(b.cols()));
        const long total = std::accumulate(du.begin(), du.end(), 0L);
        if (total == 0 || du == dv) continue;
        mpq_class t = theta(du);
        if (t > 0 && (semistable || t > r.witness_value)) {
            semistable = false;
            stable = false;
            r.witness = u;
            r.witness_dim = du;
            r.witness_value = t;
        } else if (t == 0 && semistable && stable) {
            stable = false;
            r.witness = u;
            r.witness_dim = du;
            r.witness_value = t;
        }
    }
    r.verdict = !semistable ? StabilityVerdict::NotSemistable : stable ? StabilityVerdict::Stable : StabilityVerdict::Semistable;
    if (r.verdict == StabilityVerdict::Stable) r.witness.reset();
    return r;
}

StabilityReport check_stability(const Representation& v, const Weight& theta, const StabilityConfig& cfg) {
    StabilityReport rep;
    if (v.field().is_prime()) {
        rep.per_field.push_back(check_stability_fp(v, theta, cfg));
        rep.label = "exact over " + v.field().name();
    } else {
        for (uint32_t p : cfg.primes) rep.per_field.push_back(check_stability_fp(v.reduce_to(Field::prime(p)), theta, cfg));
        rep.label = "finite-field certified";
    }
    rep.verdict = StabilityVerdict::Stable;
    for (auto& r : rep.per_field) {
        if (r.verdict == StabilityVerdict::Unknown) {
            rep.verdict = StabilityVerdict::Unknown;
            break;
        }
        rep.verdict = std::min(rep.verdict, r.verdict);
    }
    // monotonicity: stable implies semistable
    if (rep.stable() && !rep.semistable()) throw std::logic_error("stable module reported as unstable");
    return rep;
}

bool is_semistable(const Representation& v, const Weight& theta, const StabilityConfig& cfg) {
    return check_stability(v, theta, cfg).semistable();
}

bool is_stable(const Representation& v, const Weight& theta, const StabilityConfig& cfg) {
    return check_stability(v, theta, cfg).stable();
}

bool RegularTauRigidReport::passed() const {
    return rejection.empty() && rigid && stability.semistable() && phi_period > 0 && tau_rank_matches;
}

RegularTauRigidReport regular_tau_rigid_check(const GlsAlgebra& h, const RankVector& v, uint64_t seed,
                                              const StabilityConfig& cfg) {
    const ValuedQuiver& q = h.quiver;
    RegularTauRigidReport r;
    r.v = v;
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) {
        r.rejection = "zero vector";
        return r;
    }
    const long qv = tits_form(q, v);
    const auto& c = q.symmetrizer();
    if (!is_positive_real_root(q, v) || std::find(c.begin(), c.end(), qv) == c.end()) {
        r.rejection = "not a real Schur root class";
        return r;
    }
    if (long d = defect(q, v); d != 0) {
        r.rejection = "nonzero defect " + std::to_string(d);
        return r;
    }
    Representation w = rigid_of_rank(h, v, seed);
    r.rigid = ext1_dim(w, w) == 0;
    // reducing a rational sample mod a small prime can leave the rigid locus,
    // so the rigid module is sampled afresh over each prime
    const Weight theta = defect_weight(q);
    r.stability.label = "finite-field certified";
    r.stability.verdict = StabilityVerdict::Stable;
    for (uint32_t p : cfg.primes) {
        StabilityResult sr = check_stability_fp(rigid_of_rank(h, v, seed, Field::prime(p)), theta, cfg);
        r.stability.verdict = sr.verdict == StabilityVerdict::Unknown ? sr.verdict : std::min(r.stability.verdict, sr.verdict);
        r.stability.per_field.push_back(std::move(sr));
        if (r.stability.verdict == StabilityVerdict::Unknown) break;
    }
    IntMatrix phi = coxeter_matrix(q);
    RankVector x = apply_matrix(phi, v);
    for (long k = 1; k <= 256; ++k, x = apply_matrix(phi, x))
        if (x == v) {
            r.phi_period = k;
            break;
        }
    auto tau = is_locally_free(ar_translate(w));
    r.tau_rank_matches = tau.locally_free && *tau.rank == apply_matrix(phi, v);
    return r;
}

}  // namespace glsw
