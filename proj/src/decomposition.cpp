#include "glsw/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "glsw/homological.hpp"
#include "glsw/krull_schmidt.hpp"

namespace glsw {

namespace {

std::string show(const RankVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// positive integer k with d = k * eta, or 0
long multiple_of(const RankVector& d, const RankVector& eta) {
    long k = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        if (eta[i] == 0) {
            if (d[i] != 0) return 0;
            continue;
        }
        if (d[i] % eta[i] != 0) return 0;
        long ki = d[i] / eta[i];
        if (k == 0) k = ki;
        if (ki != k || ki <= 0) return 0;
    }
    return k;
}

RankVector vec_of(const DimVector& d) { return RankVector(d.begin(), d.end()); }

struct Sample {
    std::vector<Representation> parts;
    RootMultiset summands;
};

// A summand of class k*eta is a homogeneous brick defined over F_{p^k}; over the
// algebraic closure it splits into k summands of class eta.
Sample sample_and_split(const GlsAlgebra& h, const RankVector& rank, const RankVector& eta, uint64_t seed, bool by_rank) {
    Representation v = random_locally_free(h, rank, Field::prime(kGenericPrime), seed);
    Sample s;
    s.parts = krull_schmidt(v, seed);
    std::vector<RankVector> dims;
    for (auto& p : s.parts) {
        if (by_rank) {
            auto lf = is_locally_free(p);
            if (!lf.locally_free) throw CertificationError("summand of a locally free sample is not locally free");
            dims.push_back(*lf.rank);
        } else {
            dims.push_back(vec_of(p.dimension_vector()));
        }
        long k = multiple_of(dims.back(), eta);
        if (k > 1) {
            dims.back() = eta;
            dims.insert(dims.end(), static_cast<size_t>(k - 1), eta);
        }
    }
    s.summands = to_multiset(dims);
    return s;
}

std::vector<SummandEvidence> evidence_of(const Sample& s, const std::vector<RankVector>& labels) {
    std::vector<SummandEvidence> ev;
    for (size_t i = 0; i < s.parts.size(); ++i)
        ev.push_back({labels[i], end_dim(s.parts[i]), ext1_dim(s.parts[i], s.parts[i])});
    return ev;
}

// Ext^1 between distinct summands of a generic module vanishes
bool pairwise_ext_vanishes(const std::vector<Representation>& parts) {
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j)
            if (i != j && ext1_dim(parts[i], parts[j]) != 0) return false;
    return true;
}

}  // namespace

RootMultiset to_multiset(std::vector<RankVector> vectors) {
    std::map<RankVector, long> count;
    for (auto& v : vectors) count[v]++;
    return RootMultiset(count.begin(), count.end());
}

KacDecomposition kac_decomposition_unfolded(const ValuedQuiver& unfolded, const RankVector& d, uint64_t seed) {
    if (d.size() != unfolded.size()) throw std::invalid_argument("dimension vector has the wrong length");
    for (long x : d)
        if (x < 0) throw std::invalid_argument("negative dimension vector");
    for (long c : unfolded.symmetrizer())
        if (c != 1) throw std::invalid_argument("Kac decomposition needs a simply-laced quiver");
    GlsAlgebra h = gls_presentation(unfolded);
    const RankVector eta = null_root(unfolded);
    std::string failures;
    for (int attempt = 0; attempt < 2; ++attempt) {
        uint64_t s1 = derive_seed(seed, 2 * attempt), s2 = derive_seed(seed, 2 * attempt + 1);
        Sample a = sample_and_split(h, d, eta, s1, false);
        Sample b = sample_and_split(h, d, eta, s2, false);
        std::string why;
        if (a.summands != b.summands) why = "second seed disagrees";
        else if (!pairwise_ext_vanishes(a.parts)) why = "Ext between summands";
        else {
            size_t end_fp = end_dim(direct_sum(a.parts));
            size_t end_q = end_dim(random_locally_free(h, d, Field::rationals(), s1));
            if (end_fp != end_q) why = "rational End dimension differs";
        }
        if (why.empty()) {
            KacDecomposition out;
            out.summands = a.summands;
            for (auto& [dim, mult] : out.summands) out.null_multiplicity += multiple_of(dim, eta) * mult;
            std::vector<RankVector> labels;
            for (auto& p : a.parts) labels.push_back(vec_of(p.dimension_vector()));
            out.evidence = evidence_of(a, labels);
            out.seeds = {s1, s2};
            return out;
        }
        failures += " [seeds " + std::to_string(s1) + "," + std::to_string(s2) + ": " + why + "]";
    }
    throw CertificationError("Kac decomposition of " + show(d) + " not certified:" + failures);
}

DecompositionReport folded_decomposition(const ValuedQuiver& q, const RankVector& v, uint64_t seed) {
    if (v.size() != q.size()) throw std::invalid_argument("rank vector has the wrong length");
    UnfoldedQuiver u = unfold(q);
    const RankVector eta = null_root(q);
    std::string failures;
    for (int attempt = 0; attempt < 2; ++attempt) {
        KacDecomposition kac = kac_decomposition_unfolded(u.quiver, u.unfold(v), derive_seed(seed, 100 + attempt));
        DecompositionReport r;
        r.v = v;
        r.unfolded_summands = kac.summands;
        r.seeds = kac.seeds;
        // Z/c rotation acts on the summand multiset
        std::map<RankVector, long> count(kac.summands.begin(), kac.summands.end());
        auto rotate = [&](const RankVector& x) {
            RankVector y(x.size());
            for (size_t j = 0; j < x.size(); ++j) y[u.rotation[j]] = x[j];
            return y;
        };
        r.rotation_invariant = true;
        for (auto& [x, mult] : count) {
            auto it = count.find(rotate(x));
            if (it == count.end() || it->second != mult) r.rotation_invariant = false;
        }
        bool folded_ok = r.rotation_invariant;
        std::vector<RankVector> folded;
        std::map<RankVector, bool> seen;
        for (auto& [x, mult] : count) {
            if (!folded_ok || seen[x]) continue;
            if (multiple_of(x, u.unfold(eta)) > 0) continue;
            RankVector orbit_sum(x.size(), 0), y = x;
            do {
                seen[y] = true;
                for (size_t j = 0; j < y.size(); ++j) orbit_sum[j] += y[j];
                y = rotate(y);
            } while (y != x);
            auto f = u.fold_class(orbit_sum);
            if (!f) {
                folded_ok = false;
                break;
            }
            for (long k = 0; k < mult; ++k) folded.push_back(*f);
        }
        if (folded_ok) {
            r.m = kac.null_multiplicity;
            r.w.resize(v.size());
            for (size_t i = 0; i < v.size(); ++i) r.w[i] = v[i] - r.m * eta[i];
            r.certified = to_multiset(folded);
            if (r.m > 0 && defect(q, r.w) != 0) throw CertificationError("rigid part " + show(r.w) + " has nonzero defect");
            for (auto& [beta, mult] : r.certified) {
                long qb = tits_form(q, beta);
                bool is_c = std::find(q.symmetrizer().begin(), q.symmetrizer().end(), qb) != q.symmetrizer().end();
                if (!is_positive_real_root(q, beta) || !is_c)
                    throw CertificationError("folded summand " + show(beta) + " is not a real Schur root class");
            }
            return r;
        }
        failures += " [attempt " + std::to_string(attempt) + ": summands not rotation invariant]";
    }
    throw CertificationError("fold of " + show(v) + " failed:" + failures);
}

Representation rigid_of_rank(const GlsAlgebra& h, const RankVector& w, uint64_t seed, Field f) {
    // the non-rigid locus is a hypersurface, hit with probability about 1/p
    const int kAttempts = f.is_prime() && f.modulus() < 50 ? 40 : 5;
    std::optional<Representation> first;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Representation r = random_locally_free(h, w, f, derive_seed(seed, 200 + attempt));
        if (ext1_dim(r, r) != 0) continue;
        if (!first) {
            first = r;
            continue;
        }
        if (!is_isomorphic(*first, r, seed).isomorphic())
            throw CertificationError("two rigid samples of rank " + show(w) + " are not isomorphic");
        return *first;
    }
    if (first) return *first;
    throw CertificationError("no rigid locally free module of rank " + show(w) + " found in " + std::to_string(kAttempts) +
                             " attempts (seed " + std::to_string(seed) + ")");
}

DecompositionReport generic_decomposition_report(const GlsAlgebra& h, const RankVector& v, uint64_t seed) {
    DecompositionReport r = folded_decomposition(h.quiver, v, seed);
    const RankVector eta = null_root(h.quiver);
    std::string failures;
    for (int attempt = 0; attempt < 2; ++attempt) {
        uint64_t s = derive_seed(seed, 300 + attempt);
        Sample sample = sample_and_split(h, v, eta, s, true);
        std::vector<RankVector> ranks, rigid_ranks;
        for (auto& p : sample.parts) ranks.push_back(*is_locally_free(p).rank);
        auto ev = evidence_of(sample, ranks);
        long bricks = 0;
        bool ok = true;
        for (auto& e : ev) {
            if (long k = multiple_of(e.dimension, eta); k > 0) {
                bricks += k;
                if (e.end_dim != static_cast<size_t>(k)) ok = false;
            } else {
                rigid_ranks.push_back(e.dimension);
                if (e.ext1_self != 0) ok = false;
            }
        }
        if (ok && bricks == r.m && to_multiset(rigid_ranks) == r.certified) {
            r.evidence = ev;
            r.seeds.push_back(s);
            return r;
        }
        failures += " [seed " + std::to_string(s) + "]";
    }
    throw CertificationError("generic summand profile of " + show(v) + " does not match (m, w):" + failures);
}

}  // namespace glsw
