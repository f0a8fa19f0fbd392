#include "glsw/serialize.hpp"

namespace glsw {

Json to_json(const RankVector& v) {
    Json j = Json::array();
    for (long x : v) j.push_back(x);
    return j;
}

Json to_json(const IntMatrix& m) {
    Json j = Json::array();
    for (const auto& row : m) j.push_back(to_json(row));
    return j;
}

Json to_json(const Matrix& m) {
    Json j = Json::array();
    auto entries = m.entry_strings();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(entries[i * m.cols() + k]);
        j.push_back(row);
    }
    return j;
}

Json to_json(const RootMultiset& m) {
    Json j = Json::array();
    for (const auto& [root, mult] : m) j.push_back({{"root", to_json(root)}, {"multiplicity", mult}});
    return j;
}

Json to_json(const Representation& v) {
    Json j;
    j["field"] = v.field().name();
    j["dimension"] = to_json(v.dimension_vector());
    Json arrows = Json::array();
    const auto& alg = v.algebra();
    for (size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& arr = alg.arrows()[a];
        arrows.push_back({{"name", arr.name}, {"source", arr.source}, {"target", arr.target}, {"matrix", to_json(v.arrow(a))}});
    }
    j["arrows"] = arrows;
    return j;
}

Json to_json(const DecompositionReport& r) {
    Json j;
    j["v"] = to_json(r.v);
    j["m"] = r.m;
    j["w"] = to_json(r.w);
    j["summands"] = to_json(r.certified);
    j["unfolded_summands"] = to_json(r.unfolded_summands);
    j["rotation_invariant"] = r.rotation_invariant;
    Json ev = Json::array();
    for (const auto& e : r.evidence)
        ev.push_back({{"rank", to_json(e.dimension)}, {"end_dim", e.end_dim}, {"ext1_self", e.ext1_self}});
    j["evidence"] = ev;
    j["seeds"] = r.seeds;
    return j;
}

Json to_json(const StabilityReport& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["label"] = r.label;
    Json fields = Json::array();
    for (const auto& f : r.per_field) {
        Json e;
        e["field"] = f.field.name();
        e["complete"] = f.complete;
        e["candidate"] = f.candidate;
        e["verdict"] = to_string(f.verdict);
        e["lattice_size"] = f.lattice_size;
        if (f.witness) {
            e["witness_dimension"] = to_json(f.witness_dim);
            e["witness_value"] = f.witness_value.get_str();
        }
        fields.push_back(e);
    }
    j["per_field"] = fields;
    return j;
}

Json catalog_json(const CatalogEntry& entry) {
    const auto& q = entry.quiver;
    Json j;
    j["schema"] = kSchemaVersion;
    j["family"] = entry.family;
    j["rank"] = entry.rank;
    j["name"] = q.name();
    j["symmetrizer"] = to_json(q.symmetrizer());
    Json edges = Json::array();
    for (const auto& e : q.edges())
        edges.push_back({{"from", e.from}, {"to", e.to}, {"nu_from_to", e.v_out}, {"nu_to_from", e.v_in}});
    j["edges"] = edges;
    j["vertex_labels"] = entry.vertex_labels;
    j["extending_vertex"] = entry.extending_vertex;

    auto data = tubes(q, entry.tier);
    j["eta"] = to_json(entry.eta);
    j["eta_computed"] = to_json(data.eta);
    j["defect_rank"] = to_json(data.defect);
    Json defect_dim = Json::array();
    for (const auto& x : defect_weight(q).coords) {
        if (x.get_den() == 1)
            defect_dim.push_back(x.get_num().get_si());
        else
            defect_dim.push_back(x.get_str());
    }
    j["defect"] = defect_dim;
    j["coxeter"] = to_json(coxeter_matrix(q));
    j["tier"] = entry.tier;
    j["tier_computed"] = data.tier;
    j["tier_matches"] = data.tier_matches_catalog;
    Json tube_list = Json::array();
    for (const auto& t : data.tubes) {
        Json qs = Json::array();
        for (const auto& v : t.quasi_simples) qs.push_back(to_json(v));
        tube_list.push_back({{"rank", t.rank}, {"tier", t.tier}, {"sum_multiple", t.sum_multiple}, {"quasi_simples", qs}});
    }
    j["tubes"] = tube_list;
    try {
        auto ext = extending_data(entry);
        j["extending"] = {{"label", ext.label()}, {"vertex", ext.vertex}, {"pairing", ext.pairing},
                          {"eta_reduced", to_json(ext.eta_reduced)}};
    } catch (const std::invalid_argument&) {
        j["extending"] = nullptr;
    }
    return j;
}

Json catalog_listing() {
    Json j;
    j["schema"] = kSchemaVersion;
    Json rows = Json::array();
    for (const auto& family : catalog_families()) {
        auto entry = catalog_affine(family, default_rank(family));
        auto [lo, hi] = rank_range(family);
        rows.push_back({{"family", family},
                        {"default_rank", entry.rank},
                        {"rank_min", lo},
                        {"rank_max", hi},
                        {"name", entry.quiver.name()},
                        {"eta", to_json(entry.eta)},
                        {"tier", entry.tier}});
    }
    j["families"] = rows;
    return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j.front().is_structured())) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    } else {
        out += path;
        out += '\t';
        out += j.is_string() ? j.get<std::string>() : j.dump();
        out += '\n';
    }
}

}  // namespace

std::string to_tsv(const Json& j) {
    std::string out;
    flatten(j, "", out);
    return out;
}

}  // namespace glsw
