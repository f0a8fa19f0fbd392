#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "glsw/quiver.hpp"

namespace glsw {

namespace {

// Undirected valued edge between a left and a right vertex as drawn:
// label "a|b" means nu_{right,left} = a and nu_{left,right} = b.
struct Drawn {
    int left, right;
    long a = 1, b = 1;
};

struct Shape {
    std::vector<std::string> labels;
    std::vector<Drawn> edges;
    RankVector eta;
    int white = 0;
    long tier = 1;
};

std::vector<long> minimal_symmetrizer(size_t n, const std::vector<Drawn>& edges) {
    // rational propagation c_right = c_left * b / a, then clear denominators
    std::vector<long> num(n, 0), den(n, 1);
    num[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& e : edges) {
            auto prop = [&](int from, int to, long mul, long div) {
                if (num[from] && !num[to]) {
                    num[to] = num[from] * mul;
                    den[to] = den[from] * div;
                    long g = std::gcd(num[to], den[to]);
                    num[to] /= g;
                    den[to] /= g;
                    changed = true;
                }
            };
            // c_left nu_{left,right} = c_right nu_{right,left}: c_right = c_left * b / a
            prop(e.left, e.right, e.b, e.a);
            prop(e.right, e.left, e.a, e.b);
        }
    }
    long l = 1;
    for (size_t i = 0; i < n; ++i) {
        if (!num[i]) throw std::logic_error("catalog graph is disconnected");
        l = std::lcm(l, den[i]);
    }
    std::vector<long> c(n);
    long g = 0;
    for (size_t i = 0; i < n; ++i) {
        c[i] = num[i] * (l / den[i]);
        g = std::gcd(g, c[i]);
    }
    for (auto& x : c) x /= g;
    return c;
}

Shape chain(int n_vertices, long a_first, long b_first, long a_last, long b_last, const std::string& prefix = "a") {
    Shape s;
    for (int i = 0; i < n_vertices; ++i) s.labels.push_back(prefix + std::to_string(i + 1));
    for (int i = 0; i + 1 < n_vertices; ++i) s.edges.push_back({i, i + 1, 1, 1});
    s.edges.front().a = a_first;
    s.edges.front().b = b_first;
    s.edges.back().a = a_last;
    s.edges.back().b = b_last;
    s.white = n_vertices - 1;
    return s;
}

Shape shape_for(const std::string& fam, int n) {
    Shape s;
    if (fam == "A1") {
        s.labels = {"a1", "a2"};
        s.edges = {{0, 1, 2, 2}};
        s.eta = {1, 1};
        s.white = 1;
    } else if (fam == "A") {
        int k = n / 2, m = (n - 1) / 2;  // k + m = n - 1 inner vertices on the two paths
        s.labels.push_back("a1");
        for (int i = 0; i < k; ++i) s.labels.push_back("b" + std::to_string(i + 1));
        for (int i = 0; i < m; ++i) s.labels.push_back("c" + std::to_string(i + 1));
        s.labels.push_back("a2");
        int last = n;
        int prev = 0;
        for (int i = 0; i < k; ++i) {
            s.edges.push_back({prev, 1 + i, 1, 1});
            prev = 1 + i;
        }
        s.edges.push_back({prev, last, 1, 1});
        prev = 0;
        for (int i = 0; i < m; ++i) {
            s.edges.push_back({prev, 1 + k + i, 1, 1});
            prev = 1 + k + i;
        }
        s.edges.push_back({prev, last, 1, 1});
        s.eta.assign(n + 1, 1);
        s.white = last;
    } else if (fam == "B") {
        s = chain(n + 1, 1, 2, 2, 1);
        s.eta.assign(n + 1, 1);
        s.tier = 2;
    } else if (fam == "C") {
        s = chain(n + 1, 2, 1, 1, 2);
        s.eta.assign(n + 1, 2);
        s.eta.front() = s.eta.back() = 1;
    } else if (fam == "BC") {
        s = chain(n + 1, 1, 2, 1, 2);
        s.eta.assign(n + 1, 2);
        s.eta.back() = 1;
        s.tier = 2;
    } else if (fam == "BC1") {
        // index 0 is the extending vertex (c = 4), index 1 the other end
        s.labels = {"1", "2"};
        s.edges = {{1, 0, 1, 4}};
        s.eta = {1, 2};
        s.white = 0;
        s.tier = 2;
    } else if (fam == "D") {
        int inner = n - 3;
        s.labels = {"a1", "b1"};
        for (int i = 0; i < inner; ++i) s.labels.push_back("x" + std::to_string(i + 1));
        s.labels.push_back("a6");
        s.labels.push_back("b2");
        s.edges = {{0, 2, 1, 1}, {1, 2, 1, 1}};
        for (int i = 0; i + 1 < inner; ++i) s.edges.push_back({2 + i, 3 + i, 1, 1});
        s.edges.push_back({1 + inner, 2 + inner, 1, 1});
        s.edges.push_back({1 + inner, 3 + inner, 1, 1});
        s.eta = {1, 1};
        for (int i = 0; i < inner; ++i) s.eta.push_back(2);
        s.eta.push_back(1);
        s.eta.push_back(1);
        s.white = 3 + inner;
    } else if (fam == "BD" || fam == "CD") {
        int len = n - 1;
        bool bd = fam == "BD";
        s = chain(len, bd ? 1 : 2, bd ? 2 : 1, 1, 1);
        if (len == 2) {
            s.edges[0].a = bd ? 1 : 2;
            s.edges[0].b = bd ? 2 : 1;
        }
        s.labels.push_back("a6");
        s.labels.push_back("b1");
        s.edges.push_back({len - 1, len, 1, 1});
        s.edges.push_back({len - 1, len + 1, 1, 1});
        s.eta.assign(len, 2);
        if (!bd) s.eta[0] = 1;
        s.eta.push_back(1);
        s.eta.push_back(1);
        s.white = len + 1;
        s.tier = bd ? 1 : 2;
    } else if (fam == "E6") {
        s.labels = {"a1", "a2", "a3", "a4", "a5", "b1", "c1"};
        s.edges = {{1, 0}, {2, 1}, {2, 3}, {3, 4}, {2, 5}, {5, 6}};
        s.eta = {1, 2, 3, 2, 1, 2, 1};
        s.white = 6;
    } else if (fam == "E7") {
        s.labels = {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "b1"};
        s.edges = {{1, 0}, {2, 1}, {3, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
        s.eta = {1, 2, 3, 4, 3, 2, 1, 2};
        s.white = 0;
    } else if (fam == "E8") {
        s.labels = {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "b1"};
        s.edges = {{1, 0}, {2, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 8}};
        s.eta = {2, 4, 6, 5, 4, 3, 2, 1, 3};
        s.white = 7;
    } else if (fam == "F41") {
        // drawn left to right as a5 a4 a3 a2 a1
        s.labels = {"a5", "a4", "a3", "a2", "a1"};
        s.edges = {{0, 1}, {1, 2, 1, 2}, {2, 3}, {3, 4}};
        s.eta = {2, 4, 3, 2, 1};
        s.white = 4;
    } else if (fam == "F42") {
        s.labels = {"a1", "a2", "a3", "a4", "a5"};
        s.edges = {{0, 1}, {1, 2, 2, 1}, {2, 3}, {3, 4}};
        s.eta = {1, 2, 3, 2, 1};
        s.white = 4;
        s.tier = 2;
    } else if (fam == "G21") {
        s.labels = {"a3", "a2", "a1"};
        s.edges = {{0, 1, 1, 3}, {1, 2}};
        s.eta = {3, 2, 1};
        s.white = 2;
    } else if (fam == "G23") {
        s.labels = {"a1", "a2", "a3"};
        s.edges = {{0, 1, 3, 1}, {1, 2}};
        s.eta = {1, 2, 1};
        s.white = 2;
        s.tier = 3;
    } else {
        throw UnknownFamily("unknown affine family: " + fam);
    }
    return s;
}

const std::map<std::string, std::pair<int, int>>& ranges() {
    static const std::map<std::string, std::pair<int, int>> r = {
        {"A1", {1, 1}}, {"A", {2, 64}}, {"B", {2, 64}}, {"C", {2, 64}}, {"D", {4, 64}}, {"BC1", {1, 1}},
        {"BC", {2, 64}}, {"BD", {3, 64}}, {"CD", {3, 64}}, {"E6", {6, 6}}, {"E7", {7, 7}}, {"E8", {8, 8}},
        {"F41", {4, 4}}, {"F42", {4, 4}}, {"G21", {2, 2}}, {"G23", {2, 2}}};
    return r;
}

std::vector<Edge> orient(const Shape& s, const std::vector<long>& c, const std::vector<std::pair<int, int>>* explicit_arrows,
                         bool bc1) {
    const int n = static_cast<int>(s.labels.size());
    std::vector<int> dist(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (auto& e : s.edges) {
        adj[e.left].push_back(e.right);
        adj[e.right].push_back(e.left);
    }
    std::deque<int> bfs{s.white};
    dist[s.white] = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                bfs.push_back(w);
            }
    }
    std::vector<Edge> out;
    for (auto& e : s.edges) {
        bool left_to_right;
        if (explicit_arrows) {
            bool lr = std::find(explicit_arrows->begin(), explicit_arrows->end(), std::make_pair(e.left, e.right)) != explicit_arrows->end();
            bool rl = std::find(explicit_arrows->begin(), explicit_arrows->end(), std::make_pair(e.right, e.left)) != explicit_arrows->end();
            if (lr == rl) throw std::invalid_argument("orientation must direct every edge exactly once");
            left_to_right = lr;
        } else if (bc1) {
            left_to_right = true;  // the arrow 2 -> 1 into the extending vertex
        } else {
            left_to_right = std::make_pair(dist[e.left], e.left) < std::make_pair(dist[e.right], e.right);
        }
        // nu_{left,right} = b, nu_{right,left} = a
        if (left_to_right)
            out.push_back({e.left, e.right, e.b, e.a});
        else
            out.push_back({e.right, e.left, e.a, e.b});
    }
    (void)c;
    return out;
}

CatalogEntry build(const std::string& family, int rank, const std::vector<std::pair<int, int>>* arrows) {
    auto it = ranges().find(family);
    if (it == ranges().end()) throw UnknownFamily("unknown affine family: " + family);
    if (rank == 0) rank = it->second.first;
    if (rank < it->second.first || rank > it->second.second)
        throw UnknownFamily("rank " + std::to_string(rank) + " out of range for family " + family);
    Shape s = shape_for(family, rank);
    std::vector<long> c = minimal_symmetrizer(s.labels.size(), s.edges);
    CatalogEntry entry;
    entry.family = family;
    entry.rank = rank;
    entry.eta = s.eta;
    entry.extending_vertex = s.white;
    entry.tier = s.tier;
    entry.vertex_labels = s.labels;
    std::string name = family;
    if (family == "A" || family == "B" || family == "C" || family == "D" || family == "BC" || family == "BD" || family == "CD")
        name += std::to_string(rank);
    entry.quiver = ValuedQuiver(c, orient(s, c, arrows, family == "BC1" && !arrows), name);
    if (entry.quiver.size() != static_cast<size_t>(rank) + 1) throw std::logic_error("catalog vertex count mismatch for " + name);
    if (null_root(entry.quiver) != entry.eta) throw std::logic_error("catalog null root mismatch for " + name);
    return entry;
}

}  // namespace

std::vector<std::string> catalog_families() {
    return {"A1", "A", "B", "C", "D", "BC1", "BC", "BD", "CD", "E6", "E7", "E8", "F41", "F42", "G21", "G23"};
}

int default_rank(const std::string& family) {
    auto it = ranges().find(family);
    if (it == ranges().end()) throw UnknownFamily("unknown affine family: " + family);
    return it->second.first;
}

std::pair<int, int> rank_range(const std::string& family) {
    auto it = ranges().find(family);
    if (it == ranges().end()) throw UnknownFamily("unknown affine family: " + family);
    return it->second;
}

CatalogEntry catalog_affine(const std::string& family, int rank) { return build(family, rank, nullptr); }

CatalogEntry catalog_affine(const std::string& family, int rank, const std::vector<std::pair<int, int>>& orientation) {
    return build(family, rank, &orientation);
}

CatalogEntry catalog_by_name(const std::string& name) {
    static const std::vector<std::string> exact = {"A1", "BC1", "E6", "E7", "E8", "F41", "F42", "G21", "G23"};
    if (std::find(exact.begin(), exact.end(), name) != exact.end()) return catalog_affine(name);
    static const std::vector<std::string> prefixes = {"BC", "BD", "CD", "A", "B", "C", "D"};
    for (auto& p : prefixes) {
        if (name.rfind(p, 0) != 0) continue;
        std::string rest = name.substr(p.size());
        if (rest.empty()) return catalog_affine(p, p == "A" ? 2 : 0);
        if (!std::all_of(rest.begin(), rest.end(), ::isdigit) || rest.size() > 3) break;
        return catalog_affine(p, std::stoi(rest));
    }
    throw UnknownFamily("unknown affine family: " + name);
}

}  // namespace glsw
