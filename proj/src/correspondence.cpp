#include "dpc/correspondence.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dpc {

namespace {

std::string edge_name(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

} // namespace

bool ColoringMap::total() const {
    for (int c : color)
        if (c == 0) return false;
    return true;
}

std::vector<int> ColoringMap::domain() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (color[v] != 0) out.push_back(v);
    return out;
}

CorrAssignment::CorrAssignment(const SimpleGraph& g, int k,
                               std::map<Edge, Matching> matchings)
    : k_(k), matchings_(std::move(matchings)) {
    if (k < 1) throw input_error("k must be at least 1");
    for (auto& [e, m] : matchings_) {
        if (e.first >= e.second)
            throw input_error("non-canonical edge key " + edge_name(e));
        if (!g.adjacent(e.first, e.second))
            throw input_error("matching on unknown edge " + edge_name(e));
        std::set<int> left, right;
        for (auto [cu, cv] : m) {
            if (cu < 1 || cu > k || cv < 1 || cv > k)
                throw input_error("color out of [k] in matching of edge " + edge_name(e));
            if (!left.insert(cu).second || !right.insert(cv).second)
                throw input_error("not a matching on edge " + edge_name(e) +
                                  ": a color is matched twice");
        }
        std::sort(m.begin(), m.end());
    }
    // Edges without an entry carry the empty matching.
    for (const Edge& e : g.edges())
        if (!matchings_.count(e)) matchings_.emplace(e, Matching{});
}

const CorrAssignment::Matching& CorrAssignment::matching(const Edge& e) const {
    auto it = matchings_.find(e);
    if (it == matchings_.end()) throw input_error("unknown edge " + edge_name(e));
    return it->second;
}

CorrAssignment::Matching CorrAssignment::matching_from(int u, int v) const {
    const Matching& m = matching(make_edge(u, v));
    if (u < v) return m;
    Matching t;
    t.reserve(m.size());
    for (auto [a, b] : m) t.emplace_back(b, a);
    std::sort(t.begin(), t.end());
    return t;
}

std::optional<int> CorrAssignment::partner(int u, int v, int color_at_u) const {
    const Matching& m = matching(make_edge(u, v));
    if (u < v) {
        for (auto [a, b] : m)
            if (a == color_at_u) return b;
    } else {
        for (auto [a, b] : m)
            if (b == color_at_u) return a;
    }
    return std::nullopt;
}

CorrAssignment identity_assignment(const SimpleGraph& g, int k) {
    std::map<Edge, CorrAssignment::Matching> ms;
    CorrAssignment::Matching ident;
    for (int c = 1; c <= k; ++c) ident.emplace_back(c, c);
    for (const Edge& e : g.edges()) ms[e] = ident;
    return CorrAssignment(g, k, std::move(ms));
}

bool is_full(const CorrAssignment& c, const Edge& e) {
    return c.matching_size(e) == c.k();
}

bool is_straight(const CorrAssignment& c, const Edge& e) {
    for (auto [a, b] : c.matching(e))
        if (a != b) return false;
    return true;
}

CheckResult check_coloring(const SimpleGraph& g, const CorrAssignment& c,
                           const ColoringMap& phi) {
    if (phi.size() != g.vertex_count())
        throw input_error("coloring has wrong vertex count");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!phi.has(v))
            throw input_error("coloring is partial: vertex " + std::to_string(v) +
                              " is uncolored");
    for (const Edge& e : g.edges()) {
        auto p = c.partner(e.first, e.second, phi.at(e.first));
        if (p && *p == phi.at(e.second)) {
            CheckResult r;
            r.ok = false;
            r.violation = e;
            r.violating_pair = {phi.at(e.first), phi.at(e.second)};
            return r;
        }
    }
    return {};
}

std::optional<WalkWitness> walk_inconsistency(const SimpleGraph& g, const CorrAssignment& c,
                                              const std::vector<int>& walk) {
    const int m = static_cast<int>(walk.size());
    if (m < 2 || walk.front() != walk.back())
        throw input_error("walk is not closed");
    for (int i = 0; i + 1 < m; ++i)
        if (!g.adjacent(walk[i], walk[i + 1]))
            throw input_error("walk is not a walk: " + std::to_string(walk[i]) + "," +
                              std::to_string(walk[i + 1]) + " are not adjacent");
    for (int start = 1; start <= c.k(); ++start) {
        std::vector<int> chain{start};
        bool alive = true;
        for (int i = 0; i + 1 < m && alive; ++i) {
            auto p = c.partner(walk[i], walk[i + 1], chain.back());
            if (!p)
                alive = false;
            else
                chain.push_back(*p);
        }
        if (alive && chain.back() != chain.front())
            return WalkWitness{walk, chain};
    }
    return std::nullopt;
}

TriangleConsistency consistent_on_triangles(const SimpleGraph& g, const CorrAssignment& c) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int d : g.neighbors(b)) {
                if (d <= b || !g.adjacent(d, a)) continue;
                int tri[3] = {a, b, d};
                for (int rot = 0; rot < 3; ++rot) {
                    int x = tri[rot], y = tri[(rot + 1) % 3], z = tri[(rot + 2) % 3];
                    for (const auto& w :
                         {std::vector<int>{x, y, z, x}, std::vector<int>{x, z, y, x}}) {
                        auto witness = walk_inconsistency(g, c, w);
                        if (witness) return {false, witness};
                    }
                }
            }
        }
    return {};
}

bool consistent_on_all_walks(const SimpleGraph& g, const CorrAssignment& c) {
    if (g.vertex_count() > 12)
        throw budget_error("full-walk consistency check is limited to 12 vertices");
    // Spur reduction makes every closed walk a product of cycle traversals,
    // so checking each cycle from every base suffices.
    for (const CycleRef& cyc : cycles_up_to(g, std::max(3, g.vertex_count()))) {
        const int m = cyc.length();
        for (int base = 0; base < m; ++base) {
            std::vector<int> walk;
            walk.reserve(m + 1);
            for (int i = 0; i <= m; ++i) walk.push_back(cyc.vertices[(base + i) % m]);
            if (walk_inconsistency(g, c, walk)) return false;
            std::reverse(walk.begin(), walk.end());
            if (walk_inconsistency(g, c, walk)) return false;
        }
    }
    return true;
}

StraightenResult straighten(const SimpleGraph& g, const CorrAssignment& c,
                            const std::vector<Edge>& h) {
    const int n = g.vertex_count();
    const int k = c.k();
    std::vector<std::vector<int>> h_adj(n);
    for (const Edge& e : h) {
        if (!g.adjacent(e.first, e.second))
            throw input_error("subgraph edge " + edge_name(e) + " is not in the graph");
        if (!is_full(c, make_edge(e.first, e.second)))
            throw precondition_error("subgraph edge " + edge_name(e) + " is not full");
        h_adj[e.first].push_back(e.second);
        h_adj[e.second].push_back(e.first);
    }

    // pi[v][a-1] = new color of old color a; determined by BFS over H so that
    // pi_v = pi_u o M_{v->u} across each H-edge.
    std::vector<std::vector<int>> pi(n);
    std::vector<int> ident(k);
    for (int i = 0; i < k; ++i) ident[i] = i + 1;
    std::vector<char> visited(n, 0);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (visited[root] || h_adj[root].empty()) continue;
        visited[root] = 1;
        pi[root] = ident;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : h_adj[u]) {
                std::vector<int> expected(k, 0);
                for (int b = 1; b <= k; ++b) {
                    int a = *c.partner(v, u, b); // full edge: total
                    expected[b - 1] = pi[u][a - 1];
                }
                if (!visited[v]) {
                    visited[v] = 1;
                    parent[v] = u;
                    pi[v] = expected;
                    queue.push_back(v);
                } else if (pi[v] != expected) {
                    // Reconstruct the inconsistent cycle: tree path u..v plus
                    // the edge vu.
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    std::string msg = "subgraph has an inconsistent cycle through edge " +
                                      edge_name(make_edge(u, v));
                    for (int b = 1; b <= k; ++b)
                        if (pi[v][b - 1] != expected[b - 1]) {
                            msg += "; color " + std::to_string(b) + " at vertex " +
                                   std::to_string(v) + " returns as a different color";
                            break;
                        }
                    throw precondition_error(msg);
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (pi[v].empty()) pi[v] = ident;

    std::map<Edge, CorrAssignment::Matching> renamed;
    for (const auto& [e, m] : c.all()) {
        CorrAssignment::Matching nm;
        nm.reserve(m.size());
        for (auto [a, b] : m) nm.emplace_back(pi[e.first][a - 1], pi[e.second][b - 1]);
        std::sort(nm.begin(), nm.end());
        renamed[e] = std::move(nm);
    }
    StraightenResult res{CorrAssignment(g, k, std::move(renamed)), std::move(pi)};
    for (const Edge& e : h)
        if (!is_straight(res.assignment, make_edge(e.first, e.second)))
            throw precondition_error("internal error: edge " + edge_name(e) +
                                     " not straight after renaming");
    return res;
}

FromListsResult from_lists(const SimpleGraph& g,
                           const std::vector<std::vector<int>>& lists, int k) {
    const int n = g.vertex_count();
    if (static_cast<int>(lists.size()) != n)
        throw input_error("one list per vertex required");
    FromListsResult res{CorrAssignment(g, k, {}), {}};
    std::vector<std::vector<int>> decode(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> l = lists[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (static_cast<int>(l.size()) < k)
            throw input_error("list at vertex " + std::to_string(v) +
                              " has fewer than k colors");
        l.resize(k);
        decode[v] = std::move(l);
    }
    std::map<Edge, CorrAssignment::Matching> ms;
    for (const Edge& e : g.edges()) {
        CorrAssignment::Matching m;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (decode[e.first][i] == decode[e.second][j])
                    m.emplace_back(i + 1, j + 1);
        ms[e] = std::move(m);
    }
    res.assignment = CorrAssignment(g, k, std::move(ms));
    res.decode = std::move(decode);
    return res;
}

CorrAssignment transfer_assignment(const CorrAssignment& c, const SimpleGraph& new_graph,
                                   const std::vector<int>& old_to_new) {
    std::map<Edge, CorrAssignment::Matching> ms;
    for (const auto& [e, m] : c.all()) {
        int a = old_to_new[e.first], b = old_to_new[e.second];
        if (a < 0 || b < 0 || a == b) continue;
        CorrAssignment::Matching nm = m;
        if (a > b)
            for (auto& p : nm) std::swap(p.first, p.second);
        std::sort(nm.begin(), nm.end());
        Edge ne = make_edge(a, b);
        auto it = ms.find(ne);
        if (it != ms.end()) {
            if (it->second != nm)
                throw input_error("identification merges edges with different matchings");
            continue;
        }
        ms.emplace(ne, std::move(nm));
    }
    return CorrAssignment(new_graph, c.k(), std::move(ms));
}

} // namespace dpc
