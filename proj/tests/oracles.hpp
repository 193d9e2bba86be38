#pragma once

// Independent test-side oracles. These deliberately avoid the library's own
// algorithms: cycle counts come from raw vertex-sequence enumeration,
// separation from a dual-graph flood fill, colorability from full k^n
// enumeration.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dpc/correspondence.hpp"
#include "dpc/graph.hpp"

namespace oracles {

using dpc::CorrAssignment;
using dpc::CycleRef;
using dpc::Edge;
using dpc::PlaneGraph;
using dpc::SimpleGraph;

// Every cycle of length <= max_len, deduplicated by its canonical vertex
// sequence (all rotations and both directions).
inline std::set<std::vector<int>> brute_force_cycles(const SimpleGraph& g, int max_len) {
    std::set<std::vector<int>> canon;
    const int n = g.vertex_count();
    std::vector<int> seq;
    std::vector<char> used(n, 0);
    auto canonical = [](const std::vector<int>& c) {
        const int m = static_cast<int>(c.size());
        std::vector<int> best;
        for (int dir = 0; dir < 2; ++dir)
            for (int s = 0; s < m; ++s) {
                std::vector<int> cand(m);
                for (int i = 0; i < m; ++i)
                    cand[i] = dir == 0 ? c[(s + i) % m] : c[((s - i) % m + m) % m];
                if (best.empty() || cand < best) best = cand;
            }
        return best;
    };
    auto dfs = [&](auto&& dfs) -> void {
        int v = seq.back();
        for (int w : g.neighbors(v)) {
            if (w == seq.front() && seq.size() >= 3) canon.insert(canonical(seq));
            if (used[w] || static_cast<int>(seq.size()) >= max_len) continue;
            used[w] = 1;
            seq.push_back(w);
            dfs(dfs);
            seq.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        seq = {s};
        used.assign(n, 0);
        used[s] = 1;
        dfs(dfs);
    }
    return canon;
}

// Number of unordered pairs of distinct short cycles sharing an edge (or a
// vertex), straight from the brute-force cycle list.
inline long long brute_force_adjacent_pairs(const SimpleGraph& g, int max_len,
                                            bool vertex_sharing = false) {
    std::set<std::vector<int>> cycle_set = brute_force_cycles(g, max_len);
    std::vector<std::vector<int>> cycles(cycle_set.begin(), cycle_set.end());
    auto edges_of = [](const std::vector<int>& c) {
        std::set<Edge> es;
        for (size_t i = 0; i < c.size(); ++i)
            es.insert(dpc::make_edge(c[i], c[(i + 1) % c.size()]));
        return es;
    };
    long long count = 0;
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            bool share = false;
            if (vertex_sharing) {
                std::set<int> a(cycles[i].begin(), cycles[i].end());
                for (int v : cycles[j])
                    if (a.count(v)) share = true;
            } else {
                auto ea = edges_of(cycles[i]);
                for (const Edge& e : edges_of(cycles[j]))
                    if (ea.count(e)) share = true;
            }
            if (share) ++count;
        }
    return count;
}

// Dual-graph flood fill: faces reachable from the outer face without
// crossing an edge of K are outside; vertices inherit the side of any face
// containing them.
struct DualSeparation {
    bool separating;
    std::set<int> inside, outside;
};

inline DualSeparation dual_flood_separation(const PlaneGraph& g, const CycleRef& k) {
    std::set<Edge> k_edges;
    const int m = k.length();
    for (int i = 0; i < m; ++i)
        k_edges.insert(dpc::make_edge(k.vertices[i], k.vertices[(i + 1) % m]));
    std::vector<char> outside_face(g.face_count(), 0);
    std::deque<int> q{g.outer_face()};
    outside_face[g.outer_face()] = 1;
    while (!q.empty()) {
        int fid = q.front();
        q.pop_front();
        const dpc::FaceRecord& f = g.face(fid);
        for (int i = 0; i < f.length; ++i) {
            int u = f.boundary[i], v = f.boundary[(i + 1) % f.length];
            if (k_edges.count(dpc::make_edge(u, v))) continue;
            int nf = g.face_of_dart(v, u); // the face across this dart
            if (!outside_face[nf]) {
                outside_face[nf] = 1;
                q.push_back(nf);
            }
        }
    }
    std::set<int> on_k(k.vertices.begin(), k.vertices.end());
    DualSeparation res;
    for (const dpc::FaceRecord& f : g.faces())
        for (int v : f.vertex_set) {
            if (on_k.count(v)) continue;
            if (outside_face[f.id])
                res.outside.insert(v);
            else
                res.inside.insert(v);
        }
    res.separating = !res.inside.empty() && !res.outside.empty();
    return res;
}

// Exhaustive k^n search for a C-coloring extending phi0.
inline std::optional<std::vector<int>> naive_coloring(const SimpleGraph& g,
                                                      const CorrAssignment& c,
                                                      const std::vector<int>& phi0) {
    const int n = g.vertex_count();
    std::vector<int> col(n, 0);
    auto valid_edge = [&](int u, int v) {
        auto p = c.partner(u, v, col[u]);
        return !(p && *p == col[v]);
    };
    auto rec = [&](auto&& rec, int v) -> bool {
        if (v == n) return true;
        if (!phi0.empty() && phi0[v] != 0) {
            col[v] = phi0[v];
            for (int w : g.neighbors(v))
                if (w < v && !valid_edge(v, w)) return false;
            return rec(rec, v + 1);
        }
        for (int cc = 1; cc <= c.k(); ++cc) {
            col[v] = cc;
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && !valid_edge(v, w)) ok = false;
            if (ok && rec(rec, v + 1)) return true;
        }
        col[v] = 0;
        return false;
    };
    if (rec(rec, 0)) return col;
    return std::nullopt;
}

// All closed walks v_0 .. v_len = v_0 of length 2..max_len.
inline std::vector<std::vector<int>> closed_walks_up_to(const SimpleGraph& g, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> walk;
    auto rec = [&](auto&& rec) -> void {
        if (static_cast<int>(walk.size()) > 2 && walk.back() == walk.front())
            out.push_back(walk);
        if (static_cast<int>(walk.size()) > max_len) return;
        for (int w : g.neighbors(walk.back())) {
            walk.push_back(w);
            rec(rec);
            walk.pop_back();
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        walk = {s};
        rec(rec);
    }
    return out;
}

} // namespace oracles
