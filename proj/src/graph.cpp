#include "dpc/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace dpc {

namespace {

std::string dart_name(int u, int v) {
    return std::to_string(u) + "->" + std::to_string(v);
}

} // namespace

SimpleGraph::SimpleGraph(std::vector<std::vector<int>> adjacency)
    : adj_(std::move(adjacency)) {
    const int n = static_cast<int>(adj_.size());
    sets_.resize(n);
    for (int v = 0; v < n; ++v) {
        for (int w : adj_[v]) {
            if (w < 0 || w >= n)
                throw input_error("neighbor id out of range at vertex " + std::to_string(v));
            if (w == v)
                throw input_error("loop at vertex " + std::to_string(v));
            if (!sets_[v].insert(w).second)
                throw input_error("repeated neighbor " + std::to_string(w) +
                                  " at vertex " + std::to_string(v));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int w : adj_[v])
            if (sets_[w].count(v) == 0)
                throw input_error("asymmetric adjacency, dart " + dart_name(v, w) +
                                  " has no reverse");
    int darts = 0;
    for (int v = 0; v < n; ++v) darts += static_cast<int>(adj_[v].size());
    edge_count_ = darts / 2;
}

bool SimpleGraph::connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push_back(w);
            }
    }
    return reached == n;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotation)
    : rotation_(std::move(rotation)), skeleton_(rotation_) {
    if (!skeleton_.connected())
        throw input_error("plane graph must be connected");
    const int n = vertex_count();
    rotation_pos_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        rotation_pos_[v].assign(n, -1);
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i)
            rotation_pos_[v][rotation_[v][i]] = i;
    }
    trace_faces();
    const int euler = vertex_count() - edge_count() + face_count();
    if (vertex_count() > 0 && euler != 2)
        throw input_error("rotation system is not planar: V-E+F = " + std::to_string(euler));
}

int PlaneGraph::rotation_index(int v, int neighbor) const {
    int i = rotation_pos_[v][neighbor];
    if (i < 0)
        throw input_error("dart " + dart_name(v, neighbor) + " does not exist");
    return i;
}

void PlaneGraph::trace_faces() {
    const int n = vertex_count();
    dart_face_.assign(n, {});
    for (int v = 0; v < n; ++v) dart_face_[v].assign(rotation_[v].size(), -1);
    faces_.clear();
    for (int v0 = 0; v0 < n; ++v0) {
        for (int i0 = 0; i0 < static_cast<int>(rotation_[v0].size()); ++i0) {
            if (dart_face_[v0][i0] >= 0) continue;
            FaceRecord f;
            f.id = static_cast<int>(faces_.size());
            int v = v0, i = i0;
            do {
                dart_face_[v][i] = f.id;
                f.boundary.push_back(v);
                int w = rotation_[v][i];
                // next dart: from w, the successor of v in w's rotation
                int j = rotation_index(w, v);
                int next = (j + 1) % static_cast<int>(rotation_[w].size());
                v = w;
                i = next;
            } while (!(v == v0 && i == i0));
            f.length = static_cast<int>(f.boundary.size());
            f.vertex_set = f.boundary;
            std::sort(f.vertex_set.begin(), f.vertex_set.end());
            f.vertex_set.erase(std::unique(f.vertex_set.begin(), f.vertex_set.end()),
                               f.vertex_set.end());
            faces_.push_back(std::move(f));
        }
    }
}

int PlaneGraph::face_of_dart(int u, int v) const {
    return dart_face_[u][rotation_index(u, v)];
}

std::vector<int> PlaneGraph::faces_at(int v) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i)
        out.push_back(dart_face_[v][i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Does the face boundary walk equal `cycle` up to rotation/reflection?
bool boundary_matches(const std::vector<int>& walk, const std::vector<int>& cycle) {
    const int m = static_cast<int>(walk.size());
    if (m != static_cast<int>(cycle.size())) return false;
    for (int dir = 0; dir < 2; ++dir) {
        for (int shift = 0; shift < m; ++shift) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                int idx = dir == 0 ? (shift + i) % m : ((shift - i) % m + m) % m;
                ok = walk[idx] == cycle[i];
            }
            if (ok) return true;
        }
    }
    return false;
}

} // namespace

void PlaneGraph::designate_outer(const std::vector<int>& cycle) {
    for (const FaceRecord& f : faces_) {
        if (boundary_matches(f.boundary, cycle)) {
            outer_face_ = f.id;
            for (FaceRecord& g : faces_) g.is_outer = (g.id == outer_face_);
            outer_vertices_ = faces_[outer_face_].vertex_set;
            return;
        }
    }
    throw input_error("outer_face cycle does not match any traced face");
}

int PlaneGraph::outer_face() const {
    if (outer_face_ < 0) throw input_error("outer face has not been designated");
    return outer_face_;
}

const std::vector<int>& PlaneGraph::outer_vertices() const {
    if (outer_face_ < 0) throw input_error("outer face has not been designated");
    return outer_vertices_;
}

bool PlaneGraph::on_outer(int v) const {
    const auto& s = outer_vertices();
    return std::binary_search(s.begin(), s.end(), v);
}

void require_cycle(const SimpleGraph& g, const CycleRef& k) {
    const int m = k.length();
    if (m < 3) throw input_error("cycle must have at least 3 vertices");
    std::set<int> distinct(k.vertices.begin(), k.vertices.end());
    if (static_cast<int>(distinct.size()) != m)
        throw input_error("cycle vertices are not distinct");
    for (int i = 0; i < m; ++i) {
        int u = k.vertices[i], v = k.vertices[(i + 1) % m];
        if (u < 0 || u >= g.vertex_count() || !g.adjacent(u, v))
            throw input_error("cycle vertices " + std::to_string(u) + "," +
                              std::to_string(v) + " are not adjacent");
    }
}

std::vector<CycleRef> cycles_up_to(const SimpleGraph& g, int max_len) {
    if (max_len < 3) throw input_error("max_len must be at least 3");
    if (max_len > 12) throw input_error("cycle enumeration is capped at length 12");
    std::vector<CycleRef> out;
    const int n = g.vertex_count();
    std::vector<char> in_path(n, 0);
    std::vector<int> path;
    // Canonical form: smallest vertex first, second vertex < last vertex.
    for (int s = 0; s < n; ++s) {
        path = {s};
        in_path[s] = 1;
        auto dfs = [&](auto&& dfs) -> void {
            int v = path.back();
            for (int w : g.neighbors(v)) {
                if (w == s && static_cast<int>(path.size()) >= 3) {
                    if (path[1] < path.back()) out.push_back(CycleRef{path});
                    continue;
                }
                if (w <= s || in_path[w]) continue;
                if (static_cast<int>(path.size()) == max_len) continue;
                path.push_back(w);
                in_path[w] = 1;
                dfs(dfs);
                in_path[w] = 0;
                path.pop_back();
            }
        };
        dfs(dfs);
        in_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), [](const CycleRef& a, const CycleRef& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

std::vector<CycleRef> cycles_up_to(const PlaneGraph& g, int max_len) {
    return cycles_up_to(g.skeleton(), max_len);
}

namespace {

std::set<Edge> cycle_edges(const CycleRef& c) {
    std::set<Edge> out;
    for (int i = 0; i < c.length(); ++i)
        out.insert(make_edge(c.vertices[i], c.vertices[(i + 1) % c.length()]));
    return out;
}

} // namespace

std::vector<std::pair<CycleRef, CycleRef>>
adjacent_short_cycle_pairs(const SimpleGraph& g, int max_len, AdjacencyConvention convention) {
    std::vector<CycleRef> cycles = cycles_up_to(g, max_len);
    std::vector<std::set<Edge>> edge_sets;
    std::vector<std::set<int>> vertex_sets;
    edge_sets.reserve(cycles.size());
    for (const CycleRef& c : cycles) {
        edge_sets.push_back(cycle_edges(c));
        vertex_sets.emplace_back(c.vertices.begin(), c.vertices.end());
    }
    std::vector<std::pair<CycleRef, CycleRef>> out;
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            bool share = false;
            if (convention == AdjacencyConvention::edge_sharing) {
                for (const Edge& e : edge_sets[i])
                    if (edge_sets[j].count(e)) { share = true; break; }
            } else {
                for (int v : vertex_sets[i])
                    if (vertex_sets[j].count(v)) { share = true; break; }
            }
            if (share) out.emplace_back(cycles[i], cycles[j]);
        }
    }
    return out;
}

std::vector<std::pair<CycleRef, CycleRef>>
adjacent_short_cycle_pairs(const PlaneGraph& g, int max_len, AdjacencyConvention convention) {
    return adjacent_short_cycle_pairs(g.skeleton(), max_len, convention);
}

SeparationResult is_separating(const PlaneGraph& g, const CycleRef& k) {
    require_cycle(g.skeleton(), k);
    const int n = g.vertex_count();
    const int m = k.length();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < m; ++i) pos[k.vertices[i]] = i;

    // Classify every non-cycle edge at a cycle vertex by the side of K it
    // leaves on: walking clockwise in the rotation from the successor to the
    // predecessor on K gives one side (A), the rest the other (B).
    // side_of_dart[(u,w)] for u on K.
    std::map<std::pair<int, int>, int> dart_side;
    for (int i = 0; i < m; ++i) {
        int v = k.vertices[i];
        int nxt = k.vertices[(i + 1) % m];
        int prv = k.vertices[(i - 1 + m) % m];
        const auto& rot = g.rotation(v);
        const int d = static_cast<int>(rot.size());
        int start = -1;
        for (int idx = 0; idx < d; ++idx)
            if (rot[idx] == nxt) start = idx;
        int side = 0; // A until we pass prv, then B
        for (int step = 1; step < d; ++step) {
            int w = rot[(start + step) % d];
            if (w == prv) { side = 1; continue; }
            dart_side[{v, w}] = side;
        }
    }

    // Components of G - V(K).
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (pos[s] >= 0 || comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.skeleton().neighbors(v))
                if (pos[w] < 0 && comp[w] < 0) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
        }
        ++ncomp;
    }

    // Attach each component to a side via the classified darts.
    std::vector<int> comp_side(ncomp, -1);
    for (const auto& [dart, side] : dart_side) {
        int w = dart.second;
        if (pos[w] >= 0) continue; // chord, handled below
        int c = comp[w];
        if (comp_side[c] >= 0 && comp_side[c] != side)
            throw input_error("embedding inconsistency while classifying cycle sides");
        comp_side[c] = side;
    }

    // Locate which side the outer face is on.
    const FaceRecord& outer = g.face(g.outer_face());
    int outer_side = -1;
    for (int v : outer.boundary)
        if (pos[v] < 0) { outer_side = comp_side[comp[v]]; break; }
    if (outer_side < 0) {
        // Outer boundary lies entirely on V(K); look for a chord dart on it.
        const int L = outer.length;
        for (int i = 0; i < L && outer_side < 0; ++i) {
            int u = outer.boundary[i], w = outer.boundary[(i + 1) % L];
            auto it = dart_side.find({u, w});
            if (it != dart_side.end()) outer_side = it->second;
        }
    }

    SeparationResult res;
    if (outer_side < 0) {
        // Outer face is bounded by K itself: everything else is inside.
        for (int v = 0; v < n; ++v)
            if (pos[v] < 0) res.inside.push_back(v);
    } else {
        for (int v = 0; v < n; ++v) {
            if (pos[v] >= 0) continue;
            if (comp_side[comp[v]] == outer_side)
                res.outside.push_back(v);
            else
                res.inside.push_back(v);
        }
    }
    res.separating = !res.inside.empty() && !res.outside.empty();
    return res;
}

std::vector<Edge> chords_of(const SimpleGraph& g, const CycleRef& k) {
    require_cycle(g, k);
    const int m = k.length();
    std::vector<Edge> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (j == i + 1 || (i == 0 && j == m - 1)) continue;
            int u = k.vertices[i], v = k.vertices[j];
            if (g.adjacent(u, v)) out.push_back(make_edge(u, v));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> chords_of(const PlaneGraph& g, const CycleRef& k) {
    return chords_of(g.skeleton(), k);
}

int bfs_distance(const SimpleGraph& g, int from, int to) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> q{from};
    dist[from] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == to) return dist[v];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return -1;
}

IdentifyResult identify(const SimpleGraph& g, int u, int v) {
    if (u == v) throw input_error("identify requires two distinct vertices");
    if (g.adjacent(u, v))
        throw input_error("identify refused: " + std::to_string(u) + " and " +
                          std::to_string(v) + " are adjacent (would create a loop)");
    const int n = g.vertex_count();
    int dist = bfs_distance(g, u, v);

    int lo = std::min(u, v), hi = std::max(u, v);
    IdentifyResult res;
    res.old_to_new.assign(n, -1);
    for (int w = 0; w < n; ++w) {
        if (w == hi) continue;
        res.old_to_new[w] = w < hi ? w : w - 1;
    }
    res.old_to_new[hi] = res.old_to_new[lo];
    res.merged_vertex = res.old_to_new[lo];

    std::vector<std::set<int>> sets(n - 1);
    for (int w = 0; w < n; ++w)
        for (int x : g.neighbors(w)) {
            int a = res.old_to_new[w], b = res.old_to_new[x];
            if (a != b) sets[a].insert(b);
        }
    std::vector<std::vector<int>> adj(n - 1);
    for (int w = 0; w < n - 1; ++w) adj[w].assign(sets[w].begin(), sets[w].end());
    res.merged = SimpleGraph(std::move(adj));
    res.created_short_cycle = dist >= 0 && dist <= 8;
    return res;
}

IdentifyResult identify(const PlaneGraph& g, int u, int v) {
    return identify(g.skeleton(), u, v);
}

SubgraphResult remove_vertices(const SimpleGraph& g, const std::vector<int>& removed) {
    const int n = g.vertex_count();
    std::vector<char> drop(n, 0);
    for (int v : removed) drop[v] = 1;
    SubgraphResult res;
    res.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (!drop[v]) {
            res.old_to_new[v] = static_cast<int>(res.new_to_old.size());
            res.new_to_old.push_back(v);
        }
    std::vector<std::vector<int>> adj(res.new_to_old.size());
    for (int v = 0; v < n; ++v) {
        if (drop[v]) continue;
        for (int w : g.neighbors(v))
            if (!drop[w]) adj[res.old_to_new[v]].push_back(res.old_to_new[w]);
    }
    res.graph = SimpleGraph(std::move(adj));
    return res;
}

} // namespace dpc
