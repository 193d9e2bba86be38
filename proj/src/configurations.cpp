#include "dpc/configurations.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dpc {

namespace {

int outer_overlap(const PlaneGraph& g, const FaceRecord& f) {
    int cnt = 0;
    for (int v : f.vertex_set)
        if (g.on_outer(v)) ++cnt;
    return cnt;
}

bool edge_on_triangle(const SimpleGraph& g, int u, int v) {
    for (int w : g.neighbors(u))
        if (w != v && g.adjacent(w, v)) return true;
    return false;
}

std::optional<int> triangle_apex(const SimpleGraph& g, int u, int v) {
    for (int w : g.neighbors(u))
        if (w != v && g.adjacent(w, v)) return w;
    return std::nullopt;
}

bool connected_without(const SimpleGraph& g, int skip) {
    const int n = g.vertex_count();
    if (n <= 2) return true;
    int start = skip == 0 ? 1 : 0;
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    std::deque<int> q{start};
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (w == skip || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            q.push_back(w);
        }
    }
    return reached == n - 1;
}

} // namespace

bool Classification::in_f(int k, int face) const {
    auto it = f_sets.find(k);
    return it != f_sets.end() &&
           std::binary_search(it->second.begin(), it->second.end(), face);
}

bool Classification::in_f_prime(int k, int face) const {
    auto it = f_prime_sets.find(k);
    return it != f_prime_sets.end() &&
           std::binary_search(it->second.begin(), it->second.end(), face);
}

Classification classify_3_vertices(const PlaneGraph& g) {
    Classification cl;
    cl.label.assign(g.vertex_count(), VertexClass::none);
    const int outer = g.outer_face();
    for (const FaceRecord& f : g.faces()) {
        if (f.id == outer) continue;
        int overlap = outer_overlap(g, f);
        if (overlap == 0) cl.f_sets[f.length].push_back(f.id);
        if (overlap == 1) cl.f_prime_sets[f.length].push_back(f.id);
    }
    for (auto& [k, v] : cl.f_sets) std::sort(v.begin(), v.end());
    for (auto& [k, v] : cl.f_prime_sets) std::sort(v.begin(), v.end());

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.on_outer(v) || g.degree(v) != 3) continue;
        bool bad = false, light = false;
        for (int fid : g.faces_at(v)) {
            const FaceRecord& f = g.face(fid);
            if (f.length == 3 && !cl.in_f_prime(3, fid)) bad = true;
            if (f.length == 3 && cl.in_f_prime(3, fid)) light = true;
            if (f.length == 4 && cl.in_f(4, fid)) light = true;
            if (f.length == 5 && cl.in_f(5, fid)) light = true;
        }
        // bad takes precedence: the classes must partition.
        cl.label[v] = bad ? VertexClass::bad
                          : (light ? VertexClass::light : VertexClass::good);
    }
    return cl;
}

bool is_special_face(const PlaneGraph& g, const Classification& cl, int face) {
    int len = g.face(face).length;
    return len >= 3 && len <= 8 && cl.in_f_prime(len, face);
}

HypothesisResult check_hypothesis(const PlaneGraph& g, AdjacencyConvention convention) {
    HypothesisResult res;
    res.pairs = adjacent_short_cycle_pairs(g, 8, convention);
    res.ok = res.pairs.empty();
    return res;
}

std::vector<Tetrad> find_tetrads(const PlaneGraph& g) {
    const SimpleGraph& sk = g.skeleton();
    std::set<std::array<int, 4>> seen;
    std::vector<Tetrad> out;
    for (const FaceRecord& f : g.faces()) {
        const int L = f.length;
        if (L < 4) continue;
        for (int i = 0; i < L; ++i) {
            std::array<int, 4> p{};
            for (int j = 0; j < 4; ++j) p[j] = f.boundary[(i + j) % L];
            std::set<int> distinct(p.begin(), p.end());
            if (distinct.size() != 4) continue;
            bool deg_ok = true;
            for (int v : p)
                if (sk.degree(v) != 3) { deg_ok = false; break; }
            if (!deg_ok) continue;
            auto a12 = triangle_apex(sk, p[0], p[1]);
            auto a34 = triangle_apex(sk, p[2], p[3]);
            if (!a12 || !a34) continue;
            std::array<int, 4> rev{p[3], p[2], p[1], p[0]};
            std::array<int, 4> key = std::min(p, rev);
            if (!seen.insert(key).second) continue;
            Tetrad t;
            t.path = p;
            t.apex12 = *a12;
            t.apex34 = *a34;
            t.face = f.id;
            t.avoids_s = true;
            for (int v : p)
                if (g.on_outer(v)) t.avoids_s = false;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const Tetrad& a, const Tetrad& b) {
        return a.path < b.path;
    });
    return out;
}

std::vector<Special9> find_special_9_faces(const PlaneGraph& g, const Classification& cl) {
    std::vector<Special9> out;
    for (const FaceRecord& f : g.faces()) {
        if (f.length != 9 || static_cast<int>(f.vertex_set.size()) != 9) continue;
        if (!cl.in_f(9, f.id)) continue;
        auto label_at = [&](int v) { return cl.label[v]; };
        bool found = false;
        for (int dir = 0; dir < 2 && !found; ++dir) {
            for (int shift = 0; shift < 9 && !found; ++shift) {
                std::array<int, 9> a{};
                for (int i = 0; i < 9; ++i) {
                    int idx = dir == 0 ? (shift + i) % 9 : ((shift - i) % 9 + 9) % 9;
                    a[i] = f.boundary[idx];
                }
                bool ok = label_at(a[0]) == VertexClass::light &&
                          label_at(a[1]) == VertexClass::light;
                for (int i : {2, 3, 4, 6, 7, 8})
                    ok = ok && label_at(a[i]) == VertexClass::bad;
                if (ok) {
                    out.push_back(Special9{f.id, a});
                    found = true;
                }
            }
        }
    }
    return out;
}

std::vector<BadRun> check_bad_runs(const PlaneGraph& g, const Classification& cl) {
    const SimpleGraph& sk = g.skeleton();
    std::vector<BadRun> out;
    for (const FaceRecord& f : g.faces()) {
        const int L = f.length;
        std::vector<char> bad(L, 0);
        bool any_bad = false, all_bad = true;
        for (int i = 0; i < L; ++i) {
            bad[i] = cl.label[f.boundary[i]] == VertexClass::bad;
            any_bad |= bad[i];
            all_bad &= static_cast<bool>(bad[i]);
        }
        if (!any_bad) continue;
        if (all_bad) {
            BadRun r;
            r.face = f.id;
            r.run = f.boundary;
            r.run_bound_exceeded = L >= 5;
            out.push_back(std::move(r));
            continue;
        }
        // maximal runs in the cyclic sequence
        for (int i = 0; i < L; ++i) {
            if (!bad[i] || bad[(i - 1 + L) % L]) continue;
            BadRun r;
            r.face = f.id;
            int j = i;
            while (bad[j % L]) {
                r.run.push_back(f.boundary[j % L]);
                ++j;
            }
            int len = static_cast<int>(r.run.size());
            r.run_bound_exceeded = len >= 5;
            if (len == 4) {
                int v0 = f.boundary[(i - 1 + L) % L];
                int v5 = f.boundary[j % L];
                std::set<int> ctx(r.run.begin(), r.run.end());
                ctx.insert(v0);
                ctx.insert(v5);
                if (ctx.size() == 6) {
                    r.has_context = true;
                    r.e01_on_triangle = edge_on_triangle(sk, v0, r.run[0]);
                    r.e23_on_triangle = edge_on_triangle(sk, r.run[1], r.run[2]);
                    r.e45_on_triangle = edge_on_triangle(sk, r.run[3], v5);
                }
            }
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const BadRun& a, const BadRun& b) {
        if (a.face != b.face) return a.face < b.face;
        return a.run < b.run;
    });
    return out;
}

SideConditionReport side_conditions(const PlaneGraph& g) {
    SideConditionReport rep;
    const SimpleGraph& sk = g.skeleton();
    const int n = sk.vertex_count();
    const FaceRecord& outer = g.face(g.outer_face());

    // (a) V(G) != S
    rep.proper_subset = static_cast<int>(g.outer_vertices().size()) < n;

    // (b) 2-connected
    for (int v = 0; v < n && rep.two_connected; ++v)
        if (!connected_without(sk, v)) {
            rep.two_connected = false;
            rep.cut_vertex = v;
        }

    // (c) internal minimum degree 3
    for (int v = 0; v < n; ++v)
        if (!g.on_outer(v) && sk.degree(v) < 3) rep.low_degree_internal.push_back(v);
    rep.min_internal_degree = rep.low_degree_internal.empty();

    // (d) separating k-cycles, 3 <= k <= 12
    for (const CycleRef& cyc : cycles_up_to(sk, 12)) {
        SeparationResult s = is_separating(g, cyc);
        if (s.separating) rep.separating_cycles.push_back(cyc);
    }
    rep.no_separating_cycle = rep.separating_cycles.empty();

    // (e) D is an induced cycle
    if (static_cast<int>(outer.vertex_set.size()) == outer.length) {
        CycleRef d{outer.boundary};
        rep.chords_of_d = chords_of(sk, d);
    } else {
        rep.induced_outer = false; // boundary walk repeats a vertex
    }
    if (!rep.chords_of_d.empty()) rep.induced_outer = false;

    // (f) paths of length 2 or 3 between S-vertices, interior outside S
    auto on_s = [&](int v) { return g.on_outer(v); };
    auto check_path = [&](const std::vector<int>& path) {
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int a = path[i], b = path[i + 1];
            for (int w : sk.neighbors(a)) {
                if (w == b || !sk.adjacent(w, b)) continue;
                int in_s = (on_s(a) ? 1 : 0) + (on_s(b) ? 1 : 0) + (on_s(w) ? 1 : 0);
                if (in_s <= 1) {
                    PathViolation pv;
                    pv.path = path;
                    pv.edge = make_edge(a, b);
                    pv.triangle = {a, b, w};
                    rep.path_violations.push_back(pv);
                }
            }
        }
    };
    for (int m = 0; m < n; ++m) {
        if (on_s(m)) continue;
        const auto& nb = sk.neighbors(m);
        // length 2: u - m - w
        for (int u : nb)
            for (int w : nb) {
                if (u >= w || !on_s(u) || !on_s(w)) continue;
                check_path({u, m, w});
            }
        // length 3: u - m - m2 - w, each path once via m < m2
        for (int m2 : nb) {
            if (on_s(m2) || m2 <= m) continue;
            for (int u : nb) {
                if (!on_s(u) || u == m2) continue;
                for (int w : sk.neighbors(m2)) {
                    if (!on_s(w) || w == u || w == m) continue;
                    check_path({u, m, m2, w});
                }
            }
        }
    }
    rep.path_condition = rep.path_violations.empty();

    // Internal 4-faces may meet D in at most two vertices, and two only
    // when consecutive on D.
    std::set<Edge> d_edges;
    for (int i = 0; i < outer.length; ++i)
        d_edges.insert(make_edge(outer.boundary[i], outer.boundary[(i + 1) % outer.length]));
    for (const FaceRecord& f : g.faces()) {
        if (f.id == g.outer_face() || f.length != 4) continue;
        std::vector<int> on_d;
        for (int v : f.vertex_set)
            if (g.on_outer(v)) on_d.push_back(v);
        if (on_d.size() >= 3) {
            rep.four_face_violations.push_back(FourFaceViolation{f.id, on_d, false});
        } else if (on_d.size() == 2 &&
                   !d_edges.count(make_edge(on_d[0], on_d[1]))) {
            rep.four_face_violations.push_back(FourFaceViolation{f.id, on_d, true});
        }
    }
    rep.four_face_condition = rep.four_face_violations.empty();
    return rep;
}

std::vector<std::string> ConfigReport::citations() const {
    std::vector<std::string> out;
    auto cycle_str = [](const CycleRef& c) {
        std::string s = "[";
        for (size_t i = 0; i < c.vertices.size(); ++i)
            s += (i ? " " : "") + std::to_string(c.vertices[i]);
        return s + "]";
    };
    if (!hypothesis.ok)
        out.push_back("hypothesis violated: " + std::to_string(hypothesis.pairs.size()) +
                      " adjacent pair(s) of cycles of length <= 8, first " +
                      cycle_str(hypothesis.pairs.front().first) + " / " +
                      cycle_str(hypothesis.pairs.front().second));
    if (!outer_within_regime) out.push_back("outer face longer than 12 (|S| <= 12 regime)");
    const SideConditionReport& sc = side_conditions;
    if (!sc.proper_subset) out.push_back("violation: the boundary covers the whole graph (V = S)");
    if (!sc.two_connected)
        out.push_back("violation: not 2-connected, cut vertex " +
                      std::to_string(sc.cut_vertex.value_or(-1)));
    if (!sc.min_internal_degree)
        out.push_back("violation: internal vertex " +
                      std::to_string(sc.low_degree_internal.front()) + " has degree <= 2");
    if (!sc.no_separating_cycle)
        out.push_back("violation: separating cycle " +
                      cycle_str(sc.separating_cycles.front()));
    if (!sc.induced_outer) {
        std::string s = "violation: the outer face is not an induced cycle";
        if (!sc.chords_of_d.empty())
            s += ", chord " + std::to_string(sc.chords_of_d.front().first) + "-" +
                 std::to_string(sc.chords_of_d.front().second);
        out.push_back(s);
    }
    if (!sc.path_condition) {
        const PathViolation& pv = sc.path_violations.front();
        out.push_back("violation: edge " + std::to_string(pv.edge.first) + "-" +
                      std::to_string(pv.edge.second) +
                      " of a boundary-to-boundary path lies on a triangle meeting the boundary in at most one vertex");
    }
    if (!sc.four_face_condition)
        out.push_back("violation: internal 4-face " +
                      std::to_string(sc.four_face_violations.front().face) +
                      " meets the outer cycle in too many or non-consecutive vertices");
    for (const Tetrad& t : tetrads)
        if (t.avoids_s)
            out.push_back("reducible: tetrad [" + std::to_string(t.path[0]) + " " +
                          std::to_string(t.path[1]) + " " + std::to_string(t.path[2]) + " " +
                          std::to_string(t.path[3]) + "] avoiding the boundary");
    for (const Special9& s : special9)
        out.push_back("reducible: special 9-face " + std::to_string(s.face));
    for (const BadRun& r : bad_runs)
        if (r.run_bound_exceeded)
            out.push_back("reducible: " + std::to_string(r.run.size()) +
                          " consecutive bad vertices on face " + std::to_string(r.face));
    return out;
}

ConfigReport build_config_report(const PlaneGraph& g, AdjacencyConvention convention) {
    ConfigReport rep;
    rep.hypothesis = check_hypothesis(g, convention);
    rep.classification = classify_3_vertices(g);
    rep.tetrads = find_tetrads(g);
    rep.special9 = find_special_9_faces(g, rep.classification);
    rep.bad_runs = check_bad_runs(g, rep.classification);
    rep.side_conditions = side_conditions(g);
    rep.outer_within_regime = g.face(g.outer_face()).length <= 12;
    return rep;
}

} // namespace dpc
