#include "dpc/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "dpc/configurations.hpp"
#include "dpc/solver.hpp"

namespace dpc {

namespace {

// splitmix64: tiny deterministic generator, identical across platforms.
std::uint64_t next_rand(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rand_below(std::uint64_t& state, std::uint64_t n) {
    return next_rand(state) % n;
}

std::vector<std::vector<int>> cycle_rotation(int L) {
    std::vector<std::vector<int>> rot(L);
    for (int i = 0; i < L; ++i) rot[i] = {(i + 1) % L, (i - 1 + L) % L};
    return rot;
}

void insert_after(std::vector<int>& rotation, int after, int neighbor) {
    auto it = std::find(rotation.begin(), rotation.end(), after);
    rotation.insert(it + 1, neighbor);
}

// Inserts a path of `p` edges between boundary positions i and j of face f,
// drawn inside f. Returns the new vertex ids.
std::vector<int> insert_ear(std::vector<std::vector<int>>& rot, const FaceRecord& f,
                            int i, int j, int p) {
    const int L = f.length;
    int u = f.boundary[i], w = f.boundary[j];
    int u_prev = f.boundary[(i - 1 + L) % L];
    int w_prev = f.boundary[(j - 1 + L) % L];
    std::vector<int> path; // interior vertices
    for (int t = 0; t < p - 1; ++t) {
        path.push_back(static_cast<int>(rot.size()));
        rot.push_back({});
    }
    int first = path.empty() ? w : path.front();
    int last = path.empty() ? u : path.back();
    insert_after(rot[u], u_prev, first);
    insert_after(rot[w], w_prev, last);
    for (int t = 0; t < static_cast<int>(path.size()); ++t) {
        int before = t == 0 ? u : path[t - 1];
        int after = t + 1 == static_cast<int>(path.size()) ? w : path[t + 1];
        rot[path[t]] = {before, after};
    }
    return path;
}

struct EarPlan {
    int face = -1;
    int i = 0, j = 0, p = 1;
};

// Picks an ear keeping every face length >= 9; anchors restricted to the
// outer cycle when `boundary_anchors`.
bool plan_ear(const PlaneGraph& g, int outer_id, std::uint64_t& rng, bool boundary_anchors,
              int outer_len, EarPlan& plan) {
    std::vector<int> candidates;
    for (const FaceRecord& f : g.faces())
        if (f.id != outer_id && f.length >= 9 &&
            static_cast<int>(f.vertex_set.size()) == f.length)
            candidates.push_back(f.id);
    if (candidates.empty()) return false;
    for (int attempt = 0; attempt < 20; ++attempt) {
        int fid = candidates[rand_below(rng, candidates.size())];
        const FaceRecord& f = g.face(fid);
        int L = f.length;
        int i = static_cast<int>(rand_below(rng, L));
        int off = 1 + static_cast<int>(rand_below(rng, L - 1));
        int j = (i + off) % L;
        int u = f.boundary[i], w = f.boundary[j];
        if (u == w) continue;
        if (boundary_anchors && (u >= outer_len || w >= outer_len)) continue;
        int arc_a = off, arc_b = L - off;
        int p = std::max(1, 9 - std::min(arc_a, arc_b));
        p += static_cast<int>(rand_below(rng, 3));
        if (p == 1 && g.adjacent(u, w)) p = 9; // no parallel edges
        if (p > 12) continue;
        plan = {fid, i, j, p};
        return true;
    }
    return false;
}

GraphDocument finish_document(std::vector<std::vector<int>> rot, int L) {
    GraphDocument doc;
    doc.format_version = 1;
    doc.k = 3;
    doc.rotation = std::move(rot);
    doc.outer_face.resize(L);
    std::iota(doc.outer_face.begin(), doc.outer_face.end(), 0);
    return doc;
}

std::array<int, 4> split_arcs(std::uint64_t& rng, int L, std::array<int, 4> mins) {
    int slack = L - (mins[0] + mins[1] + mins[2] + mins[3]);
    for (int s = 0; s < slack; ++s) mins[rand_below(rng, 4)] += 1;
    return mins;
}

} // namespace

Profile profile_from_string(const std::string& name) {
    if (name == "sparse-girth") return Profile::sparse_girth;
    if (name == "tetrad-gadget") return Profile::tetrad_gadget;
    if (name == "special9-gadget") return Profile::special9_gadget;
    if (name == "boundary-heavy") return Profile::boundary_heavy;
    throw input_error("unknown profile '" + name + "'");
}

std::string profile_name(Profile p) {
    switch (p) {
        case Profile::sparse_girth: return "sparse-girth";
        case Profile::tetrad_gadget: return "tetrad-gadget";
        case Profile::special9_gadget: return "special9-gadget";
        case Profile::boundary_heavy: return "boundary-heavy";
    }
    return "?";
}

GraphDocument make_tetrad_gadget(int L, const std::array<int, 4>& arcs,
                                 TetradGadget* layout) {
    if (arcs[0] < 3 || arcs[1] < 2 || arcs[2] < 3 || arcs[3] < 1 ||
        arcs[0] + arcs[1] + arcs[2] + arcs[3] != L)
        throw input_error("tetrad gadget arcs must be >= {3,2,3,1} and sum to L");
    TetradGadget lay;
    lay.L = L;
    int id = L;
    lay.v1 = id++; lay.v2 = id++; lay.v3 = id++; lay.v4 = id++;
    lay.x = id++; lay.y = id++; lay.v1p = id++; lay.v4p = id++;
    lay.q1 = id++; lay.p1 = id++; lay.p2 = id++; lay.q2 = id++;
    int da = 0, db = arcs[0], dc = arcs[0] + arcs[1], dd = arcs[0] + arcs[1] + arcs[2];

    std::vector<std::vector<int>> rot(id);
    for (int i = 0; i < L; ++i) {
        rot[i].push_back((i + 1) % L);
        if (i == da) rot[i].push_back(lay.q1);
        if (i == db) rot[i].push_back(lay.p1);
        if (i == dc) rot[i].push_back(lay.p2);
        if (i == dd) rot[i].push_back(lay.q2);
        rot[i].push_back((i - 1 + L) % L);
    }
    rot[lay.v1] = {lay.v1p, lay.x, lay.v2};
    rot[lay.v2] = {lay.v1, lay.x, lay.v3};
    rot[lay.v3] = {lay.v2, lay.y, lay.v4};
    rot[lay.v4] = {lay.v3, lay.y, lay.v4p};
    rot[lay.x] = {lay.v2, lay.v1, lay.p1};
    rot[lay.y] = {lay.v4, lay.v3, lay.p2};
    rot[lay.v1p] = {lay.v1, lay.q1};
    rot[lay.v4p] = {lay.v4, lay.q2};
    rot[lay.q1] = {lay.v1p, da};
    rot[lay.p1] = {lay.x, db};
    rot[lay.p2] = {lay.y, dc};
    rot[lay.q2] = {lay.v4p, dd};

    if (layout) *layout = lay;
    return finish_document(std::move(rot), L);
}

GraphDocument make_special9_gadget(int L, const std::array<int, 4>& arcs,
                                   Special9Gadget* layout) {
    if (arcs[0] < 2 || arcs[1] < 1 || arcs[2] < 2 || arcs[3] < 1 ||
        arcs[0] + arcs[1] + arcs[2] + arcs[3] != L)
        throw input_error("special-9 gadget arcs must be >= {2,1,2,1} and sum to L");
    Special9Gadget lay;
    lay.L = L;
    int id = L;
    for (int i = 0; i < 9; ++i) lay.face[i] = id++;
    lay.a = id++; lay.b = id++;
    lay.t1 = id++; lay.t2 = id++; lay.t3 = id++; lay.t4 = id++;
    lay.ma = id++; lay.m1 = id++; lay.m3 = id++; lay.m4 = id++;
    const auto& v = lay.face; // v[0] = v1 .. v[8] = v9
    int dA = 0, dB = arcs[0], dC = arcs[0] + arcs[1], dD = arcs[0] + arcs[1] + arcs[2];

    std::vector<std::vector<int>> rot(id);
    for (int i = 0; i < L; ++i) {
        rot[i].push_back((i + 1) % L);
        if (i == dA) rot[i].push_back(lay.ma);
        if (i == dB) rot[i].push_back(lay.m1);
        if (i == dC) rot[i].push_back(lay.m3);
        if (i == dD) rot[i].push_back(lay.m4);
        rot[i].push_back((i - 1 + L) % L);
    }
    // 9-gon vertices: [prev, satellites.., next]; the 9-face is the corner
    // between next and prev.
    rot[v[0]] = {v[8], lay.b, v[1]};
    rot[v[1]] = {v[0], lay.a, v[2]};
    rot[v[2]] = {v[1], lay.t1, v[3]};
    rot[v[3]] = {v[2], lay.t1, v[4]};
    rot[v[4]] = {v[3], lay.t2, v[5]};
    rot[v[5]] = {v[4], lay.t2, lay.t3, v[6]};
    rot[v[6]] = {v[5], lay.t3, v[7]};
    rot[v[7]] = {v[6], lay.t4, v[8]};
    rot[v[8]] = {v[7], lay.t4, v[0]};
    rot[lay.a] = {v[1], lay.b, lay.ma};
    rot[lay.b] = {v[0], lay.a};
    rot[lay.t1] = {v[3], v[2], lay.m1};
    rot[lay.t2] = {v[5], v[4]};
    rot[lay.t3] = {v[6], v[5], lay.m3};
    rot[lay.t4] = {v[8], v[7], lay.m4};
    rot[lay.ma] = {lay.a, dA};
    rot[lay.m1] = {lay.t1, dB};
    rot[lay.m3] = {lay.t3, dC};
    rot[lay.m4] = {lay.t4, dD};

    if (layout) *layout = lay;
    return finish_document(std::move(rot), L);
}

std::map<Edge, CorrAssignment::Matching>
random_matchings(const SimpleGraph& g, int k, std::uint64_t& rng_state,
                 const std::vector<int>& straight_at) {
    static const std::vector<CorrAssignment::Matching> menu3 = all_matchings(3);
    std::vector<CorrAssignment::Matching> menu = k == 3 ? menu3 : all_matchings(k);
    std::vector<char> pinned(g.vertex_count(), 0);
    for (int v : straight_at) pinned[v] = 1;
    CorrAssignment::Matching ident;
    for (int c = 1; c <= k; ++c) ident.emplace_back(c, c);
    std::map<Edge, CorrAssignment::Matching> ms;
    for (const Edge& e : g.edges()) {
        if (pinned[e.first] || pinned[e.second])
            ms[e] = ident;
        else
            ms[e] = menu[rand_below(rng_state, menu.size())];
    }
    return ms;
}

std::vector<GraphDocument> generate_corpus(std::uint64_t seed, int count, Profile profile) {
    std::vector<GraphDocument> out;
    std::uint64_t rng = seed ^ 0xd1b54a32d192ed03ull;
    const bool boundary = profile == Profile::boundary_heavy;
    while (static_cast<int>(out.size()) < count) {
        if (profile == Profile::tetrad_gadget || profile == Profile::special9_gadget) {
            int L = 9 + static_cast<int>(rand_below(rng, 4));
            GraphDocument doc;
            std::vector<int> straight;
            if (profile == Profile::tetrad_gadget) {
                TetradGadget lay;
                doc = make_tetrad_gadget(L, split_arcs(rng, L, {3, 2, 3, 1}), &lay);
                straight = {lay.v1, lay.v2, lay.v3, lay.v4};
            } else {
                Special9Gadget lay;
                doc = make_special9_gadget(L, split_arcs(rng, L, {2, 1, 2, 1}), &lay);
                straight = {lay.face[1], lay.face[2], lay.face[3]};
            }
            PlaneGraph g = doc.to_plane_graph();
            doc.matchings = random_matchings(g.skeleton(), 3, rng, straight);
            if (!check_hypothesis(g).ok)
                throw input_error("internal: gadget violates the hypothesis");
            if (profile == Profile::tetrad_gadget && find_tetrads(g).empty())
                throw input_error("internal: tetrad gadget has no tetrad");
            if (profile == Profile::special9_gadget) {
                Classification cl = classify_3_vertices(g);
                if (find_special_9_faces(g, cl).empty())
                    throw input_error("internal: special-9 gadget has no special 9-face");
            }
            out.push_back(std::move(doc));
            continue;
        }
        // sparse-girth / boundary-heavy: outer cycle plus girth-preserving ears
        int L = 9 + static_cast<int>(rand_below(rng, 4));
        std::vector<std::vector<int>> rot = cycle_rotation(L);
        int ears = (boundary ? 2 : 1) + static_cast<int>(rand_below(rng, 3));
        bool built = true;
        for (int e = 0; e < ears; ++e) {
            std::vector<int> outer_cycle(L);
            std::iota(outer_cycle.begin(), outer_cycle.end(), 0);
            PlaneGraph g(rot);
            g.designate_outer(outer_cycle);
            EarPlan plan;
            if (!plan_ear(g, g.outer_face(), rng, boundary, L, plan)) { built = false; break; }
            insert_ear(rot, g.face(plan.face), plan.i, plan.j, plan.p);
            if (static_cast<int>(rot.size()) > 48) break;
        }
        if (!built) continue;
        GraphDocument doc = finish_document(std::move(rot), L);
        PlaneGraph g = doc.to_plane_graph();
        if (!check_hypothesis(g).ok) continue;
        if (boundary) {
            bool contact = false;
            for (int v : g.outer_vertices())
                if (g.degree(v) >= 3) contact = true;
            if (!contact) continue;
        }
        out.push_back(std::move(doc));
    }
    return out;
}

} // namespace dpc
