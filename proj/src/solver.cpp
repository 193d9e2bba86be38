#include "dpc/solver.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace dpc {

namespace {

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

struct Searcher {
    const SimpleGraph& g;
    const CorrAssignment& c;
    std::vector<std::uint32_t> domain;
    std::vector<int> color;
    int uncolored;

    Searcher(const SimpleGraph& g_, const CorrAssignment& c_) : g(g_), c(c_) {
        const int n = g.vertex_count();
        domain.assign(n, (c.k() >= 32 ? ~0u : ((1u << c.k()) - 1)));
        color.assign(n, 0);
        uncolored = n;
    }

    // Removes the partners of (v, col) from uncolored neighbors' domains;
    // records undo entries. Returns false when a domain empties.
    bool assign(int v, int col, std::vector<std::pair<int, std::uint32_t>>& undo) {
        color[v] = col;
        --uncolored;
        for (int w : g.neighbors(v)) {
            if (color[w] != 0) continue;
            auto p = c.partner(v, w, col);
            if (!p) continue;
            std::uint32_t bit = 1u << (*p - 1);
            if (domain[w] & bit) {
                undo.emplace_back(w, bit);
                domain[w] &= ~bit;
                if (domain[w] == 0 && color[w] == 0) return false;
            }
        }
        return true;
    }

    void unassign(int v, const std::vector<std::pair<int, std::uint32_t>>& undo) {
        color[v] = 0;
        ++uncolored;
        for (auto [w, bit] : undo) domain[w] |= bit;
    }

    bool search() {
        if (uncolored == 0) return true;
        int best = -1, best_count = 1 << 30;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] != 0) continue;
            int cnt = popcount(domain[v]);
            if (cnt < best_count) {
                best_count = cnt;
                best = v;
                if (cnt == 0) return false;
            }
        }
        for (int col = 1; col <= c.k(); ++col) {
            if (!(domain[best] & (1u << (col - 1)))) continue;
            std::vector<std::pair<int, std::uint32_t>> undo;
            if (assign(best, col, undo)) {
                if (search()) return true;
            }
            unassign(best, undo);
        }
        return false;
    }
};

} // namespace

std::optional<ColoringMap> find_dp_coloring(const SimpleGraph& g, const CorrAssignment& c,
                                            const ColoringMap& phi0) {
    const int n = g.vertex_count();
    if (c.k() > 30) throw input_error("solver supports k up to 30");
    if (phi0.size() != 0 && phi0.size() != n)
        throw input_error("phi0 has wrong vertex count");
    // Validate phi0 on its own domain.
    if (phi0.size() == n) {
        for (const Edge& e : g.edges()) {
            if (!phi0.has(e.first) || !phi0.has(e.second)) continue;
            auto p = c.partner(e.first, e.second, phi0.at(e.first));
            if (p && *p == phi0.at(e.second))
                throw precondition_error(
                    "phi0 already violates edge " + std::to_string(e.first) + "-" +
                    std::to_string(e.second));
        }
    }
    Searcher s(g, c);
    for (int v = 0; v < n; ++v) {
        if (phi0.size() != n || !phi0.has(v)) continue;
        int col = phi0.at(v);
        if (col < 1 || col > c.k())
            throw input_error("phi0 color out of [k] at vertex " + std::to_string(v));
        std::vector<std::pair<int, std::uint32_t>> undo;
        if (!s.assign(v, col, undo)) return std::nullopt;
    }
    if (!s.search()) return std::nullopt;
    ColoringMap phi(n);
    for (int v = 0; v < n; ++v) phi.set(v, s.color[v]);
    auto check = check_coloring(g, c, phi);
    if (!check.ok) throw precondition_error("internal error: solver produced invalid coloring");
    return phi;
}

namespace {

// Enumerate canonical k-subsets for one vertex: a subset of already-used
// colors plus a block of fresh ones.
void enumerate_lists(const SimpleGraph& g, int k, int v, int used,
                     std::vector<std::vector<int>>& lists, ChoosabilityResult& res) {
    if (!res.choosable) return;
    const int n = g.vertex_count();
    if (v == n) {
        ++res.assignments_checked;
        FromListsResult fl = from_lists(g, lists, k);
        if (!find_dp_coloring(g, fl.assignment, ColoringMap(n))) {
            res.choosable = false;
            res.witness_lists = lists;
        }
        return;
    }
    // choose f fresh colors and a (k-f)-subset of [used]
    for (int fresh = k; fresh >= 0; --fresh) {
        int from_old = k - fresh;
        if (from_old > used) continue;
        std::vector<int> pick(from_old);
        // enumerate subsets of {1..used} of size from_old
        auto rec = [&](auto&& rec, int start, int depth) -> void {
            if (!res.choosable) return;
            if (depth == from_old) {
                std::vector<int> list = pick;
                for (int f = 1; f <= fresh; ++f) list.push_back(used + f);
                lists.push_back(list);
                enumerate_lists(g, k, v + 1, used + fresh, lists, res);
                lists.pop_back();
                return;
            }
            for (int col = start; col <= used; ++col) {
                pick[depth] = col;
                rec(rec, col + 1, depth + 1);
            }
        };
        rec(rec, 1, 0);
    }
}

} // namespace

ChoosabilityResult is_choosable(const SimpleGraph& g, int k, int budget_vertices) {
    if (g.vertex_count() > budget_vertices)
        throw budget_error("is_choosable budget exceeded: " +
                           std::to_string(g.vertex_count()) + " vertices > " +
                           std::to_string(budget_vertices));
    ChoosabilityResult res;
    std::vector<std::vector<int>> lists;
    enumerate_lists(g, k, 0, 0, lists, res);
    return res;
}

std::vector<CorrAssignment::Matching> all_matchings(int k) {
    // Partial injections [k] -> [k]: choose the defined left set via bitmask,
    // then injective images.
    std::vector<CorrAssignment::Matching> out;
    std::vector<int> left;
    for (int mask = 0; mask < (1 << k); ++mask) {
        left.clear();
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) left.push_back(i + 1);
        const int m = static_cast<int>(left.size());
        std::vector<int> image(m);
        std::vector<char> taken(k + 1, 0);
        auto rec = [&](auto&& rec, int depth) -> void {
            if (depth == m) {
                CorrAssignment::Matching mt;
                for (int i = 0; i < m; ++i) mt.emplace_back(left[i], image[i]);
                std::sort(mt.begin(), mt.end());
                out.push_back(std::move(mt));
                return;
            }
            for (int c = 1; c <= k; ++c) {
                if (taken[c]) continue;
                taken[c] = 1;
                image[depth] = c;
                rec(rec, depth + 1);
                taken[c] = 0;
            }
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ForAllConsistentResult dp_colorable_for_all_consistent(const SimpleGraph& g, int k,
                                                       int max_exhaustive_edges,
                                                       long long samples,
                                                       std::uint64_t seed) {
    ForAllConsistentResult res;
    res.seed = seed;
    const std::vector<Edge> edges = g.edges();
    const int ne = static_cast<int>(edges.size());
    const std::vector<CorrAssignment::Matching> menu = all_matchings(k);
    const ColoringMap empty(g.vertex_count());

    auto test_assignment = [&](const CorrAssignment& c) -> bool {
        // returns false when a consistent, uncolorable assignment is found
        if (!consistent_on_all_walks(g, c)) return true;
        ++res.consistent_count;
        if (!find_dp_coloring(g, c, empty)) {
            res.colorable_for_all = false;
            res.witness = c;
            return false;
        }
        return true;
    };

    if (k == 2 && ne <= max_exhaustive_edges) {
        res.exhaustive = true;
        std::vector<size_t> pick(ne, 0);
        auto rec = [&](auto&& rec, int depth) -> bool {
            if (depth == ne) {
                ++res.assignments_enumerated;
                std::map<Edge, CorrAssignment::Matching> ms;
                for (int i = 0; i < ne; ++i) ms[edges[i]] = menu[pick[i]];
                return test_assignment(CorrAssignment(g, k, std::move(ms)));
            }
            for (pick[depth] = 0; pick[depth] < menu.size(); ++pick[depth])
                if (!rec(rec, depth + 1)) return false;
            return true;
        };
        rec(rec, 0);
        return res;
    }

    std::mt19937_64 rng(seed);
    for (long long i = 0; i < samples; ++i) {
        ++res.assignments_enumerated;
        std::map<Edge, CorrAssignment::Matching> ms;
        for (const Edge& e : edges) ms[e] = menu[rng() % menu.size()];
        if (!test_assignment(CorrAssignment(g, k, std::move(ms)))) break;
    }
    return res;
}

namespace {

int third_neighbor(const SimpleGraph& g, int v, int a, int b) {
    if (g.degree(v) != 3)
        throw precondition_error("vertex " + std::to_string(v) + " must have degree 3");
    for (int w : g.neighbors(v))
        if (w != a && w != b) return w;
    throw precondition_error("vertex " + std::to_string(v) + " lacks a third neighbor");
}

int common_neighbor(const SimpleGraph& g, int u, int v, const std::set<int>& exclude) {
    for (int w : g.neighbors(u))
        if (w != v && g.adjacent(w, v) && !exclude.count(w)) return w;
    throw precondition_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " is not on a triangle");
}

void require_straight_full_at(const SimpleGraph& g, const CorrAssignment& c,
                              const std::vector<int>& vs) {
    for (int v : vs)
        for (int w : g.neighbors(v)) {
            Edge e = make_edge(v, w);
            if (!is_full(c, e))
                throw precondition_error("edge " + std::to_string(e.first) + "-" +
                                         std::to_string(e.second) + " is not full");
            if (!is_straight(c, e))
                throw precondition_error("edge " + std::to_string(e.first) + "-" +
                                         std::to_string(e.second) + " is not straight");
        }
}

void require_reduced_coloring(const SimpleGraph& g, const CorrAssignment& c,
                              const ColoringMap& phi, const std::set<int>& removed) {
    if (phi.size() != g.vertex_count())
        throw precondition_error("phi_reduced has wrong vertex count");
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool rm = removed.count(v) > 0;
        if (rm && phi.has(v))
            throw precondition_error("phi_reduced colors removed vertex " + std::to_string(v));
        if (!rm && !phi.has(v))
            throw precondition_error("phi_reduced misses vertex " + std::to_string(v));
    }
    for (const Edge& e : g.edges()) {
        if (!phi.has(e.first) || !phi.has(e.second)) continue;
        auto p = c.partner(e.first, e.second, phi.at(e.first));
        if (p && *p == phi.at(e.second))
            throw precondition_error("phi_reduced violates edge " + std::to_string(e.first) +
                                     "-" + std::to_string(e.second));
    }
}

// Smallest color in [k] whose matched partner differs from every colored
// neighbor of v.
int greedy_color(const SimpleGraph& g, const CorrAssignment& c, const ColoringMap& phi,
                 int v) {
    for (int col = 1; col <= c.k(); ++col) {
        bool ok = true;
        for (int w : g.neighbors(v)) {
            if (!phi.has(w)) continue;
            auto p = c.partner(v, w, col);
            if (p && *p == phi.at(w)) { ok = false; break; }
        }
        if (ok) return col;
    }
    throw precondition_error("no free color at vertex " + std::to_string(v));
}

int other_color(int a, int b) {
    // the color in {1,2,3} distinct from a and b (a != b)
    return 6 - a - b;
}

} // namespace

ColoringMap extend_over_tetrad(const SimpleGraph& g, const CorrAssignment& c,
                               const std::vector<int>& tetrad,
                               const ColoringMap& phi_reduced) {
    if (c.k() != 3) throw precondition_error("tetrad extension requires k = 3");
    if (tetrad.size() != 4) throw precondition_error("tetrad must have four vertices");
    int v1 = tetrad[0], v2 = tetrad[1], v3 = tetrad[2], v4 = tetrad[3];
    for (int i = 0; i < 3; ++i)
        if (!g.adjacent(tetrad[i], tetrad[i + 1]))
            throw precondition_error("tetrad is not a path");
    std::set<int> tset(tetrad.begin(), tetrad.end());
    if (tset.size() != 4) throw precondition_error("tetrad vertices must be distinct");
    int x = common_neighbor(g, v1, v2, tset);
    int y = common_neighbor(g, v3, v4, tset);
    int v1p = third_neighbor(g, v1, v2, x);
    [[maybe_unused]] int v4p = third_neighbor(g, v4, v3, y); // validates deg(v4)
    for (int v : {v2, v3})
        if (g.degree(v) != 3)
            throw precondition_error("tetrad vertex " + std::to_string(v) +
                                     " must have degree 3");
    require_straight_full_at(g, c, tetrad);
    require_reduced_coloring(g, c, phi_reduced, tset);
    if (phi_reduced.at(y) != phi_reduced.at(v1p))
        throw precondition_error("phi_reduced must give y and v1' the same color");

    ColoringMap phi = phi_reduced;
    phi.set(v4, greedy_color(g, c, phi, v4)); // avoids phi(y), phi(v4')
    phi.set(v3, greedy_color(g, c, phi, v3)); // avoids phi(v4), phi(y)

    const int cx = phi.at(x), c1p = phi.at(v1p), c3 = phi.at(v3);
    // c3 != c1p since v3 avoided phi(y) = phi(v1').
    if (cx == c1p) {
        phi.set(v1, c3);
        phi.set(v2, other_color(c3, cx));
    } else if (cx == c3) {
        phi.set(v1, other_color(cx, c1p));
        phi.set(v2, other_color(phi.at(v1), c3));
    } else {
        phi.set(v1, c3);
        phi.set(v2, c1p);
    }

    auto check = check_coloring(g, c, phi);
    if (!check.ok)
        throw precondition_error("tetrad extension failed verification at edge " +
                                 std::to_string(check.violation->first) + "-" +
                                 std::to_string(check.violation->second));
    return phi;
}

ColoringMap extend_over_special_9_face(const SimpleGraph& g, const CorrAssignment& c,
                                       const std::vector<int>& face,
                                       const ColoringMap& phi_reduced) {
    if (c.k() != 3) throw precondition_error("special 9-face extension requires k = 3");
    if (face.size() != 9) throw precondition_error("face must have nine vertices");
    for (int i = 0; i < 9; ++i)
        if (!g.adjacent(face[i], face[(i + 1) % 9]))
            throw precondition_error("face boundary is not a cycle");
    int v1 = face[0], v2 = face[1], v3 = face[2], v4 = face[3], v5 = face[4];
    std::set<int> removed{v1, v2, v3, v4};
    if (removed.size() != 4) throw precondition_error("face vertices must be distinct");
    if (g.degree(v1) != 3)
        throw precondition_error("face vertex v1 must have degree 3");
    int v2p = third_neighbor(g, v2, v1, v3);
    std::set<int> excl(face.begin(), face.end());
    int v34 = common_neighbor(g, v3, v4, excl);
    require_straight_full_at(g, c, {v2, v3, v4});
    require_reduced_coloring(g, c, phi_reduced, removed);
    if (phi_reduced.at(v2p) != phi_reduced.at(v5))
        throw precondition_error("phi_reduced must give v2' and v5 the same color");

    ColoringMap phi = phi_reduced;
    phi.set(v1, greedy_color(g, c, phi, v1)); // avoids phi(v9), phi(v1's third neighbor)
    phi.set(v2, greedy_color(g, c, phi, v2)); // avoids phi(v1), phi(v2') -> phi(v2) != phi(v5)

    const int c34 = phi.at(v34), c2 = phi.at(v2), c5 = phi.at(v5);
    if (c34 == c2) {
        phi.set(v4, other_color(c5, c34));
        phi.set(v3, other_color(c2, phi.at(v4)));
    } else if (c34 == c5) {
        phi.set(v3, other_color(c2, c34));
        phi.set(v4, other_color(phi.at(v3), c5));
    } else {
        phi.set(v4, c2);
        phi.set(v3, c5);
    }

    auto check = check_coloring(g, c, phi);
    if (!check.ok)
        throw precondition_error("special 9-face extension failed verification at edge " +
                                 std::to_string(check.violation->first) + "-" +
                                 std::to_string(check.violation->second));
    return phi;
}

} // namespace dpc
