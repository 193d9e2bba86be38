#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dpc/graph.hpp"

namespace dpc {

// A partial or total assignment phi: V -> [k]. Colors are 1-based; 0 means
// uncolored.
struct ColoringMap {
    ColoringMap() = default;
    explicit ColoringMap(int n) : color(n, 0) {}

    std::vector<int> color;

    int size() const { return static_cast<int>(color.size()); }
    bool has(int v) const { return color[v] != 0; }
    int at(int v) const { return color[v]; }
    void set(int v, int c) { color[v] = c; }
    void clear(int v) { color[v] = 0; }
    bool total() const;
    std::vector<int> domain() const; // colored vertices, sorted
};

// k-correspondence assignment: per unordered edge uv a matching between
// {u} x [k] and {v} x [k]. Matchings are stored once, on the canonical
// (min,max) orientation; the transpose view is computed on lookup.
// Values are immutable after construction.
class CorrAssignment {
  public:
    using Matching = std::vector<std::pair<int, int>>; // (c_u, c_v), u < v

    CorrAssignment(const SimpleGraph& g, int k, std::map<Edge, Matching> matchings);

    int k() const { return k_; }
    bool has_edge(int u, int v) const { return matchings_.count(make_edge(u, v)) > 0; }

    // Pairs oriented from `u`'s side: (c_u, c_other), sorted.
    Matching matching_from(int u, int v) const;
    // Canonical stored pairs for edge (min,max).
    const Matching& matching(const Edge& e) const;
    const std::map<Edge, Matching>& all() const { return matchings_; }

    // Color at v matched with `color_at_u` over edge uv, if any.
    std::optional<int> partner(int u, int v, int color_at_u) const;

    int matching_size(const Edge& e) const { return static_cast<int>(matching(e).size()); }

  private:
    int k_ = 0;
    std::map<Edge, Matching> matchings_;
};

// Every edge carries the identity perfect matching (straight and full):
// C-coloring coincides with proper coloring.
CorrAssignment identity_assignment(const SimpleGraph& g, int k);

// |matching(e)| = k.
bool is_full(const CorrAssignment& c, const Edge& e);
// Every matched pair has equal colors.
bool is_straight(const CorrAssignment& c, const Edge& e);

struct CheckResult {
    bool ok = true;
    std::optional<Edge> violation;
    std::optional<std::pair<int, int>> violating_pair; // (phi(u), phi(v))
};

// True iff no edge's matching contains (phi(u), phi(v)); phi must be total.
CheckResult check_coloring(const SimpleGraph& g, const CorrAssignment& c,
                           const ColoringMap& phi);

struct WalkWitness {
    std::vector<int> walk;  // v_1 .. v_m with v_m = v_1
    std::vector<int> chain; // c_1 .. c_m, consecutive pairs matched, c_1 != c_m
};

// Witness that the assignment is inconsistent on the given closed walk, if
// one exists. Chains propagate deterministically through the matchings; a
// chain that loses its partner dies and cannot witness.
std::optional<WalkWitness> walk_inconsistency(const SimpleGraph& g, const CorrAssignment& c,
                                              const std::vector<int>& walk);

struct TriangleConsistency {
    bool consistent = true;
    std::optional<WalkWitness> witness;
};

// Checks every closed 3-walk (each triangle from every rotation and both
// directions).
TriangleConsistency consistent_on_triangles(const SimpleGraph& g, const CorrAssignment& c);

// Consistency on every closed walk; decided over all cycle traversals
// (every base vertex, one direction) which is equivalent for matchings.
// Requires vertex_count <= 12 (cycle enumeration cap).
bool consistent_on_all_walks(const SimpleGraph& g, const CorrAssignment& c);

struct StraightenResult {
    CorrAssignment assignment;
    // renaming[v][old-1] = new color at v; identity outside H.
    std::vector<std::vector<int>> renaming;
};

// Renames colors per vertex so that every edge of `h` becomes straight.
// Preconditions (checked): every h-edge is full and every cycle of h is
// consistent; violations raise precondition_error with a witness.
StraightenResult straighten(const SimpleGraph& g, const CorrAssignment& c,
                            const std::vector<Edge>& h);

struct FromListsResult {
    CorrAssignment assignment;
    // decode[v][i-1] = the actual color behind index i at v.
    std::vector<std::vector<int>> decode;
};

// Embeds a list assignment: indexes each vertex's list (sorted, truncated to
// exactly k) by [k] and matches indices whose underlying colors are equal.
FromListsResult from_lists(const SimpleGraph& g,
                           const std::vector<std::vector<int>>& lists, int k);

// Carries an assignment through a vertex mapping (subgraph removal or
// identification): old edges whose endpoints stay distinct keep their
// matching. Two old edges landing on one new edge must agree.
CorrAssignment transfer_assignment(const CorrAssignment& c, const SimpleGraph& new_graph,
                                   const std::vector<int>& old_to_new);

} // namespace dpc
