#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dpc/errors.hpp"

namespace dpc {

using Edge = std::pair<int, int>; // canonical: first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Plain adjacency structure. Vertices are 0..n-1, the graph is simple.
// Carries no embedding; this is what the solver and the reduction
// transforms (vertex identification) operate on.
struct SimpleGraph {
    SimpleGraph() = default;
    explicit SimpleGraph(std::vector<std::vector<int>> adjacency);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return sets_[u].count(v) > 0; }
    bool connected() const;

    // All edges as canonical pairs, sorted.
    std::vector<Edge> edges() const;

  private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::set<int>> sets_;
    int edge_count_ = 0;
};

struct FaceRecord {
    int id = -1;
    // Boundary walk as a cyclic dart sequence; boundary[i] -> boundary[i+1]
    // is a dart, and the walk closes (last -> first).
    std::vector<int> boundary;
    int length = 0;              // number of darts, d(f)
    std::vector<int> vertex_set; // b(f), sorted distinct vertices
    bool is_outer = false;
};

// A cycle given by its vertex sequence (distinct, consecutive adjacent,
// last adjacent to first).
struct CycleRef {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

// Combinatorial plane graph: per-vertex clockwise rotation of neighbors.
// Faces are derived from the rotation system at construction; the value is
// immutable afterwards. Construction rejects loops, repeated neighbors,
// asymmetric rotations, disconnected graphs and rotations that do not embed
// in the plane (Euler check V - E + F = 2).
class PlaneGraph {
  public:
    explicit PlaneGraph(std::vector<std::vector<int>> rotation);

    int vertex_count() const { return skeleton_.vertex_count(); }
    int edge_count() const { return skeleton_.edge_count(); }
    int degree(int v) const { return skeleton_.degree(v); }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const SimpleGraph& skeleton() const { return skeleton_; }
    bool adjacent(int u, int v) const { return skeleton_.adjacent(u, v); }
    std::vector<Edge> edges() const { return skeleton_.edges(); }

    const std::vector<FaceRecord>& faces() const { return faces_; }
    const FaceRecord& face(int id) const { return faces_[id]; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    // Face lying on the given dart u->v.
    int face_of_dart(int u, int v) const;

    // Distinct faces incident with v (all corners around v).
    std::vector<int> faces_at(int v) const;

    // Designates the outer face D by its boundary cycle (matched up to
    // rotation and reflection). Throws input_error if no face matches.
    void designate_outer(const std::vector<int>& cycle);
    bool has_outer() const { return outer_face_ >= 0; }
    int outer_face() const;
    // Vertices on the outer face, sorted.
    const std::vector<int>& outer_vertices() const;
    bool on_outer(int v) const;

  private:
    void trace_faces();
    int rotation_index(int v, int neighbor) const;

    std::vector<std::vector<int>> rotation_;
    SimpleGraph skeleton_;
    std::vector<FaceRecord> faces_;
    // dart_face_[v][i] = face on dart v -> rotation_[v][i]
    std::vector<std::vector<int>> dart_face_;
    std::vector<std::vector<int>> rotation_pos_; // neighbor -> index lookup
    int outer_face_ = -1;
    std::vector<int> outer_vertices_;
};

// All cycles of length <= max_len (3 <= max_len <= 12), each reported once
// up to rotation and reflection, sorted by (length, vertex sequence).
std::vector<CycleRef> cycles_up_to(const SimpleGraph& g, int max_len);
std::vector<CycleRef> cycles_up_to(const PlaneGraph& g, int max_len);

enum class AdjacencyConvention { edge_sharing, vertex_sharing };

// Unordered pairs of distinct cycles, both of length <= max_len, sharing at
// least one edge (or vertex, under the experimental convention).
std::vector<std::pair<CycleRef, CycleRef>>
adjacent_short_cycle_pairs(const SimpleGraph& g, int max_len,
                           AdjacencyConvention convention = AdjacencyConvention::edge_sharing);
std::vector<std::pair<CycleRef, CycleRef>>
adjacent_short_cycle_pairs(const PlaneGraph& g, int max_len,
                           AdjacencyConvention convention = AdjacencyConvention::edge_sharing);

struct SeparationResult {
    bool separating = false;
    std::vector<int> inside;  // int(K), sorted
    std::vector<int> outside; // ext(K), sorted
};

// int(K)/ext(K) relative to the embedding and the designated outer face.
// K is separating iff both sides are nonempty.
SeparationResult is_separating(const PlaneGraph& g, const CycleRef& k);

// Edges of g joining non-consecutive vertices of the cycle.
std::vector<Edge> chords_of(const PlaneGraph& g, const CycleRef& k);
std::vector<Edge> chords_of(const SimpleGraph& g, const CycleRef& k);

struct IdentifyResult {
    SimpleGraph merged;
    std::vector<int> old_to_new;     // -1 only never; u and v map to the same id
    int merged_vertex = -1;          // new id of the identified vertex
    bool created_short_cycle = false; // a new cycle of length <= 8 appeared
};

// Merges non-adjacent u and v into one vertex (parallel edges collapsed) and
// reports whether the merge created a cycle of length <= 8, which happens
// exactly when dist(u, v) <= 8 in g.
IdentifyResult identify(const SimpleGraph& g, int u, int v);
IdentifyResult identify(const PlaneGraph& g, int u, int v);

// Induced subgraph on the complement of `removed`; old_to_new maps kept
// vertices to compacted ids (-1 for removed ones).
struct SubgraphResult {
    SimpleGraph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};
SubgraphResult remove_vertices(const SimpleGraph& g, const std::vector<int>& removed);

// Validates that the vertex sequence is a cycle of g (distinct, closed,
// consecutive adjacent); throws input_error otherwise.
void require_cycle(const SimpleGraph& g, const CycleRef& k);

// BFS distance, -1 if unreachable.
int bfs_distance(const SimpleGraph& g, int from, int to);

} // namespace dpc
