#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpc/graph.hpp"

namespace dpc {

enum class VertexClass { none, bad, light, good };

// Vertex classes of the internal 3-vertices plus the face sets F_k / F_k'
// (internal k-faces disjoint from D / meeting D in exactly one vertex).
struct Classification {
    std::vector<VertexClass> label;
    std::map<int, std::vector<int>> f_sets;       // k -> face ids, b(f) cap D empty
    std::map<int, std::vector<int>> f_prime_sets; // k -> face ids, |b(f) cap D| = 1

    bool in_f(int k, int face) const;
    bool in_f_prime(int k, int face) const;
};

Classification classify_3_vertices(const PlaneGraph& g);

// f is special iff 3 <= d(f) <= 8 and f is in F_{d(f)}'.
bool is_special_face(const PlaneGraph& g, const Classification& cl, int face);

struct HypothesisResult {
    bool ok = true;
    std::vector<std::pair<CycleRef, CycleRef>> pairs;
};

// The hypothesis: no adjacent cycles of length at most 8.
HypothesisResult check_hypothesis(
    const PlaneGraph& g,
    AdjacencyConvention convention = AdjacencyConvention::edge_sharing);

struct Tetrad {
    std::array<int, 4> path{};   // degree-3 path on a face boundary
    int apex12 = -1, apex34 = -1; // triangle witnesses for v1v2 and v3v4
    int face = -1;
    bool avoids_s = false; // reducible when it misses the boundary
};

std::vector<Tetrad> find_tetrads(const PlaneGraph& g);

struct Special9 {
    int face = -1;
    std::array<int, 9> aligned{}; // v1..v9 with v1,v2 light and the six bad
};

std::vector<Special9> find_special_9_faces(const PlaneGraph& g, const Classification& cl);

struct BadRun {
    int face = -1;
    std::vector<int> run; // consecutive bad vertices, in boundary order
    // For runs of exactly 4 with distinct context v0..v5: whether the edges
    // v0v1, v2v3, v4v5 lie on triangles.
    bool has_context = false;
    bool e01_on_triangle = false, e23_on_triangle = false, e45_on_triangle = false;
    bool run_bound_exceeded = false; // run length >= 5 (reducible)
};

std::vector<BadRun> check_bad_runs(const PlaneGraph& g, const Classification& cl);

struct PathViolation {
    std::vector<int> path;        // ends in S, interior outside S
    Edge edge;                    // edge of the path on the offending triangle
    std::array<int, 3> triangle{};
};

struct FourFaceViolation {
    int face = -1;
    std::vector<int> d_vertices; // boundary vertices on D
    bool non_consecutive = false;
};

struct SideConditionReport {
    bool proper_subset = true;     // V(G) != S
    bool two_connected = true;
    std::optional<int> cut_vertex;
    bool min_internal_degree = true; // internal vertices have degree >= 3
    std::vector<int> low_degree_internal;
    bool no_separating_cycle = true; // no separating 3..12-cycle
    std::vector<CycleRef> separating_cycles;
    bool induced_outer = true;     // D is an induced cycle
    std::vector<Edge> chords_of_d;
    bool path_condition = true;    // boundary-path triangle condition
    std::vector<PathViolation> path_violations;
    bool four_face_condition = true; // internal 4-faces meet D properly
    std::vector<FourFaceViolation> four_face_violations;

    bool all_ok() const {
        return proper_subset && two_connected && min_internal_degree && no_separating_cycle &&
               induced_outer && path_condition && four_face_condition;
    }
};

// Structural side conditions with witnesses; S = V(D).
SideConditionReport side_conditions(const PlaneGraph& g);

// Everything the discharging verdict can cite.
struct ConfigReport {
    HypothesisResult hypothesis;
    Classification classification;
    std::vector<Tetrad> tetrads;
    std::vector<Special9> special9;
    std::vector<BadRun> bad_runs;
    SideConditionReport side_conditions;
    bool outer_within_regime = true; // d(D) <= 12

    // Human-readable reducible-configuration / side-condition citations.
    std::vector<std::string> citations() const;
};

ConfigReport build_config_report(
    const PlaneGraph& g,
    AdjacencyConvention convention = AdjacencyConvention::edge_sharing);

} // namespace dpc
