#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dpc/document.hpp"

namespace dpc {

enum class Profile { sparse_girth, tetrad_gadget, special9_gadget, boundary_heavy };

Profile profile_from_string(const std::string& name);
std::string profile_name(Profile p);

// Vertex ids inside a tetrad-gadget document: outer cycle 0..L-1, then the
// tetrad path, its triangle apexes, outer neighbors, and spoke midpoints.
struct TetradGadget {
    int L = 0;
    int v1, v2, v3, v4; // the tetrad path
    int x, y;           // apexes of the v1v2 / v3v4 triangles
    int v1p, v4p;       // outer neighbors of v1 / v4
    int q1, p1, p2, q2; // spoke midpoints (v1', x, y, v4')
};

// Plane graph with an internal tetrad avoiding S: outer cycle of length L,
// the four arc lengths between the spoke anchors must sum to L with
// arcs >= {3,2,3,1}. All faces other than the two triangles are 9+.
GraphDocument make_tetrad_gadget(int L, const std::array<int, 4>& arcs,
                                 TetradGadget* layout = nullptr);

struct Special9Gadget {
    int L = 0;
    std::array<int, 9> face{}; // v1..v9 of the special 9-face
    int a, b;                  // 4-face [v1 v2 a b], a = v2'
    int t1, t2, t3, t4;        // triangle apexes
    int ma, m1, m3, m4;        // spoke midpoints (a, t1, t3, t4)
};

// Plane graph with an internal special 9-face (v1, v2 light via the 4-face,
// the six pattern vertices bad via triangles). arcs >= {2,1,2,1}, sum L.
GraphDocument make_special9_gadget(int L, const std::array<int, 4>& arcs,
                                   Special9Gadget* layout = nullptr);

// Deterministic per (seed, count, profile); every instance re-parses and
// satisfies the profile predicate (tetrad/special-9 present, hypothesis
// holds, boundary contact for boundary-heavy).
std::vector<GraphDocument> generate_corpus(std::uint64_t seed, int count, Profile profile);

// Random matchings (identity on edges incident with `straight_at`) for
// gadget instances; deterministic per rng state.
std::map<Edge, CorrAssignment::Matching>
random_matchings(const SimpleGraph& g, int k, std::uint64_t& rng_state,
                 const std::vector<int>& straight_at);

} // namespace dpc
