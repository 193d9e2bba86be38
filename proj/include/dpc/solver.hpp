#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dpc/correspondence.hpp"
#include "dpc/graph.hpp"

namespace dpc {

// Finds a total C-coloring extending phi0 (backtracking with
// minimum-remaining-candidates vertex selection and forward pruning through
// the matchings), or nullopt if none exists. Deterministic for fixed input.
// phi0 violating an edge inside its own domain is a precondition_error.
std::optional<ColoringMap> find_dp_coloring(const SimpleGraph& g, const CorrAssignment& c,
                                            const ColoringMap& phi0);

struct ChoosabilityResult {
    bool choosable = true;
    // Witness list assignment with no L-coloring, when not choosable.
    std::vector<std::vector<int>> witness_lists;
    long long assignments_checked = 0;
};

// Exhaustive k-choosability over all list assignments with |L(v)| = k from a
// universe of size k*|V|, modulo color renaming (lists are enumerated in
// canonical fresh-color order). Refuses |V| > budget_vertices.
ChoosabilityResult is_choosable(const SimpleGraph& g, int k, int budget_vertices = 8);

struct ForAllConsistentResult {
    bool colorable_for_all = true;
    std::optional<CorrAssignment> witness; // consistent but uncolorable
    bool exhaustive = false;
    long long assignments_enumerated = 0;
    long long consistent_count = 0;
    std::uint64_t seed = 0;
};

// Equivalence harness: is g C-colorable for every consistent k-correspondence
// assignment? Exhaustive when |E| <= max_exhaustive_edges and k == 2,
// otherwise samples `samples` random assignments (consistent ones only).
ForAllConsistentResult dp_colorable_for_all_consistent(const SimpleGraph& g, int k,
                                                       int max_exhaustive_edges = 6,
                                                       long long samples = 200,
                                                       std::uint64_t seed = 1);

// All matchings between [k] and [k] (partial injections), canonical order.
std::vector<CorrAssignment::Matching> all_matchings(int k);

// Tetrad reduction extension. `tetrad` is the degree-3 path v1 v2 v3 v4 with
// triangle neighbors x (of v1v2) and y (of v3v4) and outer neighbors v1', v4'.
// Requires k = 3, every edge incident with the tetrad straight and full, and
// phi_reduced a valid coloring of G - {v1..v4} with phi(y) = phi(v1').
// Returns a total coloring verified by check_coloring.
ColoringMap extend_over_tetrad(const SimpleGraph& g, const CorrAssignment& c,
                               const std::vector<int>& tetrad,
                               const ColoringMap& phi_reduced);

// Special-9-face reduction extension. `face` is the boundary v1..v9 aligned so that
// v1, v2 are the light vertices; v2' is v2's neighbor off the face and v34
// the common neighbor of v3 and v4. Requires k = 3, edges at v2, v3, v4
// straight and full, and phi_reduced a valid coloring of G - {v1..v4} with
// phi(v2') = phi(v5).
ColoringMap extend_over_special_9_face(const SimpleGraph& g, const CorrAssignment& c,
                                       const std::vector<int>& face,
                                       const ColoringMap& phi_reduced);

} // namespace dpc
