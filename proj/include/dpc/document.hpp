#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpc/correspondence.hpp"
#include "dpc/graph.hpp"

namespace dpc {

// Self-describing text format for graphs, assignments and precolorings.
// JSON object with keys: format_version, k, rotation, outer_face, and
// optionally matchings ("u-v" -> [[c_u, c_v], ...], canonical keys) and
// precolored (vertex -> color). Unknown keys are rejected, emission is
// canonical (sorted keys, two-space indent, LF).
struct GraphDocument {
    int format_version = 1;
    int k = 3;
    std::vector<std::vector<int>> rotation;
    std::vector<int> outer_face;
    std::optional<std::map<Edge, CorrAssignment::Matching>> matchings;
    std::map<int, int> precolored;

    PlaneGraph to_plane_graph() const; // builds, validates, designates outer
    // Document matchings, or fully straight identity matchings when absent.
    CorrAssignment to_assignment(const SimpleGraph& g) const;
    ColoringMap to_precoloring() const;
};

// Parses and validates a document; input_error carries position or field
// information.
GraphDocument parse_graph(const std::string& text);

// Canonical byte emission; emit(parse(x)) == x for canonical input.
std::string emit_graph(const GraphDocument& doc);

// FNV-1a 64-bit digest of the canonical bytes, as 16 hex characters.
std::string document_digest(const GraphDocument& doc);

} // namespace dpc
