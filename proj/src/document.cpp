#include "dpc/document.hpp"

#include <set>

#include <nlohmann/json.hpp>

namespace dpc {

using nlohmann::json;

namespace {

int to_int(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw input_error(what + " must be an integer");
    return j.get<int>();
}

Edge parse_edge_key(const std::string& key, int n) {
    auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= key.size())
        throw input_error("matching key '" + key + "' is not of the form u-v");
    int u, v;
    try {
        u = std::stoi(key.substr(0, dash));
        v = std::stoi(key.substr(dash + 1));
    } catch (const std::exception&) {
        throw input_error("matching key '" + key + "' is not of the form u-v");
    }
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw input_error("matching key '" + key + "' names an unknown vertex");
    if (u >= v)
        throw input_error("matching key '" + key + "' is not canonical (min endpoint first)");
    return {u, v};
}

} // namespace

GraphDocument parse_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw input_error("document must be a JSON object");
    static const std::set<std::string> known{"format_version", "k", "rotation",
                                             "outer_face", "matchings", "precolored"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw input_error("unknown field '" + it.key() + "'");
    for (const char* req : {"format_version", "k", "rotation", "outer_face"})
        if (!j.contains(req)) throw input_error(std::string("missing field '") + req + "'");

    GraphDocument doc;
    doc.format_version = to_int(j["format_version"], "format_version");
    if (doc.format_version != 1)
        throw input_error("unsupported format_version " + std::to_string(doc.format_version));
    doc.k = to_int(j["k"], "k");
    if (doc.k < 1) throw input_error("k must be at least 1");

    if (!j["rotation"].is_array()) throw input_error("rotation must be an array");
    const int n = static_cast<int>(j["rotation"].size());
    for (const json& row : j["rotation"]) {
        if (!row.is_array()) throw input_error("rotation rows must be arrays");
        std::vector<int> r;
        for (const json& x : row) r.push_back(to_int(x, "rotation entry"));
        doc.rotation.push_back(std::move(r));
    }
    if (!j["outer_face"].is_array()) throw input_error("outer_face must be an array");
    for (const json& x : j["outer_face"])
        doc.outer_face.push_back(to_int(x, "outer_face entry"));

    if (j.contains("matchings")) {
        if (!j["matchings"].is_object()) throw input_error("matchings must be an object");
        std::map<Edge, CorrAssignment::Matching> ms;
        for (auto it = j["matchings"].begin(); it != j["matchings"].end(); ++it) {
            Edge e = parse_edge_key(it.key(), n);
            if (!it.value().is_array())
                throw input_error("matching for edge " + it.key() + " must be an array");
            CorrAssignment::Matching m;
            for (const json& pr : it.value()) {
                if (!pr.is_array() || pr.size() != 2)
                    throw input_error("matching pairs for edge " + it.key() +
                                      " must be [c_u, c_v]");
                int cu = to_int(pr[0], "matching color");
                int cv = to_int(pr[1], "matching color");
                if (cu < 1 || cu > doc.k || cv < 1 || cv > doc.k)
                    throw input_error("color out of [k] in matching of edge " + it.key());
                m.emplace_back(cu, cv);
            }
            ms[e] = std::move(m);
        }
        doc.matchings = std::move(ms);
    }
    if (j.contains("precolored")) {
        if (!j["precolored"].is_object()) throw input_error("precolored must be an object");
        for (auto it = j["precolored"].begin(); it != j["precolored"].end(); ++it) {
            int v;
            try {
                v = std::stoi(it.key());
            } catch (const std::exception&) {
                throw input_error("precolored key '" + it.key() + "' is not a vertex id");
            }
            if (v < 0 || v >= n)
                throw input_error("precolored vertex " + it.key() + " out of range");
            int c = to_int(it.value(), "precolored color");
            if (c < 1 || c > doc.k)
                throw input_error("precolored color out of [k] at vertex " + it.key());
            doc.precolored[v] = c;
        }
    }

    // Structural validation: the rotation must build a plane graph, the
    // outer face must exist, matchings must sit on edges.
    PlaneGraph g = doc.to_plane_graph();
    doc.to_assignment(g.skeleton());
    return doc;
}

PlaneGraph GraphDocument::to_plane_graph() const {
    PlaneGraph g{rotation};
    g.designate_outer(outer_face);
    return g;
}

CorrAssignment GraphDocument::to_assignment(const SimpleGraph& g) const {
    if (!matchings) return identity_assignment(g, k);
    return CorrAssignment(g, k, *matchings);
}

ColoringMap GraphDocument::to_precoloring() const {
    ColoringMap phi(static_cast<int>(rotation.size()));
    for (auto [v, c] : precolored) phi.set(v, c);
    return phi;
}

std::string emit_graph(const GraphDocument& doc) {
    json j;
    j["format_version"] = doc.format_version;
    j["k"] = doc.k;
    j["rotation"] = doc.rotation;
    j["outer_face"] = doc.outer_face;
    if (doc.matchings) {
        json ms = json::object();
        for (const auto& [e, m] : *doc.matchings) {
            json pairs = json::array();
            for (auto [cu, cv] : m) pairs.push_back(json::array({cu, cv}));
            ms[std::to_string(e.first) + "-" + std::to_string(e.second)] = pairs;
        }
        j["matchings"] = ms;
    }
    if (!doc.precolored.empty()) {
        json pc = json::object();
        for (auto [v, c] : doc.precolored) pc[std::to_string(v)] = c;
        j["precolored"] = pc;
    }
    return j.dump(2) + "\n";
}

std::string document_digest(const GraphDocument& doc) {
    std::string bytes = emit_graph(doc);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace dpc
