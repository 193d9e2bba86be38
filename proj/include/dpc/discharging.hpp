#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dpc/configurations.hpp"
#include "dpc/graph.hpp"

namespace dpc {

// Exact rational charge; no floating point anywhere in this module.
using Charge = boost::multiprecision::cpp_rational;

// "2/3", "-1/6", integers without denominator ("4", "0").
std::string fraction_string(const Charge& q);

struct ElementId {
    enum class Kind { vertex, face };
    Kind kind = Kind::vertex;
    int id = -1;

    static ElementId vertex(int v) { return {Kind::vertex, v}; }
    static ElementId face(int f) { return {Kind::face, f}; }
    bool operator<(const ElementId& o) const {
        if (kind != o.kind) return kind < o.kind;
        return id < o.id;
    }
    bool operator==(const ElementId& o) const { return kind == o.kind && id == o.id; }
    std::string name() const {
        return (kind == Kind::vertex ? "v" : "f") + std::to_string(id);
    }
};

struct Transfer {
    std::string rule; // "R1" .. "R7"
    ElementId from, to;
    Charge amount;
};

struct ChargeLedger {
    std::map<ElementId, Charge> initial;
    std::vector<Transfer> transfers; // canonically sorted
    int outer_face = -1;

    Charge initial_total() const;
    std::map<ElementId, Charge> final_charges() const;
    Charge final_of(const ElementId& e) const;
};

// mu(v) = d(v) - 4, mu(f) = d(f) - 4 for internal faces, mu(D) = d(D) + 4.
// The total is exactly 0 on connected plane graphs.
ChargeLedger initial_charges(const PlaneGraph& g);

// Applies R1-R4, R6, R7 simultaneously from the initial state, then R5
// sweeps each internal face's remaining positive charge to D. Every transfer
// is logged with its rule id.
ChargeLedger apply_rules(const PlaneGraph& g, const Classification& cl);

struct ChargeVerdict {
    bool pass = false;
    bool d_positive = false;
    Charge d_final;
    std::vector<ElementId> negative; // elements with final charge < 0
    bool conserved = false;          // sum(final) == sum(initial)
    std::vector<std::string> citations; // reducible configurations, when provided
};

// PASS iff every final charge is >= 0 and the outer face ends positive.
// When a ConfigReport is supplied, failures carry its citations.
ChargeVerdict verify_charges(const ChargeLedger& ledger, const PlaneGraph& g,
                             const ConfigReport* report = nullptr);

struct AuditEntry {
    ElementId element;
    Charge initial;
    Charge final;
    // (rule, counterparty, signed amount), sorted by rule then counterparty.
    std::vector<std::tuple<std::string, ElementId, Charge>> moves;
    std::string line; // "v3: -1 +4/3 (R7 from f0) -1/3 (R6 to f2) = 0"
};

// Renders the ledger as per-element accounting lines.
std::vector<AuditEntry> charge_audit(const ChargeLedger& ledger);

} // namespace dpc
