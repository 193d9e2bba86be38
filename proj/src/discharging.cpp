#include "dpc/discharging.hpp"

#include <algorithm>

namespace dpc {

namespace {

const Charge kThird = Charge(1) / 3;
const Charge kTwoThirds = Charge(2) / 3;
const Charge kHalf = Charge(1) / 2;
const Charge kSixth = Charge(1) / 6;
const Charge kFourThirds = Charge(4) / 3;

} // namespace

std::string fraction_string(const Charge& q) {
    std::string num = numerator(q).str();
    if (denominator(q) == 1) return num;
    return num + "/" + denominator(q).str();
}

Charge ChargeLedger::initial_total() const {
    Charge t = 0;
    for (const auto& [e, q] : initial) t += q;
    return t;
}

std::map<ElementId, Charge> ChargeLedger::final_charges() const {
    std::map<ElementId, Charge> out = initial;
    for (const Transfer& t : transfers) {
        out[t.from] -= t.amount;
        out[t.to] += t.amount;
    }
    return out;
}

Charge ChargeLedger::final_of(const ElementId& e) const {
    Charge q = 0;
    auto it = initial.find(e);
    if (it != initial.end()) q = it->second;
    for (const Transfer& t : transfers) {
        if (t.from == e) q -= t.amount;
        if (t.to == e) q += t.amount;
    }
    return q;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    ChargeLedger led;
    led.outer_face = g.outer_face();
    for (int v = 0; v < g.vertex_count(); ++v)
        led.initial[ElementId::vertex(v)] = Charge(g.degree(v) - 4);
    for (const FaceRecord& f : g.faces()) {
        if (f.id == led.outer_face)
            led.initial[ElementId::face(f.id)] = Charge(f.length + 4);
        else
            led.initial[ElementId::face(f.id)] = Charge(f.length - 4);
    }
    return led;
}

ChargeLedger apply_rules(const PlaneGraph& g, const Classification& cl) {
    const int outer = g.outer_face();
    if (static_cast<int>(g.outer_vertices().size()) < 3)
        throw input_error("discharging requires an outer cycle of length >= 3; "
                          "single-vertex boundaries are reduced before discharging");
    ChargeLedger led = initial_charges(g);
    std::vector<Transfer>& ts = led.transfers;

    auto internal_face = [&](int fid) { return fid != outer; };
    auto internal_vertex = [&](int v) { return !g.on_outer(v); };

    // R1: each non-special 3-face receives 1/3 from each incident internal vertex.
    for (const FaceRecord& f : g.faces()) {
        if (!internal_face(f.id) || f.length != 3) continue;
        if (cl.in_f_prime(3, f.id)) continue;
        for (int v : f.vertex_set)
            if (internal_vertex(v))
                ts.push_back({"R1", ElementId::vertex(v), ElementId::face(f.id), kThird});
    }

    // R2: each 2-vertex receives 2/3 from each incident internal face.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        for (int fid : g.faces_at(v))
            if (internal_face(fid))
                ts.push_back({"R2", ElementId::face(fid), ElementId::vertex(v), kTwoThirds});
    }

    // R3: internal 3-vertices: bad 2/3 and light 1/2 from each 9+-face;
    // good 1/3 from each incident face.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (cl.label[v] == VertexClass::none) continue;
        for (int fid : g.faces_at(v)) {
            const FaceRecord& f = g.face(fid);
            if (cl.label[v] == VertexClass::good)
                ts.push_back({"R3", ElementId::face(fid), ElementId::vertex(v), kThird});
            else if (f.length >= 9 && internal_face(fid)) {
                Charge amt = cl.label[v] == VertexClass::bad ? kTwoThirds : kHalf;
                ts.push_back({"R3", ElementId::face(fid), ElementId::vertex(v), amt});
            }
        }
    }

    // R4: internal 4-vertices, by the multiset of incident face types.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!internal_vertex(v) || g.degree(v) != 4) continue;
        std::vector<int> fs = g.faces_at(v);
        if (fs.size() != 4) continue;
        int ns3 = 0, nine = 0, other8 = 0;
        std::vector<int> nine_faces;
        for (int fid : fs) {
            const FaceRecord& f = g.face(fid);
            if (f.length >= 9) { ++nine; nine_faces.push_back(fid); }
            else if (f.length == 3 && !cl.in_f_prime(3, fid)) ++ns3;
            else ++other8;
        }
        Charge amt = 0;
        if ((ns3 == 1 && nine == 3) || (ns3 == 2 && nine == 2)) amt = kThird;
        else if (ns3 == 1 && other8 == 1 && nine == 2) amt = kSixth;
        if (amt != 0)
            for (int fid : nine_faces)
                ts.push_back({"R4", ElementId::face(fid), ElementId::vertex(v), amt});
    }

    // R6: each 3+-vertex on D sends 1 to each incident special 8--face and
    // 1/3 to each other incident internal 8--face.
    for (int v : g.outer_vertices()) {
        if (g.degree(v) < 3) continue;
        for (int fid : g.faces_at(v)) {
            const FaceRecord& f = g.face(fid);
            if (!internal_face(fid) || f.length > 8) continue;
            Charge amt = is_special_face(g, cl, fid) ? Charge(1) : kThird;
            ts.push_back({"R6", ElementId::vertex(v), ElementId::face(fid), amt});
        }
    }

    // R7: D pays 4/3 to each incident 2-vertex and to each incident 3-vertex
    // with an internal 8--face, 1 to each other incident vertex.
    for (int v : g.outer_vertices()) {
        bool heavy = g.degree(v) == 2;
        if (g.degree(v) == 3)
            for (int fid : g.faces_at(v)) {
                const FaceRecord& f = g.face(fid);
                if (internal_face(fid) && f.length <= 8) heavy = true;
            }
        ts.push_back({"R7", ElementId::face(outer), ElementId::vertex(v),
                      heavy ? kFourThirds : Charge(1)});
    }

    // R5: each internal face sends its remaining positive charge to D.
    std::map<ElementId, Charge> after = led.final_charges();
    for (const FaceRecord& f : g.faces()) {
        if (!internal_face(f.id)) continue;
        Charge rem = after[ElementId::face(f.id)];
        if (rem > 0)
            ts.push_back({"R5", ElementId::face(f.id), ElementId::face(outer), rem});
    }

    std::sort(ts.begin(), ts.end(), [](const Transfer& a, const Transfer& b) {
        if (a.rule != b.rule) return a.rule < b.rule;
        if (!(a.from == b.from)) return a.from < b.from;
        if (!(a.to == b.to)) return a.to < b.to;
        return a.amount < b.amount;
    });
    return led;
}

ChargeVerdict verify_charges(const ChargeLedger& ledger, const PlaneGraph& g,
                             const ConfigReport* report) {
    ChargeVerdict v;
    std::map<ElementId, Charge> fin = ledger.final_charges();
    Charge total = 0;
    for (const auto& [e, q] : fin) {
        total += q;
        if (q < 0) v.negative.push_back(e);
    }
    v.conserved = total == ledger.initial_total();
    ElementId d = ElementId::face(ledger.outer_face);
    v.d_final = fin.count(d) ? fin[d] : Charge(0);
    v.d_positive = v.d_final > 0;
    v.pass = v.negative.empty() && v.d_positive;
    if (!v.pass && report) v.citations = report->citations();
    (void)g;
    return v;
}

std::vector<AuditEntry> charge_audit(const ChargeLedger& ledger) {
    std::map<ElementId, AuditEntry> entries;
    for (const auto& [e, q] : ledger.initial) {
        AuditEntry a;
        a.element = e;
        a.initial = q;
        a.final = q;
        entries[e] = std::move(a);
    }
    for (const Transfer& t : ledger.transfers) {
        entries[t.from].moves.emplace_back(t.rule, t.to, -t.amount);
        entries[t.from].final -= t.amount;
        entries[t.to].moves.emplace_back(t.rule, t.from, t.amount);
        entries[t.to].final += t.amount;
    }
    std::vector<AuditEntry> out;
    for (auto& [e, a] : entries) {
        std::sort(a.moves.begin(), a.moves.end());
        a.line = a.element.name() + ": " + fraction_string(a.initial);
        for (const auto& [rule, other, amt] : a.moves) {
            bool in = amt > 0;
            a.line += (in ? " +" : " -") + fraction_string(in ? amt : Charge(-amt)) + " (" +
                      rule + (in ? " from " : " to ") + other.name() + ")";
        }
        a.line += " = " + fraction_string(a.final);
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace dpc
