#include "dpc/pipeline.hpp"

#include <sstream>

#include "dpc/configurations.hpp"
#include "dpc/discharging.hpp"
#include "dpc/solver.hpp"

namespace dpc {

using nlohmann::json;

namespace {

json cycle_json(const CycleRef& c) { return json(c.vertices); }

json classification_json(const PlaneGraph& g, const Classification& cl) {
    json labels = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
        switch (cl.label[v]) {
            case VertexClass::bad: labels[std::to_string(v)] = "bad"; break;
            case VertexClass::light: labels[std::to_string(v)] = "light"; break;
            case VertexClass::good: labels[std::to_string(v)] = "good"; break;
            case VertexClass::none: break;
        }
    }
    json fsets = json::object(), fprime = json::object();
    for (const auto& [k, faces] : cl.f_sets) fsets[std::to_string(k)] = faces;
    for (const auto& [k, faces] : cl.f_prime_sets) fprime[std::to_string(k)] = faces;
    return json{{"vertex_classes", labels}, {"f", fsets}, {"f_prime", fprime}};
}

json config_json(const PlaneGraph& g, const ConfigReport& rep) {
    json out;
    out["hypothesis_ok"] = rep.hypothesis.ok;
    out["adjacent_pairs"] = json::array();
    for (const auto& [a, b] : rep.hypothesis.pairs)
        out["adjacent_pairs"].push_back(json::array({cycle_json(a), cycle_json(b)}));
    out["classification"] = classification_json(g, rep.classification);
    out["tetrads"] = json::array();
    for (const Tetrad& t : rep.tetrads)
        out["tetrads"].push_back(json{{"path", t.path},
                                      {"apex12", t.apex12},
                                      {"apex34", t.apex34},
                                      {"face", t.face},
                                      {"avoids_s", t.avoids_s}});
    out["special_9_faces"] = json::array();
    for (const Special9& s : rep.special9)
        out["special_9_faces"].push_back(json{{"face", s.face}, {"aligned", s.aligned}});
    out["bad_runs"] = json::array();
    for (const BadRun& r : rep.bad_runs)
        out["bad_runs"].push_back(json{{"face", r.face},
                                       {"run", r.run},
                                       {"run_bound_exceeded", r.run_bound_exceeded}});
    const SideConditionReport& sc = rep.side_conditions;
    json side;
    side["proper_subset"] = sc.proper_subset;
    side["two_connected"] = sc.two_connected;
    side["min_internal_degree"] = sc.min_internal_degree;
    side["low_degree_internal"] = sc.low_degree_internal;
    side["no_separating_cycle"] = sc.no_separating_cycle;
    side["separating_cycles"] = json::array();
    for (const CycleRef& c : sc.separating_cycles)
        side["separating_cycles"].push_back(cycle_json(c));
    side["induced_outer"] = sc.induced_outer;
    json chords = json::array();
    for (const Edge& e : sc.chords_of_d) chords.push_back(json::array({e.first, e.second}));
    side["chords_of_d"] = chords;
    side["path_condition"] = sc.path_condition;
    side["four_face_condition"] = sc.four_face_condition;
    out["side_conditions"] = side;
    out["citations"] = rep.citations();
    return out;
}

json verdict_json(const ChargeVerdict& v) {
    json out;
    out["pass"] = v.pass;
    out["d_final"] = fraction_string(v.d_final);
    out["d_positive"] = v.d_positive;
    out["conserved"] = v.conserved;
    json neg = json::array();
    for (const ElementId& e : v.negative) neg.push_back(e.name());
    out["negative_elements"] = neg;
    out["citations"] = v.citations;
    return out;
}

std::string coloring_string(const ColoringMap& phi) {
    std::string s;
    for (int v = 0; v < phi.size(); ++v) {
        if (v) s += " ";
        s += std::to_string(v) + ":" + std::to_string(phi.at(v));
    }
    return s;
}

} // namespace

RunReport run_pipeline(const GraphDocument& doc, const std::string& command,
                       const RunOptions& options) {
    RunReport rep;
    rep.command = command;
    rep.digest = document_digest(doc);
    json& m = rep.machine;
    m["command"] = command;
    m["digest"] = rep.digest;
    m["seed"] = options.seed;
    m["budget_vertices"] = options.budget_vertices;
    m["budget_samples"] = options.budget_samples;
    m["adjacency_convention"] =
        options.convention == AdjacencyConvention::edge_sharing ? "edge" : "vertex";
    std::ostringstream text;
    text << "command: " << command << "\ninput digest: " << rep.digest << "\n";

    try {
        PlaneGraph g = doc.to_plane_graph();
        if (command == "faces") {
            json faces = json::array();
            for (const FaceRecord& f : g.faces())
                faces.push_back(json{{"id", f.id},
                                     {"length", f.length},
                                     {"boundary", f.boundary},
                                     {"is_outer", f.id == g.outer_face()}});
            m["faces"] = faces;
            m["euler"] = g.vertex_count() - g.edge_count() + g.face_count();
            text << "V=" << g.vertex_count() << " E=" << g.edge_count()
                 << " F=" << g.face_count() << " (V-E+F=" << m["euler"] << ")\n";
            for (const FaceRecord& f : g.faces()) {
                text << "f" << f.id << ": length " << f.length
                     << (f.id == g.outer_face() ? " (outer)" : "") << " [";
                for (size_t i = 0; i < f.boundary.size(); ++i)
                    text << (i ? " " : "") << f.boundary[i];
                text << "]\n";
            }
            rep.exit_code = exit_pass;
        } else if (command == "check-hypothesis") {
            HypothesisResult h = check_hypothesis(g, options.convention);
            m["hypothesis_ok"] = h.ok;
            json pairs = json::array();
            for (const auto& [a, b] : h.pairs)
                pairs.push_back(json::array({cycle_json(a), cycle_json(b)}));
            m["adjacent_pairs"] = pairs;
            text << (h.ok ? "PASS: no adjacent cycles of length <= 8\n"
                          : "FAIL: " + std::to_string(h.pairs.size()) +
                                " adjacent pair(s) of cycles of length <= 8\n");
            rep.exit_code = h.ok ? exit_pass : exit_negative;
        } else if (command == "configs") {
            ConfigReport cfg = build_config_report(g, options.convention);
            m["config"] = config_json(g, cfg);
            text << "tetrads: " << cfg.tetrads.size()
                 << ", special 9-faces: " << cfg.special9.size()
                 << ", side conditions " << (cfg.side_conditions.all_ok() ? "ok" : "violated")
                 << "\n";
            for (const std::string& c : cfg.citations()) text << "cite: " << c << "\n";
            rep.exit_code = exit_pass;
        } else if (command == "discharge") {
            ConfigReport cfg = build_config_report(g, options.convention);
            ChargeLedger led = apply_rules(g, cfg.classification);
            ChargeVerdict v = verify_charges(led, g, &cfg);
            m["initial_total"] = fraction_string(led.initial_total());
            m["transfers"] = led.transfers.size();
            m["verdict"] = verdict_json(v);
            json audit = json::array();
            for (const AuditEntry& a : charge_audit(led)) audit.push_back(a.line);
            m["audit"] = audit;
            text << "initial charge total: " << fraction_string(led.initial_total()) << "\n";
            text << (v.pass ? "PASS" : "FAIL") << ": mu*(D) = "
                 << fraction_string(v.d_final) << ", negative elements: "
                 << v.negative.size() << "\n";
            for (const ElementId& e : v.negative) {
                for (const AuditEntry& a : charge_audit(led))
                    if (a.element == e) text << "  " << a.line << "\n";
            }
            for (const std::string& c : v.citations) text << "cite: " << c << "\n";
            rep.exit_code = v.pass ? exit_pass : exit_negative;
        } else if (command == "solve") {
            CorrAssignment c = doc.to_assignment(g.skeleton());
            ColoringMap phi0 = doc.to_precoloring();
            auto phi = find_dp_coloring(g.skeleton(), c, phi0);
            if (phi) {
                json out = json::object();
                for (int v = 0; v < phi->size(); ++v) out[std::to_string(v)] = phi->at(v);
                m["coloring"] = out;
                text << "coloring: " << coloring_string(*phi) << "\n";
                rep.exit_code = exit_pass;
            } else {
                m["coloring"] = nullptr;
                text << "no C-coloring extends the precoloring\n";
                rep.exit_code = exit_negative;
            }
        } else if (command == "choosable") {
            ChoosabilityResult r =
                is_choosable(g.skeleton(), doc.k, options.budget_vertices);
            m["choosable"] = r.choosable;
            m["assignments_checked"] = r.assignments_checked;
            if (!r.choosable) m["witness_lists"] = r.witness_lists;
            text << (r.choosable ? "PASS" : "FAIL") << ": graph is "
                 << (r.choosable ? "" : "not ") << std::to_string(doc.k) + "-choosable ("
                 << r.assignments_checked << " list assignments checked)\n";
            if (!r.choosable) {
                text << "witness lists:";
                for (size_t v = 0; v < r.witness_lists.size(); ++v) {
                    text << " " << v << ":{";
                    for (size_t i = 0; i < r.witness_lists[v].size(); ++i)
                        text << (i ? "," : "") << r.witness_lists[v][i];
                    text << "}";
                }
                text << "\n";
            }
            rep.exit_code = r.choosable ? exit_pass : exit_negative;
        } else if (command == "verify-dichotomy") {
            ConfigReport cfg = build_config_report(g, options.convention);
            ChargeLedger led = apply_rules(g, cfg.classification);
            ChargeVerdict v = verify_charges(led, g, &cfg);
            std::vector<std::string> cites = cfg.citations();
            bool holds = v.pass || !cites.empty();
            m["verdict"] = verdict_json(v);
            m["citations"] = cites;
            m["dichotomy_holds"] = holds;
            text << "charges: " << (v.pass ? "PASS" : "FAIL") << ", citations: "
                 << cites.size() << "\n";
            for (const std::string& c : cites) text << "cite: " << c << "\n";
            text << (holds ? "dichotomy holds\n" : "DICHOTOMY VIOLATED\n");
            rep.exit_code = holds ? exit_pass : exit_negative;
        } else {
            throw input_error("unknown command '" + command + "'");
        }
    } catch (const budget_error& e) {
        m["error"] = e.what();
        text << "budget exceeded: " << e.what() << "\n";
        rep.exit_code = exit_budget;
    } catch (const input_error& e) {
        m["error"] = e.what();
        text << "input error: " << e.what() << "\n";
        rep.exit_code = exit_input;
    } catch (const precondition_error& e) {
        m["error"] = e.what();
        text << "input error: " << e.what() << "\n";
        rep.exit_code = exit_input;
    }
    m["exit"] = rep.exit_code;
    rep.text = text.str();
    return rep;
}

} // namespace dpc
