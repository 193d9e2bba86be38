#include <doctest.h>

#include "dpc/configurations.hpp"
#include "dpc/corpus.hpp"
#include "dpc/pipeline.hpp"
#include "fixtures.hpp"

using namespace dpc;

namespace {

const char* kC3Doc = R"({
  "format_version": 1,
  "k": 3,
  "outer_face": [0, 1, 2],
  "rotation": [[1, 2], [2, 0], [0, 1]]
})";

GraphDocument k4_doc() {
    GraphDocument doc;
    doc.k = 3;
    doc.rotation = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {1, 2, 0}};
    doc.outer_face = {0, 1, 2};
    std::map<Edge, CorrAssignment::Matching> ms;
    CorrAssignment::Matching ident{{1, 1}, {2, 2}, {3, 3}};
    PlaneGraph g = fixtures::k4_plane();
    for (const Edge& e : g.edges()) ms[e] = ident;
    doc.matchings = ms;
    return doc;
}

} // namespace

TEST_CASE("parse_graph: minimal C3 document") {
    GraphDocument doc = parse_graph(kC3Doc);
    PlaneGraph g = doc.to_plane_graph();
    CHECK(g.face_count() == 2);
    CHECK(doc.k == 3);
}

TEST_CASE("parse_graph: errors are positioned or named") {
    CHECK_THROWS_WITH_AS(parse_graph("{"), doctest::Contains("syntax error"), input_error);
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"format_version":1,"k":3,"outer_face":[0,1,2],
                       "rotation":[[1,2],[2,0],[0,1]],"extra":1})"),
        doctest::Contains("unknown field"), input_error);
    // color out of [k] names the edge
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"format_version":1,"k":3,"outer_face":[0,1,2],
                       "rotation":[[1,2],[2,0],[0,1]],
                       "matchings":{"0-1":[[1,4]]}})"),
        doctest::Contains("0-1"), input_error);
    // non-canonical edge key
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"format_version":1,"k":3,"outer_face":[0,1,2],
                       "rotation":[[1,2],[2,0],[0,1]],
                       "matchings":{"1-0":[[1,1]]}})"),
        doctest::Contains("canonical"), input_error);
    // asymmetric rotation
    CHECK_THROWS_AS(parse_graph(R"({"format_version":1,"k":3,"outer_face":[0,1],
                                    "rotation":[[1],[]]})"),
                    input_error);
}

TEST_CASE("emit/parse round trip is byte identical") {
    GraphDocument doc = k4_doc();
    doc.precolored[0] = 1;
    std::string bytes = emit_graph(doc);
    GraphDocument again = parse_graph(bytes);
    CHECK(emit_graph(again) == bytes);
    CHECK(document_digest(again) == document_digest(doc));
}

TEST_CASE("generate_corpus: determinism and profile predicates") {
    for (Profile p : {Profile::sparse_girth, Profile::boundary_heavy,
                      Profile::tetrad_gadget, Profile::special9_gadget}) {
        auto a = generate_corpus(2024, 4, p);
        auto b = generate_corpus(2024, 4, p);
        REQUIRE(a.size() == 4);
        for (size_t i = 0; i < a.size(); ++i)
            CHECK(emit_graph(a[i]) == emit_graph(b[i]));
        for (const GraphDocument& doc : a) {
            GraphDocument reparsed = parse_graph(emit_graph(doc));
            PlaneGraph g = reparsed.to_plane_graph();
            int L = static_cast<int>(doc.outer_face.size());
            CHECK(L >= 9);
            CHECK(L <= 12);
            if (p == Profile::sparse_girth || p == Profile::boundary_heavy)
                CHECK(check_hypothesis(g).ok);
            if (p == Profile::tetrad_gadget) CHECK_FALSE(find_tetrads(g).empty());
            if (p == Profile::special9_gadget) {
                Classification cl = classify_3_vertices(g);
                CHECK_FALSE(find_special_9_faces(g, cl).empty());
            }
            if (p == Profile::boundary_heavy) {
                bool contact = false;
                for (int v : g.outer_vertices())
                    if (g.degree(v) >= 3) contact = true;
                CHECK(contact);
            }
        }
    }
}

TEST_CASE("run_pipeline: faces on C3") {
    GraphDocument doc = parse_graph(kC3Doc);
    RunReport rep = run_pipeline(doc, "faces");
    CHECK(rep.exit_code == exit_pass);
    CHECK(rep.machine["euler"] == 2);
}

TEST_CASE("run_pipeline: solve on K4 with identity matchings is a verified negative") {
    RunReport rep = run_pipeline(k4_doc(), "solve");
    CHECK(rep.exit_code == exit_negative);
}

TEST_CASE("run_pipeline: check-hypothesis on K4 exits 1 with witness") {
    RunReport rep = run_pipeline(k4_doc(), "check-hypothesis");
    CHECK(rep.exit_code == exit_negative);
    CHECK(rep.machine["adjacent_pairs"].size() > 0);
}

TEST_CASE("run_pipeline: choosable respects the budget exit code") {
    GraphDocument doc;
    doc.k = 2;
    doc.rotation = fixtures::cycle_graph(10).skeleton().edges().empty()
                       ? std::vector<std::vector<int>>{}
                       : std::vector<std::vector<int>>{};
    // C10 rotation
    doc.rotation.resize(10);
    for (int i = 0; i < 10; ++i) doc.rotation[i] = {(i + 1) % 10, (i + 9) % 10};
    doc.outer_face = fixtures::iota_cycle(10);
    RunReport rep = run_pipeline(doc, "choosable");
    CHECK(rep.exit_code == exit_budget);
}

TEST_CASE("run_pipeline: discharge on C12 is a verified negative with citation") {
    GraphDocument doc;
    doc.k = 3;
    doc.rotation.resize(12);
    for (int i = 0; i < 12; ++i) doc.rotation[i] = {(i + 1) % 12, (i + 11) % 12};
    doc.outer_face = fixtures::iota_cycle(12);
    RunReport rep = run_pipeline(doc, "discharge");
    CHECK(rep.exit_code == exit_negative);
    CHECK(rep.machine["verdict"]["d_final"] == "0");
    CHECK(rep.machine["verdict"]["conserved"] == true);
    // dichotomy still holds: the failure is explained
    RunReport dich = run_pipeline(doc, "verify-dichotomy");
    CHECK(dich.exit_code == exit_pass);
    CHECK(dich.machine["dichotomy_holds"] == true);
}

TEST_CASE("run_pipeline: identical inputs give identical report bytes") {
    auto docs = generate_corpus(5, 1, Profile::sparse_girth);
    RunOptions opts;
    opts.seed = 17;
    RunReport a = run_pipeline(docs[0], "discharge", opts);
    RunReport b = run_pipeline(docs[0], "discharge", opts);
    CHECK(a.machine_bytes() == b.machine_bytes());
    CHECK(a.text == b.text);
}

TEST_CASE("run_pipeline: unknown command is an input error") {
    GraphDocument doc = parse_graph(kC3Doc);
    RunReport rep = run_pipeline(doc, "nonsense");
    CHECK(rep.exit_code == exit_input);
}

TEST_CASE("solve honors precolorings") {
    GraphDocument doc = parse_graph(kC3Doc);
    doc.precolored[0] = 2;
    RunReport rep = run_pipeline(doc, "solve");
    CHECK(rep.exit_code == exit_pass);
    CHECK(rep.machine["coloring"]["0"] == 2);
}
