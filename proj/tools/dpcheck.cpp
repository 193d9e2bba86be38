#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dpc/corpus.hpp"
#include "dpc/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"dpcheck: DP-coloring verification toolkit for plane graphs"};
    std::string input, command, convention = "edge", emit = "text";
    std::string profile = "sparse-girth";
    std::uint64_t seed = 1;
    int budget_vertices = 8;
    long long budget_samples = 200;
    int count = 10;

    app.add_option("--input", input, "graph document file, or - for stdin");
    app.add_option("--command", command,
                   "faces | check-hypothesis | configs | discharge | solve | choosable | "
                   "verify-dichotomy | generate")
        ->required();
    app.add_option("--seed", seed, "deterministic seed");
    app.add_option("--budget-vertices", budget_vertices, "choosability vertex budget");
    app.add_option("--budget-samples", budget_samples, "sampling budget");
    app.add_option("--adjacency-convention", convention, "edge | vertex")
        ->check(CLI::IsMember({"edge", "vertex"}));
    app.add_option("--emit", emit, "text | machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--profile", profile,
                   "generate: sparse-girth | tetrad-gadget | special9-gadget | boundary-heavy");
    app.add_option("--count", count, "generate: number of instances");
    CLI11_PARSE(app, argc, argv);

    try {
        if (command == "generate") {
            auto docs = dpc::generate_corpus(seed, count, dpc::profile_from_string(profile));
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& d : docs) arr.push_back(nlohmann::json::parse(dpc::emit_graph(d)));
            std::cout << arr.dump(2) << "\n";
            return dpc::exit_pass;
        }
        if (input.empty()) {
            std::cerr << "input error: --input is required for this command\n";
            return dpc::exit_input;
        }
        std::string text;
        if (input == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(input);
            if (!f) {
                std::cerr << "input error: cannot open " << input << "\n";
                return dpc::exit_input;
            }
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        dpc::GraphDocument doc = dpc::parse_graph(text);
        dpc::RunOptions opts;
        opts.seed = seed;
        opts.budget_vertices = budget_vertices;
        opts.budget_samples = budget_samples;
        opts.convention = convention == "edge" ? dpc::AdjacencyConvention::edge_sharing
                                               : dpc::AdjacencyConvention::vertex_sharing;
        dpc::RunReport rep = dpc::run_pipeline(doc, command, opts);
        if (emit == "machine")
            std::cout << rep.machine_bytes();
        else
            std::cout << rep.text;
        return rep.exit_code;
    } catch (const dpc::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return dpc::exit_budget;
    } catch (const dpc::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return dpc::exit_input;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return dpc::exit_input;
    }
}
