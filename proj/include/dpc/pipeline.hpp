#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "dpc/document.hpp"
#include "dpc/graph.hpp"

namespace dpc {

// Exit-code contract: 0 = PASS / solution found, 1 = verified negative
// (uncolorable, FAIL verdict, hypothesis violated), 2 = input error,
// 3 = budget exceeded.
enum ExitCode : int { exit_pass = 0, exit_negative = 1, exit_input = 2, exit_budget = 3 };

struct RunOptions {
    std::uint64_t seed = 1;
    int budget_vertices = 8;
    long long budget_samples = 200;
    AdjacencyConvention convention = AdjacencyConvention::edge_sharing;
};

struct RunReport {
    std::string command;
    std::string digest;
    int exit_code = exit_pass;
    nlohmann::json machine; // canonical machine emission (sorted keys)
    std::string text;       // human-readable report

    std::string machine_bytes() const { return machine.dump(2) + "\n"; }
};

// command in {faces, check-hypothesis, configs, discharge, solve, choosable,
// verify-dichotomy}.
RunReport run_pipeline(const GraphDocument& doc, const std::string& command,
                       const RunOptions& options = {});

} // namespace dpc
