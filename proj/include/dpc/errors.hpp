#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

// Bad or malformed input (documents, graphs, colors out of range, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold for the given arguments.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive search refused because the instance exceeds the configured budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dpc
