#pragma once

#include <stdexcept>
#include <string>

namespace rsnd {

// Error taxonomy used across the library:
//  - std::invalid_argument      caller violated a documented precondition
//  - infeasible_error           the requested object provably does not exist
//  - structural_error           input lacks structure an algorithm relies on
//  - resource_error             an explicit budget or iteration cap was hit
//  - internal_error             a guaranteed invariant failed; always a bug

struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace rsnd
