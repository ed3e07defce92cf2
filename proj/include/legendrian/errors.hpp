#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace legendrian {

// Malformed or invalid user input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Disk search ran past its node budget (CLI exit code 3).
struct BudgetExceeded : std::runtime_error {
    std::uint64_t nodes;
    explicit BudgetExceeded(std::uint64_t n)
        : std::runtime_error("disk search exceeded node budget after " + std::to_string(n) + " nodes"), nodes(n) {}
};

}  // namespace legendrian
