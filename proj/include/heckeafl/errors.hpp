#pragma once

#include <stdexcept>
#include <string>

namespace heckeafl {

// Error taxonomy mirrored by the CLI exit codes: assertion failures exit 1,
// usage errors exit 2, budget/precision errors exit 3.

struct NotSymmetricError : std::runtime_error {
    explicit NotSymmetricError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotInvariantError : std::runtime_error {
    explicit NotInvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnimplementedRegimeError : std::runtime_error {
    explicit UnimplementedRegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace heckeafl
