#pragma once

#include <stdexcept>
#include <string>

namespace fq {

// A size guard was violated: the requested enumeration would leave desk scale.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// A budgeted search ran out of time. The message records how far it got;
// no partial result is ever returned as if it were complete.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fq
