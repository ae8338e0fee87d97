#pragma once

#include <cstdint>
#include <stdexcept>

namespace stk {

// Cap on exact-search effort.  Searches that would blow past the cap either
// return an explicit unknown/budget status or throw BudgetError -- never a
// silently wrong answer.
struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace stk
