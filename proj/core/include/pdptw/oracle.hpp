#pragma once

#include <stdexcept>

#include "pdptw/solution.hpp"
#include "pdptw/types.hpp"

namespace pdptw {

struct OracleResult {
  bool feasible = false;
  double optimal_cost = 0.0;
  Solution optimal_solution;    // meaningful only when feasible
  long long explored = 0;       // candidate solutions whose schedules were evaluated
  long long feasible_count = 0;
};

// Thrown when an instance exceeds the enumeration limit.
struct OracleLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive search over every admissible assignment of work to vehicles and
// every within-route ordering. Returns the cheapest solution with zero
// violations, with cost ties broken by the lexicographically smallest route
// list, or an infeasible result when no candidate passes. Refuses instances
// with more than `limit` non-depot vertices.
OracleResult exact_solve(const Instance& instance,
                         PairingMode mode = PairingMode::same_vehicle, int limit = 8);

}  // namespace pdptw
