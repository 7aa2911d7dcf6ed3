#pragma once

#include <string>
#include <vector>

#include "pdptw/schedule.hpp"
#include "pdptw/types.hpp"

namespace pdptw {

enum class ViolationKind { structure, capacity, precedence, time_window };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::structure;
  int vehicle = 0;  // vehicle id, 0 when not tied to a route
  int vertex = -1;  // vertex id, -1 when not tied to one
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  int count(ViolationKind kind) const;
  bool feasible() const { return violations.empty(); }
};

// A complete candidate: one depot-wrapped route per vehicle, plus the
// computed schedules, totals and feasibility report once evaluated.
struct Solution {
  std::vector<std::vector<int>> routes;  // aligned with Instance::fleet()
  std::vector<RouteSchedule> schedules;
  double total_cost = 0.0;
  double total_distance = 0.0;
  double total_tardiness = 0.0;
  ValidationReport report;
  bool feasible = false;

  int vehicles_used() const;  // routes with at least one non-depot stop
};

// Schedules every route and fills totals plus the feasibility report.
// routes.size() must equal the fleet size.
Solution make_solution(std::vector<std::vector<int>> routes, const Instance& instance,
                       const DistanceMatrix& matrix, PairingMode mode);

// Sum over vehicles of cost_rate * route distance; empty routes contribute 0.
// Computed from route geometry alone, so it is usable on unscheduled routes.
double solution_cost(const Solution& solution, const Instance& instance);

}  // namespace pdptw
