#pragma once

#include <vector>

#include "pdptw/solution.hpp"

namespace pdptw {

// One entry per stop whose load is negative or exceeds the vehicle capacity.
std::vector<Violation> check_capacity(const RouteSchedule& schedule, const Vehicle& vehicle);

// One entry per stop whose arrival is strictly later than its window close.
// Early arrival is absorbed by waiting and never flagged. The return leg to
// the depot is checked against the depot window.
std::vector<Violation> check_time_windows(const RouteSchedule& schedule,
                                          const Instance& instance, int vehicle_id = 0);

// same_vehicle: each pair must sit on one route with the supplier earlier in
// the visit sequence. cross_vehicle: scheduled departures must satisfy
// D_supplier <= D_customer, wherever the two vertices are placed.
std::vector<Violation> check_precedence(const Solution& solution, const Instance& instance,
                                        PairingMode mode);

// Aggregates structural, capacity, precedence and time-window checks.
// Tolerates malformed solutions (duplicated vertices, missing depot
// endpoints, out-of-range ids) and reports them as structure violations.
ValidationReport validate_solution(const Solution& solution, const Instance& instance,
                                   PairingMode mode);

}  // namespace pdptw
