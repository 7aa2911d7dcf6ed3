#pragma once

#include <vector>

#include "pdptw/matrix.hpp"
#include "pdptw/types.hpp"

namespace pdptw {

struct Stop {
  int vertex = 0;
  double arrival = 0.0;
  double departure = 0.0;   // max(arrival, window_open) + service_time
  double load_after = 0.0;  // vehicle load right after serving this vertex
};

struct RouteSchedule {
  std::vector<Stop> stops;      // non-depot stops in visit order
  double return_arrival = 0.0;  // arrival back at the depot
  double distance = 0.0;
  double tardiness = 0.0;       // sum of max(0, arrival - window_close), return leg included
  double max_load = 0.0;

  bool empty() const { return stops.empty(); }
};

// Forward recurrence over a depot-to-depot route. The vehicle leaves the
// depot at time 0, waits when it arrives before a window opens, and serves
// each vertex for its service time. The route must start and end at vertex 0
// with distinct non-depot vertices in between; throws std::invalid_argument
// otherwise.
RouteSchedule schedule_route(const std::vector<int>& route, const Vehicle& vehicle,
                             const Instance& instance, const DistanceMatrix& matrix);

namespace detail {

// Same recurrence without the shape checks. Validators use this to score
// malformed routes (duplicates, missing depot endpoints) instead of failing.
RouteSchedule schedule_sequence(const std::vector<int>& route, const Vehicle& vehicle,
                                const Instance& instance, const DistanceMatrix& matrix);

}  // namespace detail

}  // namespace pdptw
