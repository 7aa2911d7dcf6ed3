#pragma once

#include <cstdint>

#include "pdptw/types.hpp"

namespace pdptw {

struct GenParams {
  int pair_count = 1;
  int vehicle_count = 1;        // must be <= pair_count
  double area = 100.0;          // square side; the depot sits at the center
  int quantity_min = 1;
  int quantity_max = 10;
  double capacity = 60.0;       // uniform fleet capacity, must cover quantity_max
  double cost_rate_min = 50.0;
  double cost_rate_max = 70.0;
  double window_width_min = 50.0;
  double window_width_max = 150.0;
  double horizon = 1000.0;
  double service_min = 1.0;
  double service_max = 5.0;
  std::uint64_t rng_seed = 1;

  void validate() const;  // throws std::invalid_argument
};

// Random instance with a constructive feasibility guarantee: vertices are
// drawn uniformly in the square, quantities uniformly in the configured
// range, and time windows are placed around the arrivals of a greedy seed
// tour (and widened until a certifier accepts) so at least one feasible
// solution exists under same-vehicle pairing. Deterministic in the seed.
Instance generate_instance(const GenParams& params);

}  // namespace pdptw
