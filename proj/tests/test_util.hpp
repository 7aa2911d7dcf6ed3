#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pdptw/chromosome.hpp"
#include "pdptw/matrix.hpp"
#include "pdptw/rng.hpp"
#include "pdptw/solution.hpp"
#include "pdptw/types.hpp"
#include "pdptw/validate.hpp"

namespace testutil {

// Ten request vertices with customer/supplier pairs (1,5), (2,8), (9,7),
// (10,3), (4,6) and capacity 60. The quantities are built so that in the
// sequence [5,8,7,3,...] vertex 3 is the first overload (15+15+25+20 > 60)
// and customer 9 is the unique largest pending delivery at that point.
inline pdptw::Instance figure_instance() {
  std::vector<pdptw::Vertex> vertices;
  const double quantities[11] = {0, -15, -15, +20, -10, +15, +10, +25, +15, -25, -20};
  for (int id = 0; id <= 10; ++id) {
    pdptw::Vertex v;
    v.id = id;
    v.position = {static_cast<double>(id), 0.0};
    v.window_open = 0.0;
    v.window_close = 1e6;
    v.service_time = 0.0;
    v.quantity = quantities[id];
    vertices.push_back(v);
  }
  std::vector<pdptw::RequestPair> pairs{{5, 1}, {8, 2}, {7, 9}, {3, 10}, {6, 4}};
  std::vector<pdptw::Vehicle> fleet{{1, 60.0, 1.0, 1.0}, {2, 60.0, 1.0, 1.0}};
  return pdptw::Instance(std::move(vertices), std::move(pairs), std::move(fleet));
}

// One pair: depot (0,0), supplier (3,4) with window [10,20] and service 2,
// customer (3,0) with window [0,40] and service 1, one unit-rate vehicle.
// Tight supplier_close values also lower window_open to keep the vertex valid.
inline pdptw::Instance worked_instance(double supplier_close = 20.0) {
  std::vector<pdptw::Vertex> vertices{
      {0, {0.0, 0.0}, 0.0, 1000.0, 0.0, 0.0},
      {1, {3.0, 4.0}, std::min(10.0, supplier_close), supplier_close, 2.0, 5.0},
      {2, {3.0, 0.0}, 0.0, 40.0, 1.0, -5.0},
  };
  std::vector<pdptw::RequestPair> pairs{{1, 2}};
  std::vector<pdptw::Vehicle> fleet{{1, 60.0, 1.0, 1.0}};
  return pdptw::Instance(std::move(vertices), std::move(pairs), std::move(fleet));
}

// Structurally valid random instance with no feasibility guarantee. Windows,
// service times and quantities are arbitrary; useful for schedule, load and
// serialization properties.
inline pdptw::Instance random_raw_instance(pdptw::Rng& rng, int max_pairs = 5) {
  const int pair_count = rng.uniform_int(1, max_pairs);
  const int k = rng.uniform_int(1, pair_count);

  std::vector<pdptw::Vertex> vertices;
  pdptw::Vertex depot;
  depot.id = 0;
  depot.position = {rng.uniform_real(0.0, 100.0), rng.uniform_real(0.0, 100.0)};
  depot.window_close = rng.uniform_real(500.0, 2000.0);
  vertices.push_back(depot);

  std::vector<pdptw::RequestPair> pairs;
  for (int p = 0; p < pair_count; ++p) {
    const double quantity = rng.uniform_int(1, 20);
    for (int side = 0; side < 2; ++side) {
      pdptw::Vertex v;
      v.id = 2 * p + 1 + side;
      v.position = {rng.uniform_real(0.0, 100.0), rng.uniform_real(0.0, 100.0)};
      v.window_open = rng.uniform_real(0.0, 250.0);
      v.window_close = v.window_open + rng.uniform_real(0.0, 250.0);
      v.service_time = rng.uniform_real(0.0, 5.0);
      v.quantity = side == 0 ? quantity : -quantity;
      vertices.push_back(v);
    }
    pairs.push_back({2 * p + 1, 2 * p + 2});
  }

  std::vector<pdptw::Vehicle> fleet;
  for (int v = 0; v < k; ++v) {
    pdptw::Vehicle vehicle;
    vehicle.id = v + 1;
    vehicle.capacity = rng.uniform_int(20, 80);
    vehicle.cost_rate = rng.uniform_real(0.0, 5.0);
    vehicle.speed = 1.0;
    fleet.push_back(vehicle);
  }
  return pdptw::Instance(std::move(vertices), std::move(pairs), std::move(fleet));
}

// Random permutation of the instance request vertices, no precedence fixing.
inline pdptw::Chromosome random_chromosome(const pdptw::Instance& instance, pdptw::Rng& rng) {
  pdptw::Chromosome c;
  c.genes.resize(static_cast<std::size_t>(instance.n_prime()));
  std::iota(c.genes.begin(), c.genes.end(), 1);
  rng.shuffle(c.genes);
  return c;
}

// Random composition of N' into fleet-size nonnegative parts.
inline pdptw::VehicleSplit random_split(const pdptw::Instance& instance, pdptw::Rng& rng) {
  pdptw::VehicleSplit split;
  split.counts.assign(static_cast<std::size_t>(instance.fleet_size()), 0);
  for (int i = 0; i < instance.n_prime(); ++i) {
    split.counts[static_cast<std::size_t>(
        rng.uniform_int(0, instance.fleet_size() - 1))] += 1;
  }
  return split;
}

// Test-local load simulator, independent of the library's schedulers: the
// running loads of one gene segment in visit order.
inline std::vector<double> simulate_loads(const std::vector<int>& genes,
                                          const pdptw::Instance& instance) {
  std::vector<double> loads;
  double load = 0.0;
  for (int id : genes) {
    load += instance.vertex(id).quantity;
    loads.push_back(load);
  }
  return loads;
}

// Independent exhaustive optimum: every permutation of the request vertices
// times every composition of N' into fleet-size parts, decoded and validated
// through the model layer. Deliberately structured differently from the
// oracle module's assignment-based enumeration.
struct BruteBest {
  bool feasible = false;
  double cost = 0.0;
};

inline void enumerate_compositions(int total, int parts, std::vector<int>& current,
                                   std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    current.push_back(head);
    enumerate_compositions(total - head, parts - 1, current, out);
    current.pop_back();
  }
}

inline BruteBest brute_force_best(const pdptw::Instance& instance, pdptw::PairingMode mode) {
  std::vector<int> perm(static_cast<std::size_t>(instance.n_prime()));
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<std::vector<int>> compositions;
  std::vector<int> scratch;
  enumerate_compositions(instance.n_prime(), instance.fleet_size(), scratch, compositions);

  pdptw::DistanceMatrix matrix(instance);
  BruteBest best;
  do {
    pdptw::Chromosome c;
    c.genes = perm;
    for (const std::vector<int>& counts : compositions) {
      pdptw::VehicleSplit split;
      split.counts = counts;
      pdptw::Solution solution = pdptw::make_solution(
          pdptw::split_chromosome(c, split).routes, instance, matrix, mode);
      if (!solution.feasible) continue;
      if (!best.feasible || solution.total_cost < best.cost) {
        best.feasible = true;
        best.cost = solution.total_cost;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace testutil
