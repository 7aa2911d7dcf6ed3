#pragma once

#include <vector>

#include "pdptw/rng.hpp"
#include "pdptw/solution.hpp"
#include "pdptw/types.hpp"

namespace pdptw {

// Permutation of all non-depot vertex ids; depot delimiters are implicit.
struct Chromosome {
  std::vector<int> genes;
  bool operator==(const Chromosome&) const = default;
};

// Per-vehicle node counts partitioning a chromosome into consecutive routes.
// Zero counts are allowed and mean an unused vehicle.
struct VehicleSplit {
  std::vector<int> counts;
  bool operator==(const VehicleSplit&) const = default;

  int total() const;
};

bool is_permutation_of_instance(const Chromosome& c, const Instance& instance);

// Keeps the first `point` genes of a, then fills the remaining positions with
// the genes absent from that prefix in their order of appearance in b. The
// child is always a valid permutation. Throws std::invalid_argument when the
// parents are not permutations of the same ids or the point is out of range.
Chromosome one_point_crossover(const Chromosome& a, const Chromosome& b, int point);
// Same, with the point drawn uniformly from 1..N'-1.
Chromosome one_point_crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

// Exchanges the genes at positions i and j.
Chromosome swap_mutation(Chromosome c, int i, int j);

// Left-to-right scan: whenever a customer is found whose supplier lies later
// in the sequence, the supplier is pulled to immediately before it. The
// result has every supplier before its paired customer; the relative order of
// all other genes is preserved. Idempotent.
Chromosome correct_precedence(Chromosome c, const Instance& instance);

// Per vehicle segment, simulates the running load. When appending the next
// vertex would exceed the vehicle capacity, the pending delivery giving the
// largest load reduction (ties: earliest supplier position) is pulled to
// immediately before the overload point. Unfixable overloads are left in
// place for the fitness penalty. Never breaks supplier-before-customer order.
Chromosome correct_capacity(Chromosome c, const VehicleSplit& split, const Instance& instance);

// Vehicle k receives the next counts[k] genes in chromosome order, wrapped
// with the depot at both ends; zero-count vehicles get the empty route [0,0].
// Returns routes only; schedules and totals are left unfilled.
Solution split_chromosome(const Chromosome& c, const VehicleSplit& split);

}  // namespace pdptw
