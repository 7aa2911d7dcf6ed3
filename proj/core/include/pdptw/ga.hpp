#pragma once

#include <cstdint>
#include <vector>

#include "pdptw/chromosome.hpp"
#include "pdptw/rng.hpp"
#include "pdptw/solution.hpp"
#include "pdptw/types.hpp"

namespace pdptw {

struct GaConfig {
  int population_size = 50;
  int generations = 100;
  double crossover_rate = 0.6;
  double mutation_rate = 0.3;
  double copy_rate = 0.1;  // the three rates must sum to 1
  double tardiness_penalty = 1000.0;
  double infeasibility_penalty = 100000.0;
  std::uint64_t rng_seed = 1;
  PairingMode pairing = PairingMode::same_vehicle;

  void validate() const;  // throws std::invalid_argument
};

struct GaResult {
  Solution best_solution;
  double best_fitness = 0.0;
  std::vector<double> history;  // best fitness seen after each generation; non-increasing
  long long evaluations = 0;    // distinct (chromosome, split) evaluations performed
};

// n random permutations of the non-depot ids, each precedence-corrected.
std::vector<Chromosome> generate_p_node(const Instance& instance, int n, Rng& rng);

// n compositions of N' into fleet-size nonnegative parts, sampled uniformly
// over all compositions (zeros allowed).
std::vector<VehicleSplit> generate_p_vehicle(const Instance& instance, int n, Rng& rng);

// One-point recomposition of two splits, renormalized to keep the total.
VehicleSplit split_crossover(const VehicleSplit& a, const VehicleSplit& b, int point, Rng& rng);
// Moves one unit between two vehicles.
VehicleSplit split_mutation(VehicleSplit s, Rng& rng);

// Capacity-repairs the chromosome against the split, decodes, schedules and
// scores: cost + tardiness_penalty * tardiness + infeasibility_penalty *
// (capacity + precedence violations remaining after repair). Lower is better.
double fitness(const Chromosome& c, const VehicleSplit& split, const Instance& instance,
               const GaConfig& config);

// Dual-population evolution loop: per generation both populations are
// expanded to 2n by crossover / mutation / copy, node individuals are
// precedence-corrected, all 4n^2 (chromosome, split) combinations are scored
// and the best n of each population survive by marginal best fitness. The
// best combination ever seen is carried into every later generation.
GaResult evolve(const Instance& instance, const GaConfig& config);

}  // namespace pdptw
