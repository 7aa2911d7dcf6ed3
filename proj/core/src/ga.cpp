#include "pdptw/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "pdptw/matrix.hpp"
#include "pdptw/validate.hpp"

namespace pdptw {

void GaConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("population_size must be at least 2");
  if (generations < 1) throw std::invalid_argument("generations must be at least 1");
  for (double rate : {crossover_rate, mutation_rate, copy_rate}) {
    if (rate < 0.0 || rate > 1.0) {
      throw std::invalid_argument("operator rates must lie in [0, 1]");
    }
  }
  if (std::abs(crossover_rate + mutation_rate + copy_rate - 1.0) > 1e-9) {
    throw std::invalid_argument("crossover, mutation and copy rates must sum to 1");
  }
  if (tardiness_penalty < 0.0 || infeasibility_penalty < 0.0) {
    throw std::invalid_argument("penalty weights must be nonnegative");
  }
}

std::vector<Chromosome> generate_p_node(const Instance& instance, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("population size must be at least 1");
  std::vector<int> base(static_cast<std::size_t>(instance.n_prime()));
  std::iota(base.begin(), base.end(), 1);

  std::vector<Chromosome> population;
  population.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Chromosome c;
    c.genes = base;
    rng.shuffle(c.genes);
    population.push_back(correct_precedence(std::move(c), instance));
  }
  return population;
}

std::vector<VehicleSplit> generate_p_vehicle(const Instance& instance, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("population size must be at least 1");
  const int n_prime = instance.n_prime();
  const int k = instance.fleet_size();

  std::vector<VehicleSplit> population;
  population.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    VehicleSplit split;
    if (k == 1) {
      split.counts = {n_prime};
    } else {
      // Stars and bars: a composition of N' into k parts corresponds to a
      // size k-1 subset of slot positions 1..N'+k-1.
      std::vector<int> slots(static_cast<std::size_t>(n_prime + k - 1));
      std::iota(slots.begin(), slots.end(), 1);
      for (int b = 0; b < k - 1; ++b) {
        const int swap_with = rng.uniform_int(b, static_cast<int>(slots.size()) - 1);
        std::swap(slots[static_cast<std::size_t>(b)], slots[static_cast<std::size_t>(swap_with)]);
      }
      std::vector<int> bars(slots.begin(), slots.begin() + (k - 1));
      std::sort(bars.begin(), bars.end());
      split.counts.reserve(static_cast<std::size_t>(k));
      int prev = 0;
      for (int bar : bars) {
        split.counts.push_back(bar - prev - 1);
        prev = bar;
      }
      split.counts.push_back(n_prime + k - 1 - prev);
    }
    population.push_back(std::move(split));
  }
  return population;
}

VehicleSplit split_crossover(const VehicleSplit& a, const VehicleSplit& b, int point, Rng& rng) {
  const int k = static_cast<int>(a.counts.size());
  if (static_cast<int>(b.counts.size()) != k) {
    throw std::invalid_argument("split crossover parents differ in length");
  }
  if (k < 2 || point < 1 || point >= k) return a;

  const int target = a.total();
  VehicleSplit child;
  child.counts.assign(a.counts.begin(), a.counts.begin() + point);
  child.counts.insert(child.counts.end(), b.counts.begin() + point, b.counts.end());

  int diff = target - child.total();
  while (diff > 0) {
    child.counts[static_cast<std::size_t>(rng.uniform_int(0, k - 1))] += 1;
    --diff;
  }
  while (diff < 0) {
    const int idx = rng.uniform_int(0, k - 1);
    if (child.counts[static_cast<std::size_t>(idx)] > 0) {
      child.counts[static_cast<std::size_t>(idx)] -= 1;
      ++diff;
    }
  }
  return child;
}

VehicleSplit split_mutation(VehicleSplit s, Rng& rng) {
  const int k = static_cast<int>(s.counts.size());
  if (k < 2 || s.total() == 0) return s;
  int from;
  do {
    from = rng.uniform_int(0, k - 1);
  } while (s.counts[static_cast<std::size_t>(from)] == 0);
  int to = rng.uniform_int(0, k - 2);
  if (to >= from) ++to;
  s.counts[static_cast<std::size_t>(from)] -= 1;
  s.counts[static_cast<std::size_t>(to)] += 1;
  return s;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Scores (chromosome, split) combinations against one instance. Reuses
// scratch buffers across calls; not thread-safe by design.
class Evaluator {
 public:
  Evaluator(const Instance& instance, const DistanceMatrix& matrix, const GaConfig& config)
      : instance_(instance),
        matrix_(matrix),
        config_(config),
        route_of_(instance.vertices().size(), -1),
        seq_of_(instance.vertices().size(), 0),
        departure_of_(instance.vertices().size(), 0.0) {}

  // Capacity-repairs c against the split, then decodes and scores it. When
  // repaired_out is non-null the repaired chromosome is stored there.
  double evaluate(const Chromosome& c, const VehicleSplit& split,
                  Chromosome* repaired_out = nullptr) {
    Chromosome repaired = correct_capacity(c, split, instance_);
    const std::vector<int>& genes = repaired.genes;

    double cost = 0.0;
    double tardiness = 0.0;
    int capacity_violations = 0;

    std::size_t seg_begin = 0;
    for (std::size_t k = 0; k < split.counts.size(); ++k) {
      const std::size_t seg_end = seg_begin + static_cast<std::size_t>(split.counts[k]);
      const Vehicle& vehicle = instance_.fleet()[k];

      double distance = 0.0;
      double departure = 0.0;
      double load = 0.0;
      int prev = 0;
      for (std::size_t i = seg_begin; i < seg_end; ++i) {
        const int id = genes[i];
        const Vertex& v = instance_.vertex(id);
        const double leg = matrix_(prev, id);
        distance += leg;
        const double arrival = departure + travel_time(leg, vehicle);
        departure = std::max(arrival, v.window_open) + v.service_time;
        tardiness += std::max(0.0, arrival - v.window_close);
        load += v.quantity;
        if (load < 0.0 || load > vehicle.capacity) ++capacity_violations;
        route_of_[static_cast<std::size_t>(id)] = static_cast<int>(k);
        seq_of_[static_cast<std::size_t>(id)] = static_cast<int>(i);
        departure_of_[static_cast<std::size_t>(id)] = departure;
        prev = id;
      }
      const double leg = matrix_(prev, 0);
      distance += leg;
      const double return_arrival = departure + travel_time(leg, vehicle);
      tardiness += std::max(0.0, return_arrival - instance_.vertex(0).window_close);
      cost += vehicle.cost_rate * distance;
      seg_begin = seg_end;
    }

    int precedence_violations = 0;
    for (const RequestPair& pair : instance_.pairs()) {
      const std::size_t s = static_cast<std::size_t>(pair.supplier);
      const std::size_t c_idx = static_cast<std::size_t>(pair.customer);
      if (config_.pairing == PairingMode::same_vehicle) {
        if (route_of_[s] != route_of_[c_idx] || seq_of_[s] > seq_of_[c_idx]) {
          ++precedence_violations;
        }
      } else {
        if (departure_of_[s] > departure_of_[c_idx]) ++precedence_violations;
      }
    }

    if (repaired_out != nullptr) *repaired_out = std::move(repaired);
    return cost + config_.tardiness_penalty * tardiness +
           config_.infeasibility_penalty *
               static_cast<double>(capacity_violations + precedence_violations);
  }

 private:
  const Instance& instance_;
  const DistanceMatrix& matrix_;
  const GaConfig& config_;
  std::vector<int> route_of_;
  std::vector<int> seq_of_;
  std::vector<double> departure_of_;
};

enum class GaOp { crossover, mutation, copy };

GaOp pick_op(const GaConfig& config, Rng& rng) {
  const double r = rng.uniform_real(0.0, 1.0);
  if (r < config.crossover_rate) return GaOp::crossover;
  if (r < config.crossover_rate + config.mutation_rate) return GaOp::mutation;
  return GaOp::copy;
}

std::pair<int, int> pick_two_parents(int n, Rng& rng) {
  const int a = rng.uniform_int(0, n - 1);
  int b = rng.uniform_int(0, n - 2);
  if (b >= a) ++b;
  return {a, b};
}

std::vector<Chromosome> expand_nodes(const std::vector<Chromosome>& population, int target,
                                     const Instance& instance, const GaConfig& config,
                                     const Chromosome* elite, Rng& rng) {
  const int n = static_cast<int>(population.size());
  const int n_prime = instance.n_prime();
  std::vector<Chromosome> out;
  out.reserve(static_cast<std::size_t>(target));
  if (elite != nullptr) out.push_back(*elite);
  while (static_cast<int>(out.size()) < target) {
    Chromosome child;
    switch (pick_op(config, rng)) {
      case GaOp::crossover: {
        const auto [a, b] = pick_two_parents(n, rng);
        const int point = n_prime >= 2 ? rng.uniform_int(1, n_prime - 1) : n_prime;
        child = one_point_crossover(population[static_cast<std::size_t>(a)],
                                    population[static_cast<std::size_t>(b)], point);
        break;
      }
      case GaOp::mutation: {
        const int parent = rng.uniform_int(0, n - 1);
        const int i = rng.uniform_int(0, n_prime - 1);
        const int j = rng.uniform_int(0, n_prime - 1);
        child = swap_mutation(population[static_cast<std::size_t>(parent)], i, j);
        break;
      }
      case GaOp::copy: {
        child = population[static_cast<std::size_t>(rng.uniform_int(0, n - 1))];
        break;
      }
    }
    out.push_back(correct_precedence(std::move(child), instance));
  }
  return out;
}

std::vector<VehicleSplit> expand_splits(const std::vector<VehicleSplit>& population, int target,
                                        const GaConfig& config, const VehicleSplit* elite,
                                        Rng& rng) {
  const int n = static_cast<int>(population.size());
  const int k = population.empty() ? 0 : static_cast<int>(population.front().counts.size());
  std::vector<VehicleSplit> out;
  out.reserve(static_cast<std::size_t>(target));
  if (elite != nullptr) out.push_back(*elite);
  while (static_cast<int>(out.size()) < target) {
    switch (pick_op(config, rng)) {
      case GaOp::crossover: {
        const auto [a, b] = pick_two_parents(n, rng);
        const int point = k >= 2 ? rng.uniform_int(1, k - 1) : 1;
        out.push_back(split_crossover(population[static_cast<std::size_t>(a)],
                                      population[static_cast<std::size_t>(b)], point, rng));
        break;
      }
      case GaOp::mutation: {
        const int parent = rng.uniform_int(0, n - 1);
        out.push_back(split_mutation(population[static_cast<std::size_t>(parent)], rng));
        break;
      }
      case GaOp::copy: {
        out.push_back(population[static_cast<std::size_t>(rng.uniform_int(0, n - 1))]);
        break;
      }
    }
  }
  return out;
}

// Distinct individuals of the generation, with each individual mapped to its
// distinct index so duplicated combinations are scored once.
template <typename T>
std::pair<std::vector<const T*>, std::vector<int>> intern(
    const std::vector<T>& individuals, const std::vector<int>& (*key)(const T&)) {
  std::unordered_map<std::vector<int>, int, VecHash> ids;
  std::vector<const T*> distinct;
  std::vector<int> of(individuals.size(), 0);
  for (std::size_t i = 0; i < individuals.size(); ++i) {
    const auto [it, inserted] =
        ids.emplace(key(individuals[i]), static_cast<int>(distinct.size()));
    if (inserted) distinct.push_back(&individuals[i]);
    of[i] = it->second;
  }
  return {std::move(distinct), std::move(of)};
}

const std::vector<int>& chromosome_key(const Chromosome& c) { return c.genes; }
const std::vector<int>& split_key(const VehicleSplit& s) { return s.counts; }

}  // namespace

double fitness(const Chromosome& c, const VehicleSplit& split, const Instance& instance,
               const GaConfig& config) {
  if (!is_permutation_of_instance(c, instance)) {
    throw std::invalid_argument("chromosome is not a permutation of the instance vertices");
  }
  DistanceMatrix matrix(instance);
  Evaluator evaluator(instance, matrix, config);
  return evaluator.evaluate(c, split);
}

GaResult evolve(const Instance& instance, const GaConfig& config) {
  config.validate();
  const int n = config.population_size;
  const int doubled = 2 * n;
  Rng rng(config.rng_seed);
  DistanceMatrix matrix(instance);

  GaResult result;
  if (instance.n_prime() == 0) {
    std::vector<std::vector<int>> routes(static_cast<std::size_t>(instance.fleet_size()),
                                         std::vector<int>{0, 0});
    result.best_solution = make_solution(std::move(routes), instance, matrix, config.pairing);
    result.best_fitness = result.best_solution.total_cost;
    result.history.assign(static_cast<std::size_t>(config.generations), result.best_fitness);
    return result;
  }

  Evaluator evaluator(instance, matrix, config);
  std::vector<Chromosome> nodes = generate_p_node(instance, n, rng);
  std::vector<VehicleSplit> splits = generate_p_vehicle(instance, n, rng);

  bool have_elite = false;
  Chromosome elite_chromosome;
  VehicleSplit elite_split;
  double elite_fitness = std::numeric_limits<double>::infinity();

  for (int generation = 0; generation < config.generations; ++generation) {
    const std::vector<Chromosome> inter_nodes = expand_nodes(
        nodes, doubled, instance, config, have_elite ? &elite_chromosome : nullptr, rng);
    const std::vector<VehicleSplit> inter_splits =
        expand_splits(splits, doubled, config, have_elite ? &elite_split : nullptr, rng);

    const auto [distinct_nodes, node_id] = intern<Chromosome>(inter_nodes, chromosome_key);
    const auto [distinct_splits, split_id] = intern<VehicleSplit>(inter_splits, split_key);

    const std::size_t dn = distinct_nodes.size();
    const std::size_t ds = distinct_splits.size();
    std::vector<double> table(dn * ds, 0.0);
    for (std::size_t i = 0; i < dn; ++i) {
      for (std::size_t j = 0; j < ds; ++j) {
        table[i * ds + j] = evaluator.evaluate(*distinct_nodes[i], *distinct_splits[j]);
        ++result.evaluations;
      }
    }

    // Generation optimum over the full cross product, ties resolved by the
    // lowest combination index.
    int best_i = -1;
    int best_j = -1;
    double generation_best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < doubled; ++i) {
      for (int j = 0; j < doubled; ++j) {
        const double f = table[static_cast<std::size_t>(node_id[static_cast<std::size_t>(i)]) * ds +
                               static_cast<std::size_t>(split_id[static_cast<std::size_t>(j)])];
        if (f < generation_best) {
          generation_best = f;
          best_i = i;
          best_j = j;
        }
      }
    }

    if (!have_elite || generation_best < elite_fitness) {
      have_elite = true;
      elite_fitness = generation_best;
      elite_split = inter_splits[static_cast<std::size_t>(best_j)];
      // Store the repaired chromosome: repair is idempotent, so the elite's
      // fitness stays put when it is re-evaluated next generation.
      evaluator.evaluate(inter_nodes[static_cast<std::size_t>(best_i)], elite_split,
                         &elite_chromosome);
    }
    result.history.push_back(elite_fitness);

    // Marginal best fitness per individual, then rank truncation to size n.
    std::vector<double> node_marginal(static_cast<std::size_t>(doubled),
                                      std::numeric_limits<double>::infinity());
    std::vector<double> split_marginal(static_cast<std::size_t>(doubled),
                                       std::numeric_limits<double>::infinity());
    for (int i = 0; i < doubled; ++i) {
      for (int j = 0; j < doubled; ++j) {
        const double f = table[static_cast<std::size_t>(node_id[static_cast<std::size_t>(i)]) * ds +
                               static_cast<std::size_t>(split_id[static_cast<std::size_t>(j)])];
        node_marginal[static_cast<std::size_t>(i)] =
            std::min(node_marginal[static_cast<std::size_t>(i)], f);
        split_marginal[static_cast<std::size_t>(j)] =
            std::min(split_marginal[static_cast<std::size_t>(j)], f);
      }
    }
    const auto select = [doubled, n](const std::vector<double>& marginal) {
      std::vector<int> order(static_cast<std::size_t>(doubled));
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&marginal](int a, int b) {
        return marginal[static_cast<std::size_t>(a)] < marginal[static_cast<std::size_t>(b)];
      });
      order.resize(static_cast<std::size_t>(n));
      return order;
    };
    std::vector<Chromosome> next_nodes;
    next_nodes.reserve(static_cast<std::size_t>(n));
    for (int idx : select(node_marginal)) {
      next_nodes.push_back(inter_nodes[static_cast<std::size_t>(idx)]);
    }
    std::vector<VehicleSplit> next_splits;
    next_splits.reserve(static_cast<std::size_t>(n));
    for (int idx : select(split_marginal)) {
      next_splits.push_back(inter_splits[static_cast<std::size_t>(idx)]);
    }
    nodes = std::move(next_nodes);
    splits = std::move(next_splits);
  }

  result.best_fitness = elite_fitness;
  result.best_solution = make_solution(split_chromosome(elite_chromosome, elite_split).routes,
                                       instance, matrix, config.pairing);
  return result;
}

}  // namespace pdptw
