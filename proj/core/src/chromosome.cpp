#include "pdptw/chromosome.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pdptw {

int VehicleSplit::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

bool is_permutation_of_instance(const Chromosome& c, const Instance& instance) {
  const int n_prime = instance.n_prime();
  if (static_cast<int>(c.genes.size()) != n_prime) return false;
  std::vector<char> seen(static_cast<std::size_t>(n_prime) + 1, 0);
  for (int id : c.genes) {
    if (id <= 0 || id > n_prime || seen[static_cast<std::size_t>(id)]) return false;
    seen[static_cast<std::size_t>(id)] = 1;
  }
  return true;
}

Chromosome one_point_crossover(const Chromosome& a, const Chromosome& b, int point) {
  const std::size_t n = a.genes.size();
  if (b.genes.size() != n) {
    throw std::invalid_argument("crossover parents differ in length");
  }
  if (point < 0 || static_cast<std::size_t>(point) > n) {
    throw std::invalid_argument("crossover point out of range");
  }
  {
    std::vector<int> sa = a.genes;
    std::vector<int> sb = b.genes;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      throw std::invalid_argument("crossover parents are not permutations of the same ids");
    }
  }

  Chromosome child;
  child.genes.assign(a.genes.begin(), a.genes.begin() + point);
  const int max_id = a.genes.empty() ? 0 : *std::max_element(a.genes.begin(), a.genes.end());
  std::vector<char> in_prefix(static_cast<std::size_t>(max_id) + 1, 0);
  for (int id : child.genes) in_prefix[static_cast<std::size_t>(id)] = 1;
  for (int id : b.genes) {
    if (!in_prefix[static_cast<std::size_t>(id)]) child.genes.push_back(id);
  }
  return child;
}

Chromosome one_point_crossover(const Chromosome& a, const Chromosome& b, Rng& rng) {
  const int n = static_cast<int>(a.genes.size());
  const int point = n >= 2 ? rng.uniform_int(1, n - 1) : n;
  return one_point_crossover(a, b, point);
}

Chromosome swap_mutation(Chromosome c, int i, int j) {
  const int n = static_cast<int>(c.genes.size());
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::invalid_argument("mutation position out of range");
  }
  std::swap(c.genes[static_cast<std::size_t>(i)], c.genes[static_cast<std::size_t>(j)]);
  return c;
}

Chromosome correct_precedence(Chromosome c, const Instance& instance) {
  std::vector<int>& g = c.genes;
  std::size_t i = 0;
  while (i < g.size()) {
    const int id = g[i];
    if (instance.is_customer(id)) {
      const int supplier = instance.partner_of(id);
      const auto it = std::find(g.begin() + static_cast<std::ptrdiff_t>(i) + 1, g.end(), supplier);
      if (it != g.end()) {
        g.erase(it);
        g.insert(g.begin() + static_cast<std::ptrdiff_t>(i), supplier);
        continue;  // re-examine the inserted supplier's slot
      }
    }
    ++i;
  }
  return c;
}

Chromosome correct_capacity(Chromosome c, const VehicleSplit& split, const Instance& instance) {
  if (split.total() != static_cast<int>(c.genes.size())) {
    throw std::invalid_argument("split counts do not sum to the chromosome length");
  }
  if (static_cast<int>(split.counts.size()) > instance.fleet_size()) {
    throw std::invalid_argument("split has more parts than the fleet has vehicles");
  }
  std::vector<int>& g = c.genes;
  std::size_t seg_begin = 0;
  for (std::size_t k = 0; k < split.counts.size(); ++k) {
    const std::size_t seg_end = seg_begin + static_cast<std::size_t>(split.counts[k]);
    const double capacity = instance.fleet()[k].capacity;

    double load_before = 0.0;
    std::size_t i = seg_begin;
    while (i < seg_end) {
      const double load = load_before + instance.vertex(g[i]).quantity;
      if (load > capacity) {
        // Pending delivery: a customer later in this segment whose supplier
        // already sits before the overload point.
        std::size_t best = seg_end;
        double best_drop = 0.0;
        std::size_t best_supplier_pos = seg_end;
        for (std::size_t j = i + 1; j < seg_end; ++j) {
          const int candidate = g[j];
          if (!instance.is_customer(candidate)) continue;
          const int supplier = instance.partner_of(candidate);
          const auto sup_it =
              std::find(g.begin() + static_cast<std::ptrdiff_t>(seg_begin),
                        g.begin() + static_cast<std::ptrdiff_t>(i), supplier);
          if (sup_it == g.begin() + static_cast<std::ptrdiff_t>(i)) continue;
          const std::size_t supplier_pos =
              static_cast<std::size_t>(sup_it - g.begin());
          const double drop = -instance.vertex(candidate).quantity;
          if (drop > best_drop || (drop == best_drop && supplier_pos < best_supplier_pos)) {
            best = j;
            best_drop = drop;
            best_supplier_pos = supplier_pos;
          }
        }
        if (best != seg_end) {
          // Pull the delivery to immediately before the overload point and
          // re-examine the slot.
          std::rotate(g.begin() + static_cast<std::ptrdiff_t>(i),
                      g.begin() + static_cast<std::ptrdiff_t>(best),
                      g.begin() + static_cast<std::ptrdiff_t>(best) + 1);
          continue;
        }
        // No pending delivery can discharge the load; the overload stays and
        // fitness charges it.
      }
      load_before = load;
      ++i;
    }
    seg_begin = seg_end;
  }
  return c;
}

Solution split_chromosome(const Chromosome& c, const VehicleSplit& split) {
  if (split.total() != static_cast<int>(c.genes.size())) {
    throw std::invalid_argument("split counts do not sum to the chromosome length");
  }
  Solution solution;
  solution.routes.reserve(split.counts.size());
  auto it = c.genes.begin();
  for (int count : split.counts) {
    if (count < 0) throw std::invalid_argument("split contains a negative count");
    std::vector<int> route;
    route.reserve(static_cast<std::size_t>(count) + 2);
    route.push_back(0);
    route.insert(route.end(), it, it + count);
    it += count;
    route.push_back(0);
    solution.routes.push_back(std::move(route));
  }
  return solution;
}

}  // namespace pdptw
