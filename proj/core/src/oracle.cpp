#include "pdptw/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pdptw/matrix.hpp"
#include "pdptw/schedule.hpp"
#include "pdptw/validate.hpp"

namespace pdptw {

namespace {

struct RouteCandidates {
  // Cheapest feasible ordering, ties broken by lexicographic order.
  bool any_feasible = false;
  double best_cost = 0.0;
  std::vector<int> best_seq;
  long long valid = 0;     // orderings whose schedules were evaluated
  long long feasible = 0;  // of those, fully feasible ones
};

bool schedule_is_feasible(const RouteSchedule& schedule, const Vehicle& vehicle,
                          const Instance& instance) {
  return check_capacity(schedule, vehicle).empty() &&
         check_time_windows(schedule, instance, vehicle.id).empty();
}

std::vector<int> wrap_depot(const std::vector<int>& seq) {
  std::vector<int> route;
  route.reserve(seq.size() + 2);
  route.push_back(0);
  route.insert(route.end(), seq.begin(), seq.end());
  route.push_back(0);
  return route;
}

// In same-vehicle mode every pair in the set is complete, so an ordering is
// admissible iff each supplier appears before its customer.
bool precedence_ok(const std::vector<int>& seq, const Instance& instance) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!instance.is_customer(seq[i])) continue;
    const int supplier = instance.partner_of(seq[i]);
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (seq[j] == supplier) {
        seen = true;
        break;
      }
    }
    if (!seen) return false;
  }
  return true;
}

RouteCandidates enumerate_route(std::vector<int> vertices, const Vehicle& vehicle,
                                const Instance& instance, const DistanceMatrix& matrix) {
  RouteCandidates result;
  std::sort(vertices.begin(), vertices.end());
  if (vertices.empty()) {
    result.any_feasible = true;
    result.valid = 1;
    result.feasible = 1;
    return result;
  }
  do {
    if (!precedence_ok(vertices, instance)) continue;
    ++result.valid;
    const std::vector<int> route = wrap_depot(vertices);
    const RouteSchedule schedule = detail::schedule_sequence(route, vehicle, instance, matrix);
    if (!schedule_is_feasible(schedule, vehicle, instance)) continue;
    ++result.feasible;
    const double cost = vehicle.cost_rate * schedule.distance;
    if (!result.any_feasible || cost < result.best_cost) {
      result.any_feasible = true;
      result.best_cost = cost;
      result.best_seq = vertices;
    }
  } while (std::next_permutation(vertices.begin(), vertices.end()));
  return result;
}

OracleResult solve_same_vehicle(const Instance& instance, const DistanceMatrix& matrix) {
  const int pair_count = static_cast<int>(instance.pairs().size());
  const int k = instance.fleet_size();

  OracleResult result;
  bool have_best = false;
  double best_cost = 0.0;
  std::vector<std::vector<int>> best_routes;

  std::vector<int> assignment(static_cast<std::size_t>(pair_count), 0);
  while (true) {
    std::vector<std::vector<int>> per_vehicle(static_cast<std::size_t>(k));
    for (int p = 0; p < pair_count; ++p) {
      const RequestPair& pair = instance.pairs()[static_cast<std::size_t>(p)];
      auto& vertices = per_vehicle[static_cast<std::size_t>(assignment[static_cast<std::size_t>(p)])];
      vertices.push_back(pair.supplier);
      vertices.push_back(pair.customer);
    }

    long long combos = 1;
    long long feasible_combos = 1;
    bool all_feasible = true;
    double cost = 0.0;
    std::vector<std::vector<int>> routes;
    routes.reserve(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
      const RouteCandidates candidates = enumerate_route(
          per_vehicle[static_cast<std::size_t>(v)], instance.fleet()[static_cast<std::size_t>(v)],
          instance, matrix);
      combos *= candidates.valid;
      feasible_combos *= candidates.feasible;
      if (!candidates.any_feasible) {
        all_feasible = false;
      } else {
        cost += candidates.best_cost;
        routes.push_back(wrap_depot(candidates.best_seq));
      }
    }
    result.explored += combos;
    result.feasible_count += feasible_combos;

    if (all_feasible &&
        (!have_best || cost < best_cost || (cost == best_cost && routes < best_routes))) {
      have_best = true;
      best_cost = cost;
      best_routes = routes;
    }

    // Odometer over pair-to-vehicle digits.
    int digit = pair_count - 1;
    while (digit >= 0) {
      auto& d = assignment[static_cast<std::size_t>(digit)];
      if (++d < k) break;
      d = 0;
      --digit;
    }
    if (digit < 0) break;
  }

  result.feasible = have_best;
  if (have_best) {
    result.optimal_cost = best_cost;
    result.optimal_solution =
        make_solution(std::move(best_routes), instance, matrix, PairingMode::same_vehicle);
  }
  return result;
}

struct Ordering {
  std::vector<int> seq;
  double cost = 0.0;
  bool feasible = false;             // capacity + windows
  std::vector<double> departure_of;  // indexed by vertex id, own vertices only
};

OracleResult solve_cross_vehicle(const Instance& instance, const DistanceMatrix& matrix) {
  const int n_prime = instance.n_prime();
  const int k = instance.fleet_size();
  const std::size_t n_vertices = instance.vertices().size();

  OracleResult result;
  bool have_best = false;
  double best_cost = 0.0;
  std::vector<std::vector<int>> best_routes;

  std::vector<int> assignment(static_cast<std::size_t>(n_prime), 0);
  while (true) {
    std::vector<std::vector<Ordering>> orderings(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
      std::vector<int> vertices;
      for (int id = 1; id <= n_prime; ++id) {
        if (assignment[static_cast<std::size_t>(id - 1)] == v) vertices.push_back(id);
      }
      const Vehicle& vehicle = instance.fleet()[static_cast<std::size_t>(v)];
      auto& list = orderings[static_cast<std::size_t>(v)];
      if (vertices.empty()) {
        Ordering empty;
        empty.feasible = true;
        empty.departure_of.assign(n_vertices, 0.0);
        list.push_back(std::move(empty));
        continue;
      }
      std::sort(vertices.begin(), vertices.end());
      do {
        Ordering ordering;
        ordering.seq = vertices;
        const RouteSchedule schedule =
            detail::schedule_sequence(wrap_depot(vertices), vehicle, instance, matrix);
        ordering.cost = vehicle.cost_rate * schedule.distance;
        ordering.feasible = schedule_is_feasible(schedule, vehicle, instance);
        ordering.departure_of.assign(n_vertices, 0.0);
        for (const Stop& stop : schedule.stops) {
          ordering.departure_of[static_cast<std::size_t>(stop.vertex)] = stop.departure;
        }
        list.push_back(std::move(ordering));
      } while (std::next_permutation(vertices.begin(), vertices.end()));
    }

    // Walk the cross product of per-vehicle orderings.
    std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
    while (true) {
      ++result.explored;
      bool feasible = true;
      double cost = 0.0;
      for (int v = 0; v < k && feasible; ++v) {
        const Ordering& o =
            orderings[static_cast<std::size_t>(v)][choice[static_cast<std::size_t>(v)]];
        feasible = o.feasible;
        cost += o.cost;
      }
      if (feasible) {
        for (const RequestPair& pair : instance.pairs()) {
          const int sv = assignment[static_cast<std::size_t>(pair.supplier - 1)];
          const int cv = assignment[static_cast<std::size_t>(pair.customer - 1)];
          const double ds =
              orderings[static_cast<std::size_t>(sv)][choice[static_cast<std::size_t>(sv)]]
                  .departure_of[static_cast<std::size_t>(pair.supplier)];
          const double dc =
              orderings[static_cast<std::size_t>(cv)][choice[static_cast<std::size_t>(cv)]]
                  .departure_of[static_cast<std::size_t>(pair.customer)];
          if (ds > dc) {
            feasible = false;
            break;
          }
        }
      }
      if (feasible) {
        ++result.feasible_count;
        if (!have_best || cost < best_cost) {
          have_best = true;
          best_cost = cost;
          best_routes.clear();
          for (int v = 0; v < k; ++v) {
            best_routes.push_back(wrap_depot(
                orderings[static_cast<std::size_t>(v)][choice[static_cast<std::size_t>(v)]].seq));
          }
        } else if (cost == best_cost) {
          std::vector<std::vector<int>> routes;
          routes.reserve(static_cast<std::size_t>(k));
          for (int v = 0; v < k; ++v) {
            routes.push_back(wrap_depot(
                orderings[static_cast<std::size_t>(v)][choice[static_cast<std::size_t>(v)]].seq));
          }
          if (routes < best_routes) best_routes = std::move(routes);
        }
      }

      int digit = k - 1;
      while (digit >= 0) {
        auto& c = choice[static_cast<std::size_t>(digit)];
        if (++c < orderings[static_cast<std::size_t>(digit)].size()) break;
        c = 0;
        --digit;
      }
      if (digit < 0) break;
    }

    int digit = n_prime - 1;
    while (digit >= 0) {
      auto& d = assignment[static_cast<std::size_t>(digit)];
      if (++d < k) break;
      d = 0;
      --digit;
    }
    if (digit < 0) break;
  }

  result.feasible = have_best;
  if (have_best) {
    result.optimal_cost = best_cost;
    result.optimal_solution =
        make_solution(std::move(best_routes), instance, matrix, PairingMode::cross_vehicle);
  }
  return result;
}

}  // namespace

OracleResult exact_solve(const Instance& instance, PairingMode mode, int limit) {
  if (instance.n_prime() > limit) {
    throw OracleLimitError("instance has " + std::to_string(instance.n_prime()) +
                           " request vertices, more than the enumeration limit of " +
                           std::to_string(limit));
  }
  DistanceMatrix matrix(instance);
  if (instance.n_prime() == 0) {
    OracleResult result;
    result.feasible = true;
    result.optimal_cost = 0.0;
    result.explored = 1;
    result.feasible_count = 1;
    result.optimal_solution = make_solution(
        std::vector<std::vector<int>>(static_cast<std::size_t>(instance.fleet_size()),
                                      std::vector<int>{0, 0}),
        instance, matrix, mode);
    return result;
  }
  return mode == PairingMode::same_vehicle ? solve_same_vehicle(instance, matrix)
                                           : solve_cross_vehicle(instance, matrix);
}

}  // namespace pdptw
