#include "pdptw/validate.hpp"

#include <string>
#include <vector>

namespace pdptw {

namespace {

Violation make_violation(ViolationKind kind, int vehicle, int vertex, std::string detail) {
  Violation v;
  v.kind = kind;
  v.vehicle = vehicle;
  v.vertex = vertex;
  v.detail = std::move(detail);
  return v;
}

bool route_ids_in_range(const std::vector<int>& route, const Instance& instance) {
  for (int id : route) {
    if (id < 0 || id > instance.n_prime()) return false;
  }
  return true;
}

}  // namespace

std::vector<Violation> check_capacity(const RouteSchedule& schedule, const Vehicle& vehicle) {
  std::vector<Violation> out;
  for (const Stop& stop : schedule.stops) {
    if (stop.load_after < 0.0) {
      out.push_back(make_violation(ViolationKind::capacity, vehicle.id, stop.vertex,
                                   "negative load after service"));
    } else if (stop.load_after > vehicle.capacity) {
      out.push_back(make_violation(ViolationKind::capacity, vehicle.id, stop.vertex,
                                   "load exceeds capacity"));
    }
  }
  return out;
}

std::vector<Violation> check_time_windows(const RouteSchedule& schedule,
                                          const Instance& instance, int vehicle_id) {
  std::vector<Violation> out;
  for (const Stop& stop : schedule.stops) {
    if (stop.arrival > instance.vertex(stop.vertex).window_close) {
      out.push_back(make_violation(ViolationKind::time_window, vehicle_id, stop.vertex,
                                   "arrival after window close"));
    }
  }
  if (!schedule.stops.empty() &&
      schedule.return_arrival > instance.vertex(0).window_close) {
    out.push_back(make_violation(ViolationKind::time_window, vehicle_id, 0,
                                 "depot return after window close"));
  }
  return out;
}

std::vector<Violation> check_precedence(const Solution& solution, const Instance& instance,
                                        PairingMode mode) {
  const std::size_t n = instance.vertices().size();
  std::vector<int> route_of(n, -1);
  std::vector<int> seq_of(n, -1);
  std::vector<double> departure_of(n, 0.0);

  int seq = 0;
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    for (int id : solution.routes[k]) {
      if (id <= 0 || id > instance.n_prime()) continue;
      if (route_of[static_cast<std::size_t>(id)] == -1) {  // first occurrence wins
        route_of[static_cast<std::size_t>(id)] = static_cast<int>(k);
        seq_of[static_cast<std::size_t>(id)] = seq;
      }
      ++seq;
    }
    if (k < solution.schedules.size()) {
      for (const Stop& stop : solution.schedules[k].stops) {
        if (stop.vertex > 0 && stop.vertex <= instance.n_prime() &&
            route_of[static_cast<std::size_t>(stop.vertex)] == static_cast<int>(k)) {
          departure_of[static_cast<std::size_t>(stop.vertex)] = stop.departure;
        }
      }
    }
  }

  std::vector<Violation> out;
  for (const RequestPair& pair : instance.pairs()) {
    const std::size_t s = static_cast<std::size_t>(pair.supplier);
    const std::size_t c = static_cast<std::size_t>(pair.customer);
    const int vehicle_hint =
        route_of[s] >= 0 ? route_of[s] + 1 : (route_of[c] >= 0 ? route_of[c] + 1 : 0);
    if (route_of[s] == -1 || route_of[c] == -1) {
      out.push_back(make_violation(ViolationKind::precedence, vehicle_hint, pair.customer,
                                   "pair member unvisited"));
      continue;
    }
    if (mode == PairingMode::same_vehicle) {
      if (route_of[s] != route_of[c]) {
        out.push_back(make_violation(ViolationKind::precedence, vehicle_hint, pair.customer,
                                     "pair split across vehicles"));
      } else if (seq_of[s] > seq_of[c]) {
        out.push_back(make_violation(ViolationKind::precedence, route_of[s] + 1, pair.customer,
                                     "customer served before supplier"));
      }
    } else {
      if (departure_of[s] > departure_of[c]) {
        out.push_back(make_violation(ViolationKind::precedence, vehicle_hint, pair.customer,
                                     "supplier departs after customer"));
      }
    }
  }
  return out;
}

ValidationReport validate_solution(const Solution& solution, const Instance& instance,
                                   PairingMode mode) {
  ValidationReport report;
  auto add = [&report](Violation v) { report.violations.push_back(std::move(v)); };

  if (static_cast<int>(solution.routes.size()) != instance.fleet_size()) {
    add(make_violation(ViolationKind::structure, 0, -1,
                       "route count does not match the fleet size"));
  }

  std::vector<int> visits(instance.vertices().size(), 0);
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    const std::vector<int>& route = solution.routes[k];
    const int vehicle_id = static_cast<int>(k) + 1;
    if (route.size() < 2 || route.front() != 0 || route.back() != 0) {
      add(make_violation(ViolationKind::structure, vehicle_id, -1,
                         "route does not start and end at the depot"));
    }
    for (std::size_t i = 0; i < route.size(); ++i) {
      const int id = route[i];
      if (id < 0 || id > instance.n_prime()) {
        add(make_violation(ViolationKind::structure, vehicle_id, id, "unknown vertex id"));
        continue;
      }
      if (id == 0) {
        if (i != 0 && i + 1 != route.size()) {
          add(make_violation(ViolationKind::structure, vehicle_id, 0,
                             "depot visited in the middle of a route"));
        }
        continue;
      }
      ++visits[static_cast<std::size_t>(id)];
    }
  }
  for (int id = 1; id <= instance.n_prime(); ++id) {
    const int count = visits[static_cast<std::size_t>(id)];
    if (count == 0) {
      add(make_violation(ViolationKind::structure, 0, id, "vertex never visited"));
    } else if (count > 1) {
      add(make_violation(ViolationKind::structure, 0, id, "vertex visited more than once"));
    }
  }

  // Capacity and windows need schedules; compute them here when the caller
  // passed raw routes. Routes with unknown ids are skipped (already flagged).
  const std::vector<RouteSchedule>* schedules = &solution.schedules;
  std::vector<RouteSchedule> local;
  Solution scheduled;
  if (solution.schedules.size() != solution.routes.size()) {
    DistanceMatrix matrix(instance);
    local.reserve(solution.routes.size());
    for (std::size_t k = 0; k < solution.routes.size(); ++k) {
      if (static_cast<int>(k) < instance.fleet_size() &&
          route_ids_in_range(solution.routes[k], instance)) {
        local.push_back(detail::schedule_sequence(solution.routes[k], instance.fleet()[k],
                                                  instance, matrix));
      } else {
        local.push_back(RouteSchedule{});
      }
    }
    schedules = &local;
  }

  for (std::size_t k = 0; k < solution.routes.size() && k < schedules->size(); ++k) {
    if (static_cast<int>(k) >= instance.fleet_size()) break;
    const Vehicle& vehicle = instance.fleet()[k];
    for (Violation& v : check_capacity((*schedules)[k], vehicle)) add(std::move(v));
    for (Violation& v : check_time_windows((*schedules)[k], instance, vehicle.id)) {
      add(std::move(v));
    }
  }

  if (schedules == &local) {
    scheduled.routes = solution.routes;
    scheduled.schedules = local;
    for (Violation& v : check_precedence(scheduled, instance, mode)) add(std::move(v));
  } else {
    for (Violation& v : check_precedence(solution, instance, mode)) add(std::move(v));
  }
  return report;
}

}  // namespace pdptw
