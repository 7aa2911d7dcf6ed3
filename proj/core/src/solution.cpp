#include "pdptw/solution.hpp"

#include <stdexcept>
#include <utility>

#include "pdptw/validate.hpp"

namespace pdptw {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::structure: return "structure";
    case ViolationKind::capacity: return "capacity";
    case ViolationKind::precedence: return "precedence";
    case ViolationKind::time_window: return "time_window";
  }
  return "unknown";
}

int ValidationReport::count(ViolationKind kind) const {
  int n = 0;
  for (const Violation& v : violations) {
    if (v.kind == kind) ++n;
  }
  return n;
}

int Solution::vehicles_used() const {
  int used = 0;
  for (const std::vector<int>& route : routes) {
    if (route.size() > 2) ++used;
  }
  return used;
}

Solution make_solution(std::vector<std::vector<int>> routes, const Instance& instance,
                       const DistanceMatrix& matrix, PairingMode mode) {
  if (static_cast<int>(routes.size()) != instance.fleet_size()) {
    throw std::invalid_argument("route count does not match the fleet size");
  }
  Solution solution;
  solution.routes = std::move(routes);
  solution.schedules.reserve(solution.routes.size());
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    RouteSchedule schedule = detail::schedule_sequence(solution.routes[k],
                                                       instance.fleet()[k], instance, matrix);
    solution.total_distance += schedule.distance;
    solution.total_tardiness += schedule.tardiness;
    solution.total_cost += instance.fleet()[k].cost_rate * schedule.distance;
    solution.schedules.push_back(std::move(schedule));
  }
  solution.report = validate_solution(solution, instance, mode);
  solution.feasible = solution.report.feasible();
  return solution;
}

double solution_cost(const Solution& solution, const Instance& instance) {
  if (static_cast<int>(solution.routes.size()) > instance.fleet_size()) {
    throw std::invalid_argument("solution has more routes than the fleet has vehicles");
  }
  double cost = 0.0;
  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    const std::vector<int>& route = solution.routes[k];
    double distance = 0.0;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      distance += euclidean_distance(instance.vertex(route[i]).position,
                                     instance.vertex(route[i + 1]).position);
    }
    cost += instance.fleet()[k].cost_rate * distance;
  }
  return cost;
}

}  // namespace pdptw
