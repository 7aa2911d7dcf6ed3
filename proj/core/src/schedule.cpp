#include "pdptw/schedule.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdptw {

namespace detail {

RouteSchedule schedule_sequence(const std::vector<int>& route, const Vehicle& vehicle,
                                const Instance& instance, const DistanceMatrix& matrix) {
  RouteSchedule schedule;
  if (route.size() < 2) return schedule;

  double departure = 0.0;  // the vehicle leaves the first vertex at time 0
  double load = 0.0;
  int prev = route.front();
  schedule.stops.reserve(route.size() - 2);

  for (std::size_t i = 1; i + 1 < route.size(); ++i) {
    const int id = route[i];
    const Vertex& v = instance.vertex(id);
    const double leg = matrix(prev, id);
    schedule.distance += leg;

    Stop stop;
    stop.vertex = id;
    stop.arrival = departure + travel_time(leg, vehicle);
    stop.departure = std::max(stop.arrival, v.window_open) + v.service_time;
    load += v.quantity;
    stop.load_after = load;

    schedule.tardiness += std::max(0.0, stop.arrival - v.window_close);
    schedule.max_load = std::max(schedule.max_load, load);
    departure = stop.departure;
    prev = id;
    schedule.stops.push_back(stop);
  }

  const int last = route.back();
  const double leg = matrix(prev, last);
  schedule.distance += leg;
  schedule.return_arrival = departure + travel_time(leg, vehicle);
  schedule.tardiness +=
      std::max(0.0, schedule.return_arrival - instance.vertex(last).window_close);
  return schedule;
}

}  // namespace detail

RouteSchedule schedule_route(const std::vector<int>& route, const Vehicle& vehicle,
                             const Instance& instance, const DistanceMatrix& matrix) {
  if (route.size() < 2 || route.front() != 0 || route.back() != 0) {
    throw std::invalid_argument("route must start and end at the depot");
  }
  std::vector<char> seen(instance.vertices().size(), 0);
  for (std::size_t i = 1; i + 1 < route.size(); ++i) {
    const int id = route[i];
    if (id <= 0 || id > instance.n_prime()) {
      throw std::invalid_argument("route visits unknown or depot vertex " + std::to_string(id));
    }
    if (seen[static_cast<std::size_t>(id)]) {
      throw std::invalid_argument("route visits vertex " + std::to_string(id) + " twice");
    }
    seen[static_cast<std::size_t>(id)] = 1;
  }
  return detail::schedule_sequence(route, vehicle, instance, matrix);
}

}  // namespace pdptw
