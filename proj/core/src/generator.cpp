#include "pdptw/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pdptw/io.hpp"
#include "pdptw/matrix.hpp"
#include "pdptw/oracle.hpp"
#include "pdptw/rng.hpp"
#include "pdptw/solution.hpp"

namespace pdptw {

void GenParams::validate() const {
  if (pair_count < 1) throw std::invalid_argument("pair_count must be at least 1");
  if (vehicle_count < 1 || vehicle_count > pair_count) {
    throw std::invalid_argument("vehicle_count must lie in [1, pair_count]");
  }
  if (area <= 0.0) throw std::invalid_argument("area must be positive");
  if (quantity_min < 1 || quantity_max < quantity_min) {
    throw std::invalid_argument("quantity range must satisfy 1 <= min <= max");
  }
  if (capacity < static_cast<double>(quantity_max)) {
    throw std::invalid_argument("capacity must cover the largest pair quantity");
  }
  if (cost_rate_min < 0.0 || cost_rate_max < cost_rate_min) {
    throw std::invalid_argument("cost rate range must satisfy 0 <= min <= max");
  }
  if (window_width_min < 0.0 || window_width_max < window_width_min) {
    throw std::invalid_argument("window width range must satisfy 0 <= min <= max");
  }
  if (service_min < 0.0 || service_max < service_min) {
    throw std::invalid_argument("service time range must satisfy 0 <= min <= max");
  }
  if (horizon <= 0.0) throw std::invalid_argument("horizon must be positive");
}

namespace {

// Greedy seed tour: each pair is appended (supplier then customer) to the
// vehicle whose route tail is nearest to the supplier. The windows are later
// anchored to this tour, which therefore certifies feasibility.
std::vector<std::vector<int>> build_seed_routes(const std::vector<Vertex>& vertices,
                                                const std::vector<RequestPair>& pairs, int k) {
  std::vector<std::vector<int>> routes(static_cast<std::size_t>(k), std::vector<int>{0});
  for (const RequestPair& pair : pairs) {
    int best_vehicle = 0;
    double best_distance = 0.0;
    for (int v = 0; v < k; ++v) {
      const int tail = routes[static_cast<std::size_t>(v)].back();
      const double d = euclidean_distance(vertices[static_cast<std::size_t>(tail)].position,
                                          vertices[static_cast<std::size_t>(pair.supplier)].position);
      if (v == 0 || d < best_distance) {
        best_vehicle = v;
        best_distance = d;
      }
    }
    routes[static_cast<std::size_t>(best_vehicle)].push_back(pair.supplier);
    routes[static_cast<std::size_t>(best_vehicle)].push_back(pair.customer);
  }
  for (auto& route : routes) route.push_back(0);
  return routes;
}

}  // namespace

Instance generate_instance(const GenParams& params) {
  params.validate();
  Rng rng(params.rng_seed);

  const int n_prime = 2 * params.pair_count;
  std::vector<Vertex> vertices(static_cast<std::size_t>(n_prime) + 1);
  Vertex& depot = vertices[0];
  depot.id = 0;
  depot.position = {quantize9(params.area / 2.0), quantize9(params.area / 2.0)};
  depot.window_open = 0.0;
  depot.window_close = quantize9(params.horizon);

  std::vector<RequestPair> pairs;
  pairs.reserve(static_cast<std::size_t>(params.pair_count));
  for (int p = 0; p < params.pair_count; ++p) {
    const int supplier_id = 2 * p + 1;
    const int customer_id = 2 * p + 2;
    const int quantity = rng.uniform_int(params.quantity_min, params.quantity_max);
    for (const int id : {supplier_id, customer_id}) {
      Vertex& v = vertices[static_cast<std::size_t>(id)];
      v.id = id;
      v.position = {quantize9(rng.uniform_real(0.0, params.area)),
                    quantize9(rng.uniform_real(0.0, params.area))};
      v.service_time = quantize9(rng.uniform_real(params.service_min, params.service_max));
      v.quantity = id == supplier_id ? quantity : -quantity;
    }
    pairs.push_back({supplier_id, customer_id});
  }

  std::vector<Vehicle> fleet;
  fleet.reserve(static_cast<std::size_t>(params.vehicle_count));
  for (int v = 0; v < params.vehicle_count; ++v) {
    Vehicle vehicle;
    vehicle.id = v + 1;
    vehicle.capacity = quantize9(params.capacity);
    vehicle.cost_rate = quantize9(rng.uniform_real(params.cost_rate_min, params.cost_rate_max));
    vehicle.speed = 1.0;
    fleet.push_back(vehicle);
  }

  const std::vector<std::vector<int>> seed_routes =
      build_seed_routes(vertices, pairs, params.vehicle_count);

  // Place windows around the seed tour arrivals; widen until certified.
  double scale = 1.0;
  for (int attempt = 0; attempt < 64; ++attempt, scale *= 2.0) {
    double latest_return = 0.0;
    for (std::size_t k = 0; k < seed_routes.size(); ++k) {
      const std::vector<int>& route = seed_routes[k];
      double departure = 0.0;
      int prev = 0;
      for (std::size_t i = 1; i + 1 < route.size(); ++i) {
        const int id = route[i];
        Vertex& v = vertices[static_cast<std::size_t>(id)];
        const double arrival =
            departure + euclidean_distance(vertices[static_cast<std::size_t>(prev)].position,
                                           v.position);
        const double width =
            quantize9(rng.uniform_real(params.window_width_min, params.window_width_max) * scale);
        const double offset = rng.uniform_real(0.0, width);
        v.window_open = quantize9(std::max(0.0, arrival - offset));
        v.window_close = quantize9(v.window_open + width);
        if (v.window_close < arrival) v.window_close = quantize9(arrival + width);
        departure = std::max(arrival, v.window_open) + v.service_time;
        prev = id;
      }
      const double return_arrival =
          departure + euclidean_distance(vertices[static_cast<std::size_t>(prev)].position,
                                         vertices[0].position);
      latest_return = std::max(latest_return, return_arrival);
    }
    vertices[0].window_close =
        quantize9(std::max(params.horizon, latest_return + params.window_width_max * scale));

    Instance candidate(vertices, pairs, fleet);
    if (params.pair_count <= 4) {
      if (exact_solve(candidate, PairingMode::same_vehicle, 8).feasible) return candidate;
    } else {
      DistanceMatrix matrix(candidate);
      if (make_solution(seed_routes, candidate, matrix, PairingMode::same_vehicle).feasible) {
        return candidate;
      }
    }
  }
  throw std::runtime_error("window widening failed to certify a feasible instance");
}

}  // namespace pdptw
