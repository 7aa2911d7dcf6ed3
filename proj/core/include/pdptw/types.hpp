#pragma once

#include <string>
#include <vector>

namespace pdptw {

// How a pickup and its delivery may be distributed over the fleet.
// same_vehicle: both vertices of a pair must sit on one route, pickup first.
// cross_vehicle: only the departure ordering D_pickup <= D_delivery is
// required, so a pair may legally span two vehicles.
enum class PairingMode { same_vehicle, cross_vehicle };

PairingMode pairing_mode_from_string(const std::string& s);
std::string to_string(PairingMode mode);

struct Coord {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Coord&) const = default;
};

// quantity > 0 marks a supplier (pickup), quantity < 0 a customer (delivery),
// quantity == 0 the depot.
struct Vertex {
  int id = 0;
  Coord position;
  double window_open = 0.0;
  double window_close = 0.0;
  double service_time = 0.0;
  double quantity = 0.0;
  bool operator==(const Vertex&) const = default;
};

struct RequestPair {
  int supplier = 0;
  int customer = 0;
  bool operator==(const RequestPair&) const = default;
};

struct Vehicle {
  int id = 0;              // 1..K
  double capacity = 0.0;   // max load
  double cost_rate = 0.0;  // cost per unit distance
  double speed = 1.0;      // distance per time unit
  bool operator==(const Vehicle&) const = default;
};

// Immutable routing instance: a single depot (vertex 0), paired
// supplier/customer vertices and a fleet of vehicles.
//
// The constructor validates all structural invariants (consecutive ids,
// matched pair quantities, fleet bounds) and throws std::invalid_argument
// with a description of the first violation found.
class Instance {
 public:
  Instance(std::vector<Vertex> vertices, std::vector<RequestPair> pairs,
           std::vector<Vehicle> fleet);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<RequestPair>& pairs() const { return pairs_; }
  const std::vector<Vehicle>& fleet() const { return fleet_; }

  const Vertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  int n_prime() const { return static_cast<int>(vertices_.size()) - 1; }
  int fleet_size() const { return static_cast<int>(fleet_.size()); }

  bool is_supplier(int id) const { return vertex(id).quantity > 0.0; }
  bool is_customer(int id) const { return vertex(id).quantity < 0.0; }

  // Partner vertex of a non-depot vertex: the customer of a supplier and
  // vice versa.
  int partner_of(int id) const { return partner_[static_cast<std::size_t>(id)]; }
  int pair_index_of(int id) const { return pair_index_[static_cast<std::size_t>(id)]; }

  bool operator==(const Instance& other) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<RequestPair> pairs_;
  std::vector<Vehicle> fleet_;
  std::vector<int> partner_;
  std::vector<int> pair_index_;
};

}  // namespace pdptw
