#include "pdptw/types.hpp"

#include <stdexcept>
#include <utility>

namespace pdptw {

PairingMode pairing_mode_from_string(const std::string& s) {
  if (s == "same") return PairingMode::same_vehicle;
  if (s == "cross") return PairingMode::cross_vehicle;
  throw std::invalid_argument("unknown pairing mode '" + s + "' (expected same or cross)");
}

std::string to_string(PairingMode mode) {
  return mode == PairingMode::same_vehicle ? "same" : "cross";
}

namespace {

void fail(const std::string& message) { throw std::invalid_argument(message); }

}  // namespace

Instance::Instance(std::vector<Vertex> vertices, std::vector<RequestPair> pairs,
                   std::vector<Vehicle> fleet)
    : vertices_(std::move(vertices)), pairs_(std::move(pairs)), fleet_(std::move(fleet)) {
  if (vertices_.empty()) fail("instance has no depot vertex");
  const int n = static_cast<int>(vertices_.size());
  for (int i = 0; i < n; ++i) {
    const Vertex& v = vertices_[static_cast<std::size_t>(i)];
    if (v.id != i) fail("vertex ids must be consecutive from 0, got " + std::to_string(v.id));
    if (v.window_open > v.window_close) {
      fail("vertex " + std::to_string(i) + ": window_open exceeds window_close");
    }
    if (v.service_time < 0.0) fail("vertex " + std::to_string(i) + ": negative service time");
  }
  if (vertices_[0].quantity != 0.0) fail("depot quantity must be 0");

  const int n_prime = n - 1;
  if (n_prime != 2 * static_cast<int>(pairs_.size())) {
    fail("non-depot vertex count must equal twice the pair count");
  }

  partner_.assign(static_cast<std::size_t>(n), -1);
  pair_index_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    const RequestPair& pair = pairs_[p];
    for (int id : {pair.supplier, pair.customer}) {
      if (id <= 0 || id > n_prime) fail("pair references unknown vertex " + std::to_string(id));
      if (partner_[static_cast<std::size_t>(id)] != -1) {
        fail("vertex " + std::to_string(id) + " belongs to more than one pair");
      }
    }
    const Vertex& s = vertices_[static_cast<std::size_t>(pair.supplier)];
    const Vertex& c = vertices_[static_cast<std::size_t>(pair.customer)];
    if (s.quantity <= 0.0) fail("supplier " + std::to_string(pair.supplier) + " must have positive quantity");
    if (c.quantity >= 0.0) fail("customer " + std::to_string(pair.customer) + " must have negative quantity");
    if (s.quantity + c.quantity != 0.0) {
      fail("pair (" + std::to_string(pair.supplier) + ", " + std::to_string(pair.customer) +
           ") quantities do not cancel");
    }
    partner_[static_cast<std::size_t>(pair.supplier)] = pair.customer;
    partner_[static_cast<std::size_t>(pair.customer)] = pair.supplier;
    pair_index_[static_cast<std::size_t>(pair.supplier)] = static_cast<int>(p);
    pair_index_[static_cast<std::size_t>(pair.customer)] = static_cast<int>(p);
  }
  for (int id = 1; id <= n_prime; ++id) {
    if (partner_[static_cast<std::size_t>(id)] == -1) {
      fail("vertex " + std::to_string(id) + " belongs to no pair");
    }
  }

  if (fleet_.empty()) fail("fleet is empty");
  const int k = static_cast<int>(fleet_.size());
  // K <= N'/2 per the model; the degenerate request-free instance keeps any K.
  if (n_prime > 0 && k > n_prime / 2) {
    fail("fleet size " + std::to_string(k) + " exceeds half the request vertex count");
  }
  for (int i = 0; i < k; ++i) {
    const Vehicle& v = fleet_[static_cast<std::size_t>(i)];
    if (v.id != i + 1) fail("vehicle ids must be consecutive from 1, got " + std::to_string(v.id));
    if (v.capacity <= 0.0) fail("vehicle " + std::to_string(v.id) + ": capacity must be positive");
    if (v.cost_rate < 0.0) fail("vehicle " + std::to_string(v.id) + ": negative cost rate");
    if (v.speed <= 0.0) fail("vehicle " + std::to_string(v.id) + ": speed must be positive");
  }
}

bool Instance::operator==(const Instance& other) const {
  return vertices_ == other.vertices_ && pairs_ == other.pairs_ && fleet_ == other.fleet_;
}

}  // namespace pdptw
