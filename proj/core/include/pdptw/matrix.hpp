#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "pdptw/types.hpp"

namespace pdptw {

double euclidean_distance(const Coord& a, const Coord& b);

// Dense symmetric Euclidean distance matrix over all instance vertices.
// Individual arcs can be forbidden, in which case their length reads as
// infinity; by default every arc is allowed.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Instance& instance);

  double operator()(int i, int j) const {
    const std::size_t idx = index(i, j);
    if (!forbidden_.empty() && forbidden_[idx]) {
      return std::numeric_limits<double>::infinity();
    }
    return dist_[idx];
  }

  int size() const { return n_; }

  // Forbids travel in both directions between i and j.
  void forbid_arc(int i, int j);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> dist_;
  std::vector<char> forbidden_;
};

// Travel time of a vehicle over a given distance: distance / speed.
double travel_time(double distance, const Vehicle& vehicle);

}  // namespace pdptw
