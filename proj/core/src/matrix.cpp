#include "pdptw/matrix.hpp"

#include <cmath>

namespace pdptw {

double euclidean_distance(const Coord& a, const Coord& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

DistanceMatrix::DistanceMatrix(const Instance& instance)
    : n_(static_cast<int>(instance.vertices().size())) {
  dist_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const double d =
          euclidean_distance(instance.vertex(i).position, instance.vertex(j).position);
      dist_[index(i, j)] = d;
      dist_[index(j, i)] = d;
    }
  }
}

void DistanceMatrix::forbid_arc(int i, int j) {
  if (forbidden_.empty()) {
    forbidden_.assign(dist_.size(), 0);
  }
  forbidden_[index(i, j)] = 1;
  forbidden_[index(j, i)] = 1;
}

double travel_time(double distance, const Vehicle& vehicle) {
  return distance / vehicle.speed;
}

}  // namespace pdptw
