#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pdptw {

// Deterministic random stream. All draws are mapped from raw mt19937_64
// output by hand so sequences are identical across standard library
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
  int uniform_int(int lo, int hi);

  // Uniform real in [lo, hi).
  double uniform_real(double lo, double hi);

  bool bernoulli(double p) { return uniform_real(0.0, 1.0) < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)],
                v[static_cast<std::size_t>(uniform_int(0, i))]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pdptw
