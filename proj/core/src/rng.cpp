#include "pdptw/rng.hpp"

#include <limits>
#include <stdexcept>

namespace pdptw {

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t range =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return lo;  // full 32-bit span cannot occur with int bounds
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

double Rng::uniform_real(double lo, double hi) {
  const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

}  // namespace pdptw
