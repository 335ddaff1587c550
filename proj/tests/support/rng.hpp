#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace susy::testing {

// Seeded draws that do not depend on the standard library's distribution
// implementations, so a seed gives the same cases on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(int num, int den) { return below(static_cast<std::size_t>(den)) < static_cast<std::size_t>(num); }
  bool coin() { return chance(1, 2); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace susy::testing
