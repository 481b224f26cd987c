#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace onemedian {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Independent sub-streams of one generator seed. Each concern draws from its
// own stream, so changing how one of them consumes randomness never shifts
// the draws of the others.
enum class Stream : std::uint64_t {
  Topology = 1,
  Costs = 2,
  Source = 3,
  Customers = 4,
  Weights = 5,
};

// mt19937_64 with distribution code written out here, so draws are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, Stream stream);

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform on [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [lo, hi], lo <= hi.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

  // `count` distinct elements of `pool`, uniformly (partial Fisher-Yates).
  template <typename T>
  std::vector<T> sample(std::span<const T> pool, std::size_t count) {
    std::vector<T> items(pool.begin(), pool.end());
    for (std::size_t i = 0; i < count; ++i) {
      const auto k = i + static_cast<std::size_t>(below(items.size() - i));
      std::swap(items[i], items[k]);
    }
    items.resize(count);
    return items;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace onemedian
