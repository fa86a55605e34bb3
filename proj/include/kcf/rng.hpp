#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace kcf {

// std::mt19937_64 with a 128-bit multiply-shift for ranges and a hand-written
// Fisher-Yates shuffle, so draws match across standard libraries.
class seeded_rng {
public:
  explicit seeded_rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish draw in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
  }

  bool coin(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  /// Fisher-Yates, back to front.
  template <typename T> void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace kcf
