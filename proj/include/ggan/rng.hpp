#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

namespace ggan {

/// Seeded random source. All randomness in a run flows from one root seed,
/// forked into purpose-named streams so components reseed independently.
/// Gaussian draws use explicit Box-Muller on the 53-bit uniform mapping, so
/// the byte stream is a pure function of the seed (std::normal_distribution
/// is implementation-defined and is deliberately avoided).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed), root_(seed) {}

  static uint64_t stream_id(std::string_view name) {
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return h;
  }

  /// Child generator for an independent named stream.
  Rng fork(std::string_view name) const { return Rng(seed_mix(root_, stream_id(name))); }

  uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return engine_() % n; }

  /// Standard normal via Box-Muller; second value cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static uint64_t seed_mix(uint64_t root, uint64_t stream) {
    uint64_t x = root ^ (stream + 0x9e3779b97f4a7c15ull + (root << 6) + (root >> 2));
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
  uint64_t root_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ggan
