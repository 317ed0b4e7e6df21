#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace sarfuse {

// Deterministic random source. Distributions are derived by hand from the
// mt19937_64 stream so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n > 0.
  uint64_t uniform_int(uint64_t n) {
    return uint64_t((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // In-place Fisher-Yates shuffle, stable across platforms.
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (size_t i = xs.size(); i > 1; --i) {
      const size_t j = size_t(uniform_int(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

  // Derives an independent stream id from up to four components
  // (splitmix64 chain). Used to give each (site, t), (epoch, batch), ...
  // its own reproducible stream.
  static uint64_t mix(uint64_t a, uint64_t b = 0, uint64_t c = 0, uint64_t d = 0) {
    uint64_t s = a;
    uint64_t h = splitmix(s);
    s ^= b + 0x9e3779b97f4a7c15ull;
    h ^= splitmix(s);
    s ^= c + 0xbf58476d1ce4e5b9ull;
    h ^= splitmix(s);
    s ^= d + 0x94d049bb133111ebull;
    h ^= splitmix(s);
    return h;
  }

 private:
  static uint64_t splitmix(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sarfuse
