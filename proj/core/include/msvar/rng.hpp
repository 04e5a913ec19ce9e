#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace msvar {

// Seeded random stream with hand-pinned distributions. std::mt19937_64 output
// is fixed by the standard, and the value mappings below avoid the
// implementation-defined stdlib distributions, so identical seeds give
// identical streams everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // [0, 1) with 53 bits of mantissa.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive on both ends. Modulo bias is negligible for the ranges used here.
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool coin(double p = 0.5) { return uniform() < p; }

  // Box-Muller without a cached spare: one draw consumes two uniforms, which
  // keeps the generator state a pure function of the call count.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Derive an independent stream from the construction seed, independent of
  // how much of this stream has already been consumed.
  Rng split(uint64_t stream) const;

  std::string serialize() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
  }

  void deserialize(const std::string& s) {
    std::istringstream is(s);
    is >> engine_;
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// Stateless seed derivation for per-item streams (splitmix64 finalizer).
inline uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index = 0) {
  uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream * 0x100000001b3ULL + index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng Rng::split(uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

}  // namespace msvar
