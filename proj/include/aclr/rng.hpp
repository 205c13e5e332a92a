#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>

namespace aclr {

// Seeded random stream with named substreams. The generator is mt19937_64
// (bit-exact across platforms); all variates are derived from raw 64-bit
// draws so results do not depend on the standard library's distribution
// implementations. Substreams are keyed by a path of integer tags mixed
// into the seed with splitmix64, so parallel work items get independent,
// scheduling-independent streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t tag : path) h = splitmix64(h ^ splitmix64(tag));
    return Rng(h);
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; draws two uniforms per call, no cache.
  double gaussian() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Complex standard normal (both Box-Muller outputs, unit variance per axis).
  std::complex<double> complex_gaussian() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
  }

  std::complex<double> unit_phase() {
    const double phi = 2.0 * M_PI * uniform01();
    return {std::cos(phi), std::sin(phi)};
  }

  // Inverse-CDF sample from a probability vector (need not be exactly
  // normalized; the last positive entry absorbs the rounding slack).
  std::size_t discrete(std::span<const double> probs) {
    const double u = uniform01();
    double acc = 0.0;
    std::size_t last_positive = 0;
    bool seen = false;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] > 0.0) { last_positive = i; seen = true; }
      acc += probs[i];
      if (u < acc) return i;
    }
    if (!seen) throw std::invalid_argument("discrete: all probabilities are zero");
    return last_positive;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace aclr
