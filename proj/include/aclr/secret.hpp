#pragma once

#include <cstdint>
#include <vector>

#include "aclr/revival.hpp"

namespace aclr {

// Delayed reveal of a secret: each bit is carried by one device whose
// initial state either revives at its keyed (site, time) or thermalizes.

struct KeyEntry {
  int site = 1;
  double t_star = 5.0;
};

struct SecretKey {
  ChainSpec spec;
  std::vector<KeyEntry> entries;
  int n_copies = 400;
  double threshold = 0.5;  // decision cut on the normalized observable
};

struct Codebook {
  std::vector<QuantumState> device_states;  // bit 1 -> reviving, bit 0 -> thermal
};

// bits.size() must equal key.entries.size(); bit-0 devices use a thermal
// reservoir behind the same local product state (fresh substream each).
Codebook encode_secret(const std::vector<int>& bits, const SecretKey& key,
                       const EigenSystem& eig, Rng& rng);

// p(m) = sum of |psi_i|^2 over basis states whose `site` level is m.
Eigen::VectorXd born_probabilities(const QuantumState& state, int site,
                                   const ChainSpec& spec);

struct MeasureResult {
  int outcome = 0;           // local level m in [0, g-1]
  QuantumState collapsed;    // renormalized projection
};
MeasureResult projective_measure(const QuantumState& state, int site,
                                 const ChainSpec& spec, Rng& rng);

struct DecodeResult {
  std::vector<int> bits;
  std::vector<double> estimates;  // per-bit <Sbar^z> estimate
  std::vector<double> stderrs;
};

// For each device: evolve a fresh copy to its keyed time, measure the keyed
// site once, repeat n_copies times; bit = 1 iff the estimate >= threshold.
DecodeResult decode_with_key(const Codebook& codebook, const SecretKey& key,
                             const EigenSystem& eig, std::uint64_t seed);

}  // namespace aclr
