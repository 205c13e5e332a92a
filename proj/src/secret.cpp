#include "aclr/secret.hpp"

#include <cmath>

#include "aclr/basis.hpp"

namespace aclr {

Codebook encode_secret(const std::vector<int>& bits, const SecretKey& key,
                       const EigenSystem& eig, Rng& rng) {
  if (bits.size() != key.entries.size())
    throw std::invalid_argument("encode_secret: bits/key length mismatch");
  Codebook book;
  book.device_states.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const auto& entry = key.entries[i];
    if (bits[i] != 0) {
      ChainSpec spec = key.spec;
      spec.revival_site = entry.site;
      EigenSystem device_eig = eig;
      device_eig.spec = spec;
      book.device_states.push_back(build_revival(device_eig, entry.t_star).state);
    } else {
      Rng device_rng = Rng::substream(rng.next_u64(), {i});
      book.device_states.push_back(
          thermal_product_state(key.spec, entry.site, device_rng));
    }
  }
  return book;
}

Eigen::VectorXd born_probabilities(const QuantumState& state, int site,
                                   const ChainSpec& spec) {
  const int g = spec.local_dim();
  if (site < 1 || site > spec.length)
    throw std::out_of_range("born_probabilities: site out of [1, L]");
  if (state.size() != static_cast<Eigen::Index>(spec.dimension()))
    throw std::invalid_argument("born_probabilities: dimension mismatch");
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(g);
  for (Eigen::Index i = 0; i < state.size(); ++i)
    probs(digit_at(static_cast<std::size_t>(i), site, g, spec.length)) +=
        std::norm(state(i));
  return probs;
}

MeasureResult projective_measure(const QuantumState& state, int site,
                                 const ChainSpec& spec, Rng& rng) {
  const Eigen::VectorXd probs = born_probabilities(state, site, spec);
  const auto outcome = static_cast<int>(
      rng.discrete({probs.data(), static_cast<std::size_t>(probs.size())}));
  const int g = spec.local_dim();
  MeasureResult result;
  result.outcome = outcome;
  result.collapsed = QuantumState::Zero(state.size());
  for (Eigen::Index i = 0; i < state.size(); ++i)
    if (digit_at(static_cast<std::size_t>(i), site, g, spec.length) == outcome)
      result.collapsed(i) = state(i);
  result.collapsed = normalized(result.collapsed);
  return result;
}

DecodeResult decode_with_key(const Codebook& codebook, const SecretKey& key,
                             const EigenSystem& eig, std::uint64_t seed) {
  if (codebook.device_states.size() != key.entries.size())
    throw std::invalid_argument("decode_with_key: codebook/key length mismatch");
  if (key.n_copies < 1) throw std::invalid_argument("decode_with_key: n_copies must be >= 1");

  DecodeResult result;
  const double s = key.spec.spin();
  for (std::size_t dev = 0; dev < codebook.device_states.size(); ++dev) {
    const auto& entry = key.entries[dev];
    // The evolved copy is identical for every run, so evolve once and
    // sample the keyed site's outcome distribution per copy.
    const QuantumState evolved =
        evolve(eig, codebook.device_states[dev], entry.t_star);
    const Eigen::VectorXd probs = born_probabilities(evolved, entry.site, key.spec);
    Rng rng = Rng::substream(seed, {dev});
    double sum = 0.0, sumsq = 0.0;
    for (int copy = 0; copy < key.n_copies; ++copy) {
      const auto m = static_cast<int>(
          rng.discrete({probs.data(), static_cast<std::size_t>(probs.size())}));
      const double value = (static_cast<double>(m) - s) / s;  // digit m -> S^z = m - S
      sum += value;
      sumsq += value * value;
    }
    const double mean = sum / key.n_copies;
    const double var = key.n_copies > 1
                           ? (sumsq - key.n_copies * mean * mean) / (key.n_copies - 1.0)
                           : 0.0;
    result.estimates.push_back(mean);
    result.stderrs.push_back(std::sqrt(std::max(0.0, var) / key.n_copies));
    result.bits.push_back(mean >= key.threshold ? 1 : 0);
  }
  return result;
}

}  // namespace aclr
