#include "aclr/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace aclr::io {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

nlohmann::json state_to_json(const QuantumState& state, const ChainSpec& spec) {
  nlohmann::json amplitudes = nlohmann::json::array();
  for (Eigen::Index i = 0; i < state.size(); ++i)
    amplitudes.push_back({state(i).real(), state(i).imag()});
  return {{"format", "aclr-state-v1"}, {"spec", spec.to_json()},
          {"amplitudes", std::move(amplitudes)}};
}

QuantumState state_from_json(const nlohmann::json& j, ChainSpec* spec_out) {
  if (j.value("format", "") != "aclr-state-v1")
    throw std::invalid_argument("state_from_json: not an aclr-state-v1 document");
  const ChainSpec spec = ChainSpec::from_json(j.at("spec"));
  const auto& amps = j.at("amplitudes");
  if (amps.size() != spec.dimension())
    throw std::invalid_argument("state_from_json: amplitude count != g^L");
  QuantumState state(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i)
    state(static_cast<Eigen::Index>(i)) = {amps[i][0].get<double>(), amps[i][1].get<double>()};
  if (spec_out != nullptr) *spec_out = spec;
  return state;
}

nlohmann::json revival_to_json(const RevivalConstruction& c) {
  nlohmann::json j = state_to_json(c.state, c.spec);
  j["format"] = "aclr-revival-v1";
  j["t_star"] = c.t_star;
  j["xi"] = c.xi;
  j["residual"] = c.residual;
  j["condition_estimate"] = c.condition_estimate;
  j["designated_index"] = c.designated_rank;
  j["overlap_at_tstar"] = c.overlap_at_tstar;
  j["leak_norm"] = c.leak_norm;
  j["predicted_value"] = c.predicted_value;
  return j;
}

nlohmann::json key_to_json(const SecretKey& key) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : key.entries)
    entries.push_back({{"site", e.site}, {"t_star", e.t_star}});
  return {{"format", "aclr-key-v1"},
          {"spec", key.spec.to_json()},
          {"n_copies", key.n_copies},
          {"threshold", key.threshold},
          {"entries", std::move(entries)}};
}

SecretKey key_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "aclr-key-v1")
    throw std::invalid_argument("key_from_json: not an aclr-key-v1 document");
  SecretKey key;
  key.spec = ChainSpec::from_json(j.at("spec"));
  key.n_copies = j.value("n_copies", 400);
  key.threshold = j.value("threshold", 0.5);
  for (const auto& e : j.at("entries"))
    key.entries.push_back({e.at("site").get<int>(), e.at("t_star").get<double>()});
  if (key.entries.empty()) throw std::invalid_argument("key_from_json: empty key");
  return key;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_json: cannot open " + path.string());
  out << j.dump(2) << "\n";
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_json: cannot open " + path.string());
  return nlohmann::json::parse(in);
}

void write_series_csv(const std::filesystem::path& path, const ObservableSeries& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_series_csv: cannot open " + path.string());
  out << "t,sx,sy,sz\n";
  for (std::size_t i = 0; i < s.times.size(); ++i)
    out << format_number(s.times[i]) << "," << format_number(s.sx[i]) << ","
        << format_number(s.sy[i]) << "," << format_number(s.sz[i]) << "\n";
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_sweep_csv: cannot open " + path.string());
  out << "lambda,mean_sz,stderr_sz,mean_E,n\n";
  for (const auto& p : sweep.points)
    out << format_number(p.lambda) << "," << format_number(p.mean_sz) << ","
        << format_number(p.stderr_sz) << "," << format_number(p.mean_error) << ","
        << p.n_realizations << "\n";
}

}  // namespace aclr::io
