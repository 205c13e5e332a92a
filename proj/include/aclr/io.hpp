#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "aclr/benchmark.hpp"
#include "aclr/evolution.hpp"
#include "aclr/revival.hpp"
#include "aclr/secret.hpp"

namespace aclr::io {

// 12-significant-digit formatting used by every CSV artifact ("." decimal
// separator, Unix newlines) so goldens are bit-stable.
std::string format_number(double value);

nlohmann::json state_to_json(const QuantumState& state, const ChainSpec& spec);
QuantumState state_from_json(const nlohmann::json& j, ChainSpec* spec_out = nullptr);

nlohmann::json revival_to_json(const RevivalConstruction& c);

nlohmann::json key_to_json(const SecretKey& key);
SecretKey key_from_json(const nlohmann::json& j);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

void write_series_csv(const std::filesystem::path& path, const ObservableSeries& s);
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep);

}  // namespace aclr::io
