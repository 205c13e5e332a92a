// aclr: exact-diagonalization toolkit for engineered local revivals in
// periodic spin-S chains.  Subcommands emit CSV/JSON artifacts; plotting
// is left to external tools.

#include <CLI11.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "aclr/benchmark.hpp"
#include "aclr/io.hpp"
#include "aclr/secret.hpp"
#include "aclr/spectra.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
  aclr::ChainSpec spec;
  std::string times = "0:10:0.1";
  std::uint64_t seed = 1;
  std::string out = ".";
  int threads = 1;
};

void add_spec_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--length", o.spec.length, "chain length L")->capture_default_str();
  cmd->add_option("--two-s", o.spec.two_s, "2S (local dimension g = 2S+1)")
      ->capture_default_str();
  cmd->add_option("--jx", o.spec.couplings.jx)->capture_default_str();
  cmd->add_option("--jy", o.spec.couplings.jy)->capture_default_str();
  cmd->add_option("--hx", o.spec.couplings.hx)->capture_default_str();
  cmd->add_option("--hy", o.spec.couplings.hy)->capture_default_str();
  cmd->add_option("--site", o.spec.revival_site, "revival/observation site")
      ->capture_default_str();
  cmd->add_option("--times", o.times, "time grid start:stop:step")->capture_default_str();
  cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker count")->capture_default_str();
}

std::vector<double> parse_grid(const std::string& text) {
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0)
    throw CLI::ValidationError("grid", "expected start:stop:step with step > 0");
  std::vector<double> grid;
  for (double t = start; t <= stop + 1e-9 * step; t += step) grid.push_back(t);
  return grid;
}

json base_manifest(const std::string& command, const CommonOpts& o) {
  return {{"tool", "aclr"},   {"version", "1.0"}, {"command", command},
          {"spec", o.spec.to_json()}, {"seed", o.seed}};
}

void write_manifest(const CommonOpts& o, const json& manifest) {
  fs::create_directories(o.out);
  aclr::io::write_json(fs::path(o.out) / "manifest.json", manifest);
}

int run_thermal(const CommonOpts& o) {
  o.spec.validate();
  const auto eig = aclr::diagonalize_chain(o.spec);
  aclr::Rng rng = aclr::Rng::substream(o.seed, {0});
  const auto state = aclr::thermal_product_state(o.spec, o.spec.revival_site, rng);
  const auto series =
      aclr::observable_series(eig, state, o.spec.revival_site, parse_grid(o.times));
  fs::create_directories(o.out);
  aclr::io::write_series_csv(fs::path(o.out) / "thermal.csv", series);
  write_manifest(o, base_manifest("thermal", o));
  return 0;
}

json revival_manifest(const std::string& command, const CommonOpts& o,
                      const aclr::RevivalConstruction& c) {
  json m = base_manifest(command, o);
  m["t_star"] = c.t_star;
  m["xi"] = c.xi;
  m["residual"] = c.residual;
  m["condition_estimate"] = c.condition_estimate;
  m["overlap_at_tstar"] = c.overlap_at_tstar;
  m["leak_norm"] = c.leak_norm;
  m["predicted_value"] = c.predicted_value;
  return m;
}

int run_revive(const CommonOpts& o, double t_star) {
  o.spec.validate();
  const auto eig = aclr::diagonalize_chain(o.spec);
  const auto c = aclr::build_revival(eig, t_star);
  const auto series =
      aclr::observable_series(eig, c.state, o.spec.revival_site, parse_grid(o.times));
  fs::create_directories(o.out);
  aclr::io::write_series_csv(fs::path(o.out) / "revive.csv", series);
  aclr::io::write_json(fs::path(o.out) / "revival.json", aclr::io::revival_to_json(c));
  write_manifest(o, revival_manifest("revive", o, c));
  return 0;
}

int run_superpose(const CommonOpts& o, const std::vector<double>& t_stars) {
  o.spec.validate();
  if (t_stars.empty()) throw CLI::ValidationError("--t-stars", "need at least one time");
  const auto eig = aclr::diagonalize_chain(o.spec);
  std::vector<aclr::RevivalConstruction> constructions;
  std::vector<std::complex<double>> weights;
  for (double t : t_stars) {
    constructions.push_back(aclr::build_revival(eig, t));
    weights.emplace_back(1.0, 0.0);
  }
  aclr::Matrix overlaps;
  const auto state = aclr::superpose_revivals(constructions, weights, &overlaps);
  const auto series =
      aclr::observable_series(eig, state, o.spec.revival_site, parse_grid(o.times));
  fs::create_directories(o.out);
  aclr::io::write_series_csv(fs::path(o.out) / "superpose.csv", series);
  json m = base_manifest("superpose", o);
  m["t_stars"] = t_stars;
  json xi = json::array();
  for (const auto& c : constructions) xi.push_back(c.xi);
  m["xi"] = xi;
  m["max_pairwise_overlap"] = [&] {
    double v = 0.0;
    for (Eigen::Index i = 0; i < overlaps.rows(); ++i)
      for (Eigen::Index j = 0; j < overlaps.cols(); ++j)
        if (i != j) v = std::max(v, std::abs(overlaps(i, j)));
    return v;
  }();
  write_manifest(o, m);
  return 0;
}

int run_higher_spin(const CommonOpts& o, const std::vector<int>& spins, double t_star) {
  if (spins.empty()) throw CLI::ValidationError("--spins", "need at least one 2S value");
  fs::create_directories(o.out);
  json m = base_manifest("higher-spin", o);
  m["t_star"] = t_star;
  json per_spin = json::array();
  for (int two_s : spins) {
    CommonOpts local = o;
    local.spec.two_s = two_s;
    local.spec.validate();
    const auto eig = aclr::diagonalize_chain(local.spec);
    const auto c = aclr::build_revival(eig, t_star);
    const auto series = aclr::observable_series(eig, c.state, local.spec.revival_site,
                                                parse_grid(o.times));
    aclr::io::write_series_csv(
        fs::path(o.out) / ("spin_" + std::to_string(two_s) + ".csv"), series);
    per_spin.push_back({{"two_s", two_s},
                        {"xi", c.xi},
                        {"predicted_value", c.predicted_value},
                        {"L", local.spec.length}});
  }
  m["spins"] = per_spin;
  write_manifest(o, m);
  return 0;
}

int run_half_revival(const CommonOpts& o, double t_star) {
  o.spec.validate();
  const auto eig = aclr::diagonalize_chain(o.spec);
  aclr::Rng rng = aclr::Rng::substream(o.seed, {0});
  const auto psi0 = aclr::thermal_product_state(o.spec, o.spec.revival_site, rng);
  const auto state = aclr::half_revival_state(eig, psi0, t_star);
  const auto series =
      aclr::observable_series(eig, state, o.spec.revival_site, parse_grid(o.times));
  fs::create_directories(o.out);
  aclr::io::write_series_csv(fs::path(o.out) / "half_revival.csv", series);
  json m = base_manifest("half-revival", o);
  m["t_star"] = t_star;
  write_manifest(o, m);
  return 0;
}

int run_sweep(const CommonOpts& o, double t_star, const std::string& lambdas,
              int realizations) {
  o.spec.validate();
  const auto grid = parse_grid(lambdas);
  const auto eig = aclr::diagonalize_chain(o.spec);
  const auto c = aclr::build_revival(eig, t_star);
  const auto sweep = aclr::lambda_sweep(eig, c, grid, realizations, o.seed, o.threads);
  const auto fit = aclr::fit_error_relation(sweep);
  fs::create_directories(o.out);
  aclr::io::write_sweep_csv(fs::path(o.out) / "sweep.csv", sweep);
  aclr::io::write_json(fs::path(o.out) / "fit.json",
                       {{"slope", fit.slope},
                        {"intercept", fit.intercept},
                        {"r2", fit.r_squared},
                        {"region", {fit.region_begin, fit.region_end}}});
  json m = revival_manifest("sweep", o, c);
  m["realizations"] = realizations;
  m["lambdas"] = lambdas;
  write_manifest(o, m);
  return 0;
}

int run_spectra(const CommonOpts& o, int degree) {
  o.spec.validate();
  const auto h = aclr::build_hamiltonian(o.spec);
  const auto shift = aclr::translation_permutation(o.spec);
  const auto sectors = aclr::momentum_sectors(h, shift, o.spec.length);

  fs::create_directories(o.out);
  std::ofstream csv(fs::path(o.out) / "spectra.csv");
  csv << "k,level\n";
  for (const auto& sector : sectors)
    for (double level : sector.levels)
      csv << sector.momentum << "," << aclr::io::format_number(level) << "\n";

  // Pool r-ratios over sectors away from k = 0 and k = L/2 (residual
  // reflection symmetry superposes blocks there).
  std::vector<double> pooled;
  json per_sector = json::object();
  std::size_t n_unfolded = 0;
  double unfolded_mean = 0.0;
  for (const auto& sector : sectors) {
    if (sector.levels.size() < 50) continue;
    const auto stats = aclr::spacing_ratios(sector.levels);
    per_sector[std::to_string(sector.momentum)] = stats.mean_r;
    const bool excluded =
        sector.momentum == 0 ||
        (o.spec.length % 2 == 0 && sector.momentum == o.spec.length / 2);
    if (excluded) continue;
    pooled.insert(pooled.end(), stats.r_values.begin(), stats.r_values.end());
    for (double sp : aclr::unfold(sector.levels, degree)) {
      unfolded_mean += sp;
      ++n_unfolded;
    }
  }
  if (pooled.empty()) throw std::runtime_error("spectra: no sector large enough for statistics");
  double mean_r = 0.0;
  for (double r : pooled) mean_r += r;
  mean_r /= static_cast<double>(pooled.size());
  aclr::io::write_json(fs::path(o.out) / "rstats.json",
                       {{"mean_r", mean_r},
                        {"n_ratios", pooled.size()},
                        {"per_sector", per_sector},
                        {"mean_unfolded_spacing",
                         n_unfolded > 0 ? unfolded_mean / static_cast<double>(n_unfolded) : 0.0}});
  json m = base_manifest("spectra", o);
  m["unfold_degree"] = degree;
  write_manifest(o, m);
  return 0;
}

int run_encode(const CommonOpts& o, const std::string& bits_text,
               const std::string& key_path) {
  const auto key = aclr::io::key_from_json(aclr::io::read_json(key_path));
  std::vector<int> bits;
  for (char ch : bits_text) {
    if (ch != '0' && ch != '1')
      throw CLI::ValidationError("--bits", "expected a string of 0s and 1s");
    bits.push_back(ch - '0');
  }
  const auto eig = aclr::diagonalize_chain(key.spec);
  aclr::Rng rng(o.seed);
  const auto book = aclr::encode_secret(bits, key, eig, rng);
  fs::create_directories(o.out);
  json index = json::array();
  for (std::size_t i = 0; i < book.device_states.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "device_%03zu.json", i);
    aclr::io::write_json(fs::path(o.out) / name,
                         aclr::io::state_to_json(book.device_states[i], key.spec));
    index.push_back(name);
  }
  aclr::io::write_json(fs::path(o.out) / "codebook.json",
                       {{"format", "aclr-codebook-v1"}, {"devices", index}});
  return 0;
}

int run_decode(const CommonOpts& o, const std::string& key_path,
               const std::string& book_dir) {
  const auto key = aclr::io::key_from_json(aclr::io::read_json(key_path));
  const auto index = aclr::io::read_json(fs::path(book_dir) / "codebook.json");
  aclr::Codebook book;
  for (const auto& name : index.at("devices"))
    book.device_states.push_back(aclr::io::state_from_json(
        aclr::io::read_json(fs::path(book_dir) / name.get<std::string>())));
  const auto eig = aclr::diagonalize_chain(key.spec);
  const auto result = aclr::decode_with_key(book, key, eig, o.seed);
  std::string bits;
  for (int b : result.bits) bits.push_back(b ? '1' : '0');
  fs::create_directories(o.out);
  aclr::io::write_json(fs::path(o.out) / "decoded.json",
                       {{"bits", bits},
                        {"estimates", result.estimates},
                        {"stderrs", result.stderrs}});
  std::cout << bits << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"almost-complete-local-revival spin chain toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  double t_star = 5.0;
  std::vector<double> t_stars;
  std::vector<int> spins{1, 2, 3, 4};
  std::string lambdas = "0:3.5:0.5";
  int realizations = 40;
  int degree = 10;
  std::string bits, key_path, book_dir;

  auto* thermal = app.add_subcommand("thermal", "thermal reservoir time series");
  add_spec_flags(thermal, o);

  auto* revive = app.add_subcommand("revive", "single reviving state time series");
  add_spec_flags(revive, o);
  revive->add_option("--t-star", t_star, "revival time")->capture_default_str();

  auto* superpose = app.add_subcommand("superpose", "superposition of reviving states");
  add_spec_flags(superpose, o);
  superpose->add_option("--t-stars", t_stars, "revival times")->required()->delimiter(',');

  auto* higher = app.add_subcommand("higher-spin", "revival series per spin value");
  add_spec_flags(higher, o);
  higher->add_option("--t-star", t_star)->capture_default_str();
  higher->add_option("--spins", spins, "2S values")->delimiter(',')->capture_default_str();

  auto* dym = app.add_subcommand("half-revival", "half-revival superposition baseline");
  add_spec_flags(dym, o);
  dym->add_option("--t-star", t_star)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "perturbation sweep (benchmarking)");
  add_spec_flags(sweep, o);
  sweep->add_option("--t-star", t_star)->capture_default_str();
  sweep->add_option("--lambdas", lambdas, "lambda grid start:stop:step")->capture_default_str();
  sweep->add_option("--realizations", realizations)->capture_default_str();

  auto* spectra = app.add_subcommand("spectra", "momentum-sector level statistics");
  add_spec_flags(spectra, o);
  spectra->add_option("--degree", degree, "unfolding polynomial degree")->capture_default_str();

  auto* encode = app.add_subcommand("encode", "encode a bitstring into device states");
  add_spec_flags(encode, o);
  encode->add_option("--bits", bits)->required();
  encode->add_option("--key", key_path, "key file (aclr-key-v1)")->required();

  auto* decode = app.add_subcommand("decode", "decode device states with a key");
  add_spec_flags(decode, o);
  decode->add_option("--key", key_path, "key file (aclr-key-v1)")->required();
  decode->add_option("--book", book_dir, "codebook directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (thermal->parsed()) return run_thermal(o);
    if (revive->parsed()) return run_revive(o, t_star);
    if (superpose->parsed()) return run_superpose(o, t_stars);
    if (higher->parsed()) return run_higher_spin(o, spins, t_star);
    if (dym->parsed()) return run_half_revival(o, t_star);
    if (sweep->parsed()) return run_sweep(o, t_star, lambdas, realizations);
    if (spectra->parsed()) return run_spectra(o, degree);
    if (encode->parsed()) return run_encode(o, bits, key_path);
    if (decode->parsed()) return run_decode(o, key_path, book_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // bad spec/grid/bit values
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
