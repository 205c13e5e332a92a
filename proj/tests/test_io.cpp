#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aclr/io.hpp"

using namespace aclr;
namespace fs = std::filesystem;

TEST_CASE("chain spec JSON roundtrip") {
  ChainSpec spec;
  spec.length = 8;
  spec.two_s = 2;
  spec.revival_site = 3;
  const auto j = spec.to_json();
  CHECK(j.at("jx").get<double>() == doctest::Approx(-2.0));
  CHECK(j.at("jy").get<double>() == doctest::Approx(-4.0));
  CHECK(j.at("hx").get<double>() == doctest::Approx(2.2));
  CHECK(ChainSpec::from_json(j) == spec);
  SUBCASE("coupling defaults fill in") {
    const auto spec2 = ChainSpec::from_json({{"L", 6}, {"two_s", 1}});
    CHECK(spec2.couplings.hy == doctest::Approx(2.2));
    CHECK(spec2.revival_site == 1);
  }
  SUBCASE("invalid specs rejected") {
    CHECK_THROWS(ChainSpec::from_json({{"L", 1}, {"two_s", 1}}));
    CHECK_THROWS(ChainSpec::from_json({{"L", 30}, {"two_s", 1}}));
  }
}

TEST_CASE("state file roundtrip preserves basis order") {
  ChainSpec spec;
  spec.length = 3;
  Rng rng(4);
  const QuantumState psi = random_direction(spec.dimension(), rng);
  const auto j = io::state_to_json(psi, spec);
  CHECK(j.at("format") == "aclr-state-v1");
  ChainSpec spec_out;
  const QuantumState back = io::state_from_json(j, &spec_out);
  CHECK(spec_out == spec);
  CHECK((back - psi).cwiseAbs().maxCoeff() < 1e-15);
  SUBCASE("wrong amplitude count rejected") {
    auto bad = j;
    bad["amplitudes"].erase(0);
    CHECK_THROWS_AS(io::state_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("key file roundtrip") {
  SecretKey key;
  key.spec.length = 8;
  key.entries = {{1, 4.5}, {3, 6.0}};
  key.n_copies = 200;
  key.threshold = 0.4;
  const auto j = io::key_to_json(key);
  const auto back = io::key_from_json(j);
  CHECK(back.spec == key.spec);
  CHECK(back.n_copies == 200);
  CHECK(back.threshold == doctest::Approx(0.4));
  REQUIRE(back.entries.size() == 2);
  CHECK(back.entries[1].site == 3);
  CHECK(back.entries[1].t_star == doctest::Approx(6.0));
  CHECK_THROWS_AS(io::key_from_json({{"format", "bogus"}}), std::invalid_argument);
}

TEST_CASE("CSV formatting") {
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");  // 12 significant digits

  ObservableSeries s;
  s.times = {0.0, 0.5};
  s.sx = {0.25, -0.125};
  s.sy = {0.0, 1e-15};
  s.sz = {1.0, 0.99};
  const fs::path path = fs::temp_directory_path() / "aclr_test_series.csv";
  io::write_series_csv(path, s);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "t,sx,sy,sz\n0,0.25,0,1\n0.5,-0.125,1e-15,0.99\n");
  fs::remove(path);
}
