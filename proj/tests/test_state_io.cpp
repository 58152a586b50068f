#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "leadvec/state_io.hpp"
#include "test_support.hpp"

using namespace leadvec;
using namespace testsupport;

TEST_CASE("state json round trip is bit exact") {
  const RegisterState h = random_state(3, 90210);
  const RegisterState back = parse_state_json(state_to_json(h));
  CHECK(back.num_bits() == 3);
  for (std::uint64_t i = 0; i < h.dim(); ++i) {
    CHECK(h[i].real() == back[i].real());
    CHECK(h[i].imag() == back[i].imag());
  }
}

TEST_CASE("parse errors name the violated constraint") {
  CHECK_THROWS_WITH_AS(parse_state_json("not json"),
                       doctest::Contains("not valid JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_state_json("{\"amplitudes\": []}"),
                       doctest::Contains("\"l\""), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_state_json("{\"l\": 2, \"amplitudes\": [[1,0],[0,0],[0,0]]}"),
      doctest::Contains("expected 4 amplitudes"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_state_json("{\"l\": 0, \"amplitudes\": []}"),
      doctest::Contains("l must be"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_state_json("{\"l\": 25, \"amplitudes\": []}"),
      doctest::Contains("l must be"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_state_json("{\"l\": 1, \"amplitudes\": [[1,0],[0]]}"),
      doctest::Contains("[re, im]"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_state_json("{\"l\": 1, \"amplitudes\": [[1,0],[0,\"x\"]]}"),
      doctest::Contains("[re, im]"), std::invalid_argument);
}

TEST_CASE("state files round trip through disk") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "leadvec_io_test.json";
  const RegisterState h = random_state(4, 4444);
  write_state_file(path.string(), h);
  const RegisterState back = read_state_file(path.string());
  CHECK(max_abs_diff(h, back) == 0.0);
  fs::remove(path);

  CHECK_THROWS_WITH_AS(read_state_file("/nonexistent/leadvec.json"),
                       doctest::Contains("cannot open"),
                       std::invalid_argument);
}

TEST_CASE("amplitude digest tracks content") {
  const RegisterState a = random_state(3, 1);
  RegisterState b = a;
  CHECK(amplitude_digest(a) == amplitude_digest(b));
  CHECK(amplitude_digest(a).size() == 16);
  b[5] += Complex(1e-13, 0);
  CHECK(amplitude_digest(a) != amplitude_digest(b));
}
