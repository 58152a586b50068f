#include "leadvec/state_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace leadvec {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::uint64_t hash, const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace

RegisterState parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state file is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("l") || !j.contains("amplitudes")) {
    throw std::invalid_argument(
        "state file must be an object with fields \"l\" and \"amplitudes\"");
  }
  if (!j["l"].is_number_integer()) {
    throw std::invalid_argument("field \"l\" must be an integer");
  }
  const long long l = j["l"].get<long long>();
  if (l < 1 || l > max_register_bits) {
    throw std::invalid_argument("l must be in [1, " +
                                std::to_string(max_register_bits) + "], got " +
                                std::to_string(l));
  }
  const json& arr = j["amplitudes"];
  if (!arr.is_array()) {
    throw std::invalid_argument("field \"amplitudes\" must be an array");
  }
  const std::uint64_t expected = std::uint64_t{1} << l;
  if (arr.size() != expected) {
    throw std::invalid_argument(
        "expected " + std::to_string(expected) + " amplitudes for l=" +
        std::to_string(l) + ", got " + std::to_string(arr.size()));
  }
  std::vector<Complex> amps;
  amps.reserve(expected);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number()) {
      throw std::invalid_argument("amplitude " + std::to_string(i) +
                                  " must be a [re, im] pair of numbers");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw std::invalid_argument("amplitude " + std::to_string(i) +
                                  " must be finite");
    }
    amps.emplace_back(re, im);
  }
  return RegisterState(static_cast<int>(l), std::move(amps));
}

RegisterState read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open state file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const RegisterState& h) {
  json arr = json::array();
  for (std::uint64_t i = 0; i < h.dim(); ++i) {
    arr.push_back(json::array({h[i].real(), h[i].imag()}));
  }
  json j;
  j["l"] = h.num_bits();
  j["amplitudes"] = std::move(arr);
  return j.dump();
}

void write_state_file(const std::string& path, const RegisterState& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  out << state_to_json(h) << '\n';
}

std::string amplitude_digest(const RegisterState& h) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  const std::uint64_t l = static_cast<std::uint64_t>(h.num_bits());
  hash = fnv1a(hash, &l, sizeof(l));
  for (std::uint64_t i = 0; i < h.dim(); ++i) {
    const double re = h[i].real();
    const double im = h[i].imag();
    hash = fnv1a(hash, &re, sizeof(re));
    hash = fnv1a(hash, &im, sizeof(im));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace leadvec
