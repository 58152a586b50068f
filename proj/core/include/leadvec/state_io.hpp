// state_io.hpp — the on-disk state format shared with the CLI:
//   {"l": <int>, "amplitudes": [[re, im], ...]}  with exactly 2^l entries,
// entry i belonging to the basis state whose index bits are i.
#pragma once

#include <string>

#include "leadvec/register_state.hpp"

namespace leadvec {

/// Parses the JSON state format; throws std::invalid_argument with a message
/// naming the violated constraint.
RegisterState parse_state_json(const std::string& text);

RegisterState read_state_file(const std::string& path);

/// Serializes with shortest round-trip double formatting, so
/// parse(serialize(h)) is bit-exact.
std::string state_to_json(const RegisterState& h);

void write_state_file(const std::string& path, const RegisterState& h);

/// FNV-1a over l and the raw amplitude bytes; 16 hex digits.
std::string amplitude_digest(const RegisterState& h);

}  // namespace leadvec
