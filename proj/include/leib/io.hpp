#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "leib/algebra.hpp"
#include "leib/extension.hpp"

namespace leib {

// One text format, two kinds. The first non-blank line picks the kind:
//
//   kind: algebra          kind: spec
//   dim: 2                 r: 2
//   basis: n x             s: 1
//   [x,n] = -n             R1: 1 0 ; 0 0
//   [x,x] = 2*n            L1: -1 0 ; 0 2
//                          sigma11: 0 1
//
// Algebra brackets not listed are zero; listing one twice is an error.
// Spec blocks are all required. Entries are exact rationals like -3/2.
using Document = std::variant<LeibnizAlgebra, ExtensionSpec>;

Document parse_document(const std::string& text);  // ParseError

std::string emit_algebra(const LeibnizAlgebra& alg);
std::string emit_spec(const ExtensionSpec& spec);

std::uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);

// Machine-readable command outcome. fields keeps insertion order so text
// and JSON renderings are deterministic; no clocks, no environment.
struct Report {
  std::string command;
  std::string input_digest;
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  int exit_code = 0;
};

std::string render_text(const Report& rep);
std::string render_json(const Report& rep);

}  // namespace leib
