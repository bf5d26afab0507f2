#include <doctest.h>

#include "leib/io.hpp"

using namespace leib;

namespace {

Rat R(long n) { return Rat(n); }

Errc parse_code(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::bad_argument;
}

std::string parse_message(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("algebra documents parse into structure constants") {
  Document doc = parse_document(
      "kind: algebra\n"
      "dim: 2\n"
      "basis: n x\n"
      "[x,n] = -n\n"
      "[x,x] = 2*n\n");
  const auto& alg = std::get<LeibnizAlgebra>(doc);
  CHECK(alg.dim() == 2);
  CHECK(alg.labels() == std::vector<std::string>{"n", "x"});
  CHECK(alg.bracket_basis(1, 0) == Vec{R(-1), R(0)});
  CHECK(alg.bracket_basis(1, 1) == Vec{R(2), R(0)});
  CHECK(alg.bracket_basis(0, 1) == Vec{R(0), R(0)});
}

TEST_CASE("terms may combine coefficients and repeat labels") {
  Document doc = parse_document(
      "kind: algebra\n"
      "dim: 2\n"
      "basis: a b\n"
      "[a,b] = 2*a - b + 1/2*a\n"
      "[b,b] = 0\n");
  const auto& alg = std::get<LeibnizAlgebra>(doc);
  CHECK(alg.bracket_basis(0, 1) == Vec{Rat(5, 2), R(-1)});
  CHECK(alg.bracket_basis(1, 1) == Vec{R(0), R(0)});
}

TEST_CASE("algebra emission round trips") {
  std::string text =
      "kind: algebra\n"
      "dim: 3\n"
      "basis: n1 n2 x\n"
      "[x,n1] = n1 + n2\n"
      "[x,x] = -3/2*n2\n";
  Document doc = parse_document(text);
  std::string emitted = emit_algebra(std::get<LeibnizAlgebra>(doc));
  Document again = parse_document(emitted);
  CHECK(std::get<LeibnizAlgebra>(again) == std::get<LeibnizAlgebra>(doc));
  CHECK(emit_algebra(std::get<LeibnizAlgebra>(again)) == emitted);
}

TEST_CASE("spec documents parse into extension data") {
  Document doc = parse_document(
      "kind: spec\n"
      "r: 2\n"
      "s: 1\n"
      "R1: 1 0 ; 0 0\n"
      "L1: -1 0 ; 0 2\n"
      "sigma11: 0 1\n");
  const auto& spec = std::get<ExtensionSpec>(doc);
  CHECK(spec.r == 2);
  CHECK(spec.s == 1);
  CHECK(spec.R[0] == Mat::diag(Vec{R(1), R(0)}));
  CHECK(spec.L[0] == Mat::diag(Vec{R(-1), R(2)}));
  CHECK(spec.sigma[0][0] == Vec{R(0), R(1)});
}

TEST_CASE("spec emission round trips") {
  ExtensionSpec spec = ExtensionSpec::zero(2, 2);
  spec.R[0] = Mat{{R(1), R(2)}, {R(3), R(4)}};
  spec.L[1] = Mat::diag(Vec{Rat(-1, 2), R(0)});
  spec.sigma[0][1] = Vec{R(7), R(0)};
  std::string emitted = emit_spec(spec);
  CHECK(std::get<ExtensionSpec>(parse_document(emitted)) == spec);
}

TEST_CASE("block order in spec files is free") {
  Document doc = parse_document(
      "kind: spec\n"
      "r: 1\n"
      "s: 1\n"
      "sigma11: 4\n"
      "L1: 2\n"
      "R1: 0\n");
  CHECK(std::get<ExtensionSpec>(doc).sigma[0][0][0] == R(4));
}

TEST_CASE("parse errors carry line numbers") {
  std::string msg = parse_message(
      "kind: algebra\n"
      "dim: 2\n"
      "basis: n x\n"
      "[x,n] = 1/0*n\n");
  CHECK(msg.find("line 4") != std::string::npos);
  CHECK(parse_code("kind: algebra\ndim: 2\nbasis: n x\n[x,n] = 1/0*n\n") ==
        Errc::parse_error);
}

TEST_CASE("malformed documents are rejected") {
  CHECK(parse_code("") == Errc::parse_error);
  CHECK(parse_code("kind: widget\n") == Errc::parse_error);
  // Unknown label in a bracket.
  CHECK(parse_code("kind: algebra\ndim: 1\nbasis: n\n[n,y] = n\n") ==
        Errc::parse_error);
  // Duplicate bracket definition.
  CHECK(parse_code("kind: algebra\ndim: 1\nbasis: n\n[n,n] = n\n[n,n] = 0\n") ==
        Errc::parse_error);
  // Basis size disagrees with dim.
  CHECK(parse_code("kind: algebra\ndim: 2\nbasis: n\n") == Errc::parse_error);
  // Missing spec block.
  CHECK(parse_code("kind: spec\nr: 1\ns: 1\nR1: 0\nL1: 1\n") ==
        Errc::parse_error);
  // Unknown extra block.
  CHECK(parse_code("kind: spec\nr: 1\ns: 1\nR1: 0\nL1: 1\nsigma11: 0\nQ1: 1\n") ==
        Errc::parse_error);
  // Wrong row width.
  CHECK(parse_code("kind: spec\nr: 2\ns: 1\nR1: 1 0 ; 0\nL1: 0 0 ; 0 0\n"
                   "sigma11: 0 0\n") == Errc::parse_error);
}

TEST_CASE("zero brackets may be written explicitly") {
  Document doc = parse_document("kind: algebra\ndim: 1\nbasis: e\n[e,e] = 0\n");
  CHECK(std::get<LeibnizAlgebra>(doc).bracket_basis(0, 0) == Vec{R(0)});
}

TEST_CASE("digests are the fnv1a reference values") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("abc") == "e71fa2190541574b");
}

TEST_CASE("reports render deterministically") {
  Report rep;
  rep.command = "probe";
  rep.input_digest = digest_hex("data");
  rep.fields["alpha"] = "one";
  rep.fields["beta"] = 2;
  rep.exit_code = 0;
  std::string text = render_text(rep);
  CHECK(text ==
        "command: probe\n"
        "input: fnv1a:" + digest_hex("data") + "\n"
        "alpha: one\n"
        "beta: 2\n");
  auto j = nlohmann::json::parse(render_json(rep));
  CHECK(j["command"] == "probe");
  CHECK(j["exit"] == 0);
  CHECK(j["result"]["beta"] == 2);
  CHECK(render_json(rep) == render_json(rep));
}

}  // TEST_SUITE
