#include <doctest.h>

#include "leib/classifier.hpp"

using namespace leib;

namespace {

Rat R(long n) { return Rat(n); }

ExtensionSpec r1_spec(const Rat& r, const Rat& l, const Rat& s) {
  ExtensionSpec spec = ExtensionSpec::zero(1, 1);
  spec.R[0].at(0, 0) = r;
  spec.L[0].at(0, 0) = l;
  spec.sigma[0][0][0] = s;
  return spec;
}

ExtensionSpec row_instance(const std::string& id, const ParamMap& params) {
  return instantiate_corrected(catalog_entry(id), params);
}

Errc canon_error(const ExtensionSpec& spec) {
  try {
    canonicalize_r1(spec);
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::bad_argument;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("a rescaled free action lands in the first r2 row") {
  ExtensionSpec spec = ExtensionSpec::zero(2, 1);
  spec.L[0] = Mat::diag(Vec{R(5), R(0)});
  spec.sigma[0][0] = Vec{R(3), R(7)};
  CanonicalForm form = canonicalize_r1(spec);
  CHECK(form.entry_id == "2.1");
  CHECK(form.params.at("sigma2") == R(1));
  CHECK(form.canonical.L[0] == Mat::diag(Vec{R(1), R(0)}));
  CHECK(form.canonical.sigma[0][0] == Vec{R(0), R(1)});
  CHECK(apply_trail(spec, form.trail) == form.canonical);
}

TEST_CASE("exact catalog instances are fixed points") {
  ExtensionSpec spec = row_instance("3.4", {{"sigma3", R(1)}});
  CanonicalForm form = canonicalize_r1(spec);
  CHECK(form.entry_id == "3.4");
  CHECK(form.trail.empty());
  CHECK(form.canonical == spec);
}

TEST_CASE("the one dimensional row absorbs its sigma") {
  ExtensionSpec spec = r1_spec(R(0), R(2), R(4));
  CanonicalForm form = canonicalize_r1(spec);
  CHECK(form.entry_id == "1");
  CHECK(form.params.at("sigma1") == R(0));
  CHECK(form.canonical.L[0].at(0, 0) == R(1));
  CHECK(form.canonical.sigma[0][0][0] == R(0));
}

TEST_CASE("parameter redundancies collapse deterministically") {
  CanonicalForm inv = canonicalize_r1(row_instance("2.2", {{"a", Rat(1, 2)}}));
  CHECK(inv.entry_id == "2.2");
  CHECK(inv.params.at("a") == R(2));

  CanonicalForm seven = canonicalize_r1(row_instance("3.7", {{"a", R(3)}}));
  CHECK(seven.entry_id == "3.6");
  CHECK(seven.params.at("a") == Rat(1, 3));

  CanonicalForm twelve =
      canonicalize_r1(row_instance("3.12", {{"a", R(1)}, {"b", R(2)}}));
  CHECK(twelve.entry_id == "3.12");
  CHECK(twelve.params.at("a") == R(2));
  CHECK(twelve.params.at("b") == R(1));

  // The second column slot of 3.10 is removable.
  CanonicalForm ten =
      canonicalize_r1(row_instance("3.10", {{"a", R(3)}, {"b", R(2)}}));
  CHECK(ten.entry_id == "3.10");
  CHECK(ten.params.at("a") == R(3));
  CHECK(ten.params.at("b") == R(0));

  // 3.11 folds into 3.10 at parameter a - b, or into 3.9 when that value
  // is the forbidden -1.
  CanonicalForm fold =
      canonicalize_r1(row_instance("3.11", {{"a", R(0)}, {"b", R(3)}}));
  CHECK(fold.entry_id == "3.10");
  CHECK(fold.params.at("a") == R(-3));
  CanonicalForm edge =
      canonicalize_r1(row_instance("3.11", {{"a", R(2)}, {"b", R(3)}}));
  CHECK(edge.entry_id == "3.9");
}

TEST_CASE("error taxonomy") {
  CHECK(canon_error(r1_spec(R(1), R(-1), R(0))) == Errc::lie_instance);
  CHECK(canon_error(r1_spec(R(1), R(0), R(0))) == Errc::invalid_spec);
  CHECK(canon_error(ExtensionSpec::zero(4, 1)) == Errc::bad_argument);
  CHECK(canon_error(ExtensionSpec::zero(2, 2)) == Errc::bad_argument);

  // Printed sigma values outside the derived domain are invalid specs.
  ExtensionSpec printed = instantiate(
      catalog_entry("3.16"),
      {{"sigma1", R(1)}, {"sigma2", R(2)}, {"sigma3", R(1)}});
  CHECK(canon_error(printed) == Errc::invalid_spec);

  ExtensionSpec irr = ExtensionSpec::zero(2, 1);
  irr.L[0] = Mat{{R(0), R(1)}, {R(-1), R(1)}};
  CHECK(canon_error(irr) == Errc::irrational_spectrum);
}

TEST_CASE("orbit samples recover their row") {
  struct Probe {
    const char* id;
    ParamMap params;
  };
  const Probe probes[] = {
      {"1", {{"sigma1", R(0)}}},
      {"2.2", {{"a", R(2)}}},
      {"3.16", {{"sigma2", R(2)}, {"sigma3", R(1)}}},
  };
  for (const auto& p : probes) {
    CAPTURE(p.id);
    ExtensionSpec spec = row_instance(p.id, p.params);
    CanonicalForm base = canonicalize_r1(spec);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      OrbitSample sample = random_orbit_sample(spec, seed, 4);
      CanonicalForm moved = canonicalize_r1(sample.spec);
      CHECK(moved.entry_id == base.entry_id);
      CHECK(moved.params == base.params);
      CHECK(moved.canonical == base.canonical);
    }
  }
}

TEST_CASE("match couples the form with its audit row") {
  ExtensionSpec spec = row_instance("2.5", {{"sigma2", R(1)}});
  CatalogMatch m = match_catalog(spec);
  CHECK(m.form.entry_id == "2.5");
  CHECK(m.audit.id == "2.5");
  CHECK(m.audit.flagged);
}

TEST_CASE("fingerprints separate structurally different algebras") {
  LeibnizAlgebra row22 = build_algebra(row_instance("2.2", {{"a", R(2)}}));
  Fingerprint fp = invariant_fingerprint(row22);
  CHECK(fp.dim == 3);
  CHECK(fp.derived_dims == std::vector<int>{3, 2, 0});
  CHECK(fp.lower_dims == std::vector<int>{3, 2});
  CHECK(fp.annihilator_dim == 2);
  CHECK_FALSE(fp.lie);
  CHECK(fp.solvable);
  CHECK_FALSE(fp.nilpotent);
  CHECK_FALSE(fp.str().empty());

  LeibnizAlgebra abelian(std::vector<std::string>{"n1", "n2"},
                         std::vector<Rat>(8));
  Fingerprint flat = invariant_fingerprint(abelian);
  CHECK(flat.lie);
  CHECK(flat.nilpotent);
  CHECK_FALSE(fp == flat);
  CHECK(fp.str() != flat.str());
}

TEST_CASE("fingerprints are orbit invariants") {
  ExtensionSpec spec = row_instance("3.16", {{"sigma2", R(2)}, {"sigma3", R(1)}});
  Fingerprint base = invariant_fingerprint(build_algebra(spec));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    OrbitSample sample = random_orbit_sample(spec, seed, 5);
    CHECK(invariant_fingerprint(build_algebra(sample.spec)) == base);
  }
}

TEST_CASE("emptiness certificates verify") {
  for (const char* id :
       {"r2_jordan_nilpotent", "r3_full_nilpotent", "l22_nondiagonal"}) {
    CAPTURE(id);
    EmptinessCertificate cert = verify_empty_case(id);
    CHECK(cert.verified);
    CHECK(cert.case_id == id);
    CHECK_FALSE(cert.statement.empty());
    CHECK_FALSE(cert.evidence.empty());
    // every machine-checked step is tagged; the closing inference is prose
    int checked = 0;
    for (const auto& line : cert.evidence) {
      CHECK_FALSE(line.empty());
      if (line.find("[checked]") != std::string::npos) ++checked;
    }
    CHECK(checked >= 2);
    CHECK(cert.evidence.back().find("empty") != std::string::npos);
  }
  try {
    verify_empty_case("nonsense");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_case);
  }
}

}  // TEST_SUITE
