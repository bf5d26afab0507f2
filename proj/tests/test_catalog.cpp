#include <doctest.h>

#include <set>

#include "leib/catalog.hpp"

using namespace leib;

namespace {

Errc thrown_code(const TableEntry& e, const ParamMap& params, bool corrected) {
  try {
    if (corrected)
      instantiate_corrected(e, params);
    else
      instantiate(e, params);
  } catch (const Error& err) {
    return err.code();
  }
  REQUIRE(false);
  return Errc::bad_argument;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("the table has 28 distinct rows") {
  const auto& rows = catalog();
  CHECK(rows.size() == 28);
  std::set<std::string> ids;
  for (const auto& e : rows) ids.insert(e.id);
  CHECK(ids.size() == 28);
  CHECK(ids.count("1") == 1);
  for (int k = 1; k <= 5; ++k) CHECK(ids.count("2." + std::to_string(k)) == 1);
  for (int k = 1; k <= 22; ++k) CHECK(ids.count("3." + std::to_string(k)) == 1);
  CHECK(catalog_entry("1").r == 1);
  CHECK(catalog_entry("2.3").r == 2);
  CHECK(catalog_entry("3.22").r == 3);
}

TEST_CASE("unknown ids are rejected") {
  try {
    catalog_entry("9.9");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_argument);
  }
}

TEST_CASE("row 2.2 stores a diagonal one parameter action") {
  const TableEntry& e = catalog_entry("2.2");
  CHECK(e.param_names == std::vector<std::string>{"a"});
  ExtensionSpec spec = instantiate(e, {{"a", Rat(2)}});
  CHECK(spec.R[0].is_zero());
  CHECK(spec.L[0] == Mat::diag(Vec{Rat(1), Rat(2)}));
  CHECK(is_zero(spec.sigma[0][0]));
  CHECK(e.matrix_text(true).find('a') != std::string::npos);
  CHECK(e.restriction_text().find("a != 0") != std::string::npos);
}

TEST_CASE("printed restrictions are enforced") {
  const TableEntry& e = catalog_entry("2.2");
  CHECK(thrown_code(e, {{"a", Rat(0)}}, false) == Errc::restriction_violated);
  CHECK(thrown_code(e, {}, false) == Errc::missing_parameter);
}

TEST_CASE("row 3.16 prints nonzero sigmas with an order convention") {
  const TableEntry& e = catalog_entry("3.16");
  CHECK(e.r == 3);
  ExtensionSpec spec = instantiate(
      e, {{"sigma1", Rat(1)}, {"sigma2", Rat(2)}, {"sigma3", Rat(1)}});
  CHECK(spec.R[0] == Mat::diag(Vec{Rat(1), Rat(0), Rat(0)}));
  CHECK(spec.L[0] == -spec.R[0]);
  CHECK(spec.sigma[0][0] == Vec{Rat(1), Rat(2), Rat(1)});
  // Missing or zero values break the printed nonzero requirement.
  CHECK(thrown_code(e, {{"sigma2", Rat(2)}, {"sigma3", Rat(1)}}, false) ==
        Errc::missing_parameter);
  CHECK(thrown_code(e, {{"sigma1", Rat(0)}, {"sigma2", Rat(2)},
                        {"sigma3", Rat(1)}},
                    false) == Errc::restriction_violated);
  // sigma2 >= sigma3 is part of the printed row.
  CHECK(thrown_code(e, {{"sigma1", Rat(1)}, {"sigma2", Rat(1)},
                        {"sigma3", Rat(2)}},
                    false) == Errc::restriction_violated);
}

TEST_CASE("the audited domain pins the forced coordinates") {
  const TableEntry& e = catalog_entry("3.16");
  // sigma1 is outside NS(R^T) for R = diag(1,0,0): corrected instantiation
  // drops the printed nonzero requirement and pins the value to zero.
  ExtensionSpec spec =
      instantiate_corrected(e, {{"sigma2", Rat(2)}, {"sigma3", Rat(1)}});
  CHECK(spec.sigma[0][0] == Vec{Rat(0), Rat(2), Rat(1)});
  CHECK(thrown_code(e, {{"sigma1", Rat(1)}, {"sigma2", Rat(2)},
                        {"sigma3", Rat(1)}},
                    true) == Errc::restriction_violated);
}

TEST_CASE("audit flags are driven by the derived domain") {
  AuditReport flagged = audit_entry(catalog_entry("2.4"));
  CHECK(flagged.flagged);
  CHECK(flagged.forced_zero == std::vector<int>{0});
  CHECK(flagged.corrected[0] == SigmaStatus::zero);
  CHECK_FALSE(flagged.derived_domain.empty());

  for (const char* id : {"1", "2.1", "2.2", "3.4"}) {
    CAPTURE(id);
    CHECK_FALSE(audit_entry(catalog_entry(id)).flagged);
  }
  CHECK(audit_entry(catalog_entry("3.16")).forced_zero ==
        std::vector<int>{0});
}

TEST_CASE("no printed row has an antisymmetric instance") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    AuditReport rep = audit_entry(e);
    CHECK(rep.lie_sublocus_empty);
    CHECK_FALSE(rep.lie_sublocus.empty());
  }
}

TEST_CASE("default corrected parameters instantiate every row validly") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    ParamMap params = default_corrected_params(e);
    ExtensionSpec spec = instantiate_corrected(e, params);
    ValidationResult res = validate_spec(spec);
    CHECK(res.valid);
  }
}

TEST_CASE("default parameters respect the forbidden values") {
  for (const auto& e : catalog()) {
    ParamMap params = default_corrected_params(e);
    for (const auto& [slot, bad] : e.forbidden) {
      CAPTURE(e.id);
      CHECK(params.at(e.param_names[slot]) != bad);
    }
  }
}

}  // TEST_SUITE
