#pragma once

#include <map>
#include <string>
#include <vector>

#include "leib/catalog.hpp"
#include "leib/transforms.hpp"

namespace leib {

struct CanonicalForm {
  std::string entry_id;
  ParamMap params;  // matrix slots plus canonical sigma coordinates
  ExtensionSpec canonical;
  std::vector<TransformStep> trail;  // input * trail == canonical
};

// Canonical representative of the isomorphism orbit of a valid s = 1 spec
// with r <= 3, matched against the classification catalog.
// Errors: InvalidSpec (validation fails), LieInstance (the bracket is
// antisymmetric, outside the table's scope), IrrationalSpectrum (a needed
// Jordan form does not exist over Q), NoMatch (no printed row fits),
// BadArgument (r > 3 or s != 1).
CanonicalForm canonicalize_r1(const ExtensionSpec& spec);

struct CatalogMatch {
  CanonicalForm form;
  AuditReport audit;
};

CatalogMatch match_catalog(const ExtensionSpec& spec);

struct Fingerprint {
  int dim = 0;
  std::vector<int> derived_dims;
  std::vector<int> lower_dims;
  int annihilator_dim = 0;
  bool lie = false;
  bool solvable = false;
  bool nilpotent = false;

  std::string str() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint invariant_fingerprint(const LeibnizAlgebra& alg);

struct EmptinessCertificate {
  std::string case_id;
  std::string statement;
  std::vector<std::string> evidence;
  bool verified = false;
};

// Machine-checked emptiness arguments for the three catalogued impossible
// shapes: "r2_jordan_nilpotent", "r3_full_nilpotent", "l22_nondiagonal".
// UnknownCase for anything else.
EmptinessCertificate verify_empty_case(const std::string& case_id);

}  // namespace leib
