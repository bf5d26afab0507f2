#pragma once

#include <map>
#include <string>
#include <vector>

#include "leib/extension.hpp"

namespace leib {

enum class CellKind { value, slot, neg_slot };

struct Cell {
  CellKind kind = CellKind::value;
  Rat value;     // kind == value
  int slot = -1; // index into param_names otherwise
};

enum class SigmaStatus { zero, free_coord, nonzero };

// One printed classification row, stored as printed. Slots are named
// parameters; sigma coordinates carry a per-coordinate status plus the two
// row-level flags that appear in the table.
struct TableEntry {
  std::string id;
  int r = 0;
  std::vector<std::vector<Cell>> Rp, Lp;
  std::vector<SigmaStatus> sigma;
  std::vector<std::string> param_names;
  std::vector<std::pair<int, Rat>> forbidden;  // (slot, excluded value)
  bool sigma_not_all_zero = false;
  bool sigma_ordered_23 = false;  // sigma2 >= sigma3

  std::string restriction_text() const;
  std::string sigma_text() const;
  std::string matrix_text(bool left) const;
};

const std::vector<TableEntry>& catalog();
const TableEntry& catalog_entry(const std::string& id);  // BadArgument

using ParamMap = std::map<std::string, Rat>;

// Instantiates the printed row: every matrix slot is required
// (MissingParameter), printed restrictions are enforced
// (RestrictionViolated). sigma parameters are named sigma1..sigmar; zero
// coordinates may be omitted or given as 0, free ones default to 0, nonzero
// ones are required and must be nonzero.
ExtensionSpec instantiate(const TableEntry& e, const ParamMap& params);

// Same, but over the audited domain: coordinates forced to zero by
// sigma^T R = 0 are pinned to 0 and their printed nonzero-requirements are
// dropped; everything else is unchanged.
ExtensionSpec instantiate_corrected(const TableEntry& e,
                                    const ParamMap& params);

struct AuditReport {
  std::string id;
  std::vector<int> forced_zero;        // 0-based coordinates with e_k outside NS(R^T)
  std::vector<SigmaStatus> printed;
  std::vector<SigmaStatus> corrected;  // forced coordinates set to zero
  bool flagged = false;  // printed sigma-domain not contained in NS(R^T)
  bool lie_sublocus_empty = true;
  std::string lie_sublocus;
  std::string printed_domain;
  std::string derived_domain;
};

// Recomputes the sigma-domain NS(R^T) from the printed R pattern (sampling
// any R slots at two values and requiring agreement) and compares it with
// the printed sigma statuses. Also solves L = -R over the slots to describe
// the antisymmetric sublocus of the row.
AuditReport audit_entry(const TableEntry& e);

// Deterministic parameter choice inside the audited domain: first allowed
// pool value per slot, 1 for free and nonzero sigma coordinates.
ParamMap default_corrected_params(const TableEntry& e);

}  // namespace leib
