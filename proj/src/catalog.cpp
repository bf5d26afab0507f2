#include "leib/catalog.hpp"

#include <sstream>

namespace leib {

namespace {

struct RowDef {
  const char* id;
  int r;
  const char* R;
  const char* L;
  const char* sigma;  // tokens 0 | F | N per coordinate
  const char* restr;  // comma list like "a!=0,b!=-1", may be ""
  int flags;          // 1 = sigma not all zero, 2 = sigma2 >= sigma3
};

// The classification table, stored as printed.
const RowDef kRows[] = {
    {"1", 1, "0", "1", "F", "", 0},
    {"2.1", 2, "0 0; 0 0", "1 0; 0 0", "0 F", "", 0},
    {"2.2", 2, "0 0; 0 0", "1 0; 0 a", "0 0", "a!=0", 0},
    {"2.3", 2, "0 0; 0 0", "1 1; 0 1", "0 0", "", 0},
    {"2.4", 2, "1 0; 0 0", "-1 0; 0 a", "F 0", "a!=0", 0},
    {"2.5", 2, "1 0; 0 0", "-1 0; 0 0", "F F", "", 1},
    {"3.1", 3, "0 0 0; 0 0 0; 0 0 0", "1 0 0; 0 0 0; 0 0 0", "0 F F", "", 0},
    {"3.2", 3, "0 0 0; 0 0 0; 0 0 0", "1 0 0; 0 a 0; 0 0 0", "0 0 F", "a!=0",
     0},
    {"3.3", 3, "0 0 0; 0 0 0; 0 0 0", "1 0 0; 0 a 0; 0 0 b", "0 0 0",
     "a!=0,b!=0", 0},
    {"3.4", 3, "0 0 0; 0 0 0; 0 0 0", "1 1 0; 0 1 0; 0 0 0", "0 0 F", "", 0},
    {"3.5", 3, "0 0 0; 0 0 0; 0 0 0", "1 0 0; 0 0 1; 0 0 0", "0 F 0", "", 0},
    {"3.6", 3, "0 0 0; 0 0 0; 0 0 0", "1 1 0; 0 1 0; 0 0 a", "0 0 0", "a!=0",
     0},
    {"3.7", 3, "0 0 0; 0 0 0; 0 0 0", "1 0 0; 0 a 1; 0 0 a", "0 0 0",
     "a!=0,a!=1", 0},
    {"3.8", 3, "0 0 0; 0 0 0; 0 0 0", "1 0 0; 0 1 0; 0 0 1", "0 0 0", "", 0},
    {"3.9", 3, "0 1 0; 0 0 0; 0 0 0", "0 -1 a; 0 0 0; 0 0 1", "F F 0", "", 0},
    {"3.10", 3, "0 1 0; 0 0 0; 0 0 0", "0 a b; 0 0 0; 0 0 1", "F 0 0",
     "a!=-1", 0},
    {"3.11", 3, "0 1 0; 0 0 0; 0 0 0", "0 a b; 0 0 0; 0 1 1", "F 0 0", "", 0},
    {"3.12", 3, "1 0 0; 0 0 0; 0 0 0", "-1 0 0; 0 a 0; 0 0 b", "F 0 0",
     "a!=0,b!=0", 0},
    {"3.13", 3, "1 0 0; 0 0 0; 0 0 0", "-1 0 0; 0 a 0; 0 0 0", "F 0 F",
     "a!=0", 0},
    {"3.14", 3, "1 0 0; 0 0 0; 0 0 0", "-1 0 0; 0 a 1; 0 0 a", "F 0 0",
     "a!=0", 0},
    {"3.15", 3, "1 0 0; 0 0 0; 0 0 0", "-1 0 0; 0 0 1; 0 0 0", "F F 0", "", 0},
    {"3.16", 3, "1 0 0; 0 0 0; 0 0 0", "-1 0 0; 0 0 0; 0 0 0", "N N N", "", 2},
    {"3.17", 3, "1 0 0; 0 a 0; 0 0 0", "-1 0 0; 0 -a 0; 0 0 b", "F F 0",
     "a!=0,b!=0", 0},
    {"3.18", 3, "1 0 0; 0 a 0; 0 0 0", "-1 0 0; 0 -a 0; 0 0 0", "N N N",
     "a!=0", 0},
    {"3.19", 3, "1 1 0; 0 1 0; 0 0 0", "-1 -1 0; 0 -1 0; 0 0 a", "F F 0",
     "a!=0", 0},
    {"3.20", 3, "1 1 0; 0 1 0; 0 0 0", "-1 -1 0; 0 -1 0; 0 0 0", "N N N", "",
     0},
    {"3.21", 3, "1 0 0; 0 0 1; 0 0 0", "-1 0 0; 0 0 a; 0 0 0", "F F 0",
     "a!=-1", 0},
    {"3.22", 3, "1 0 0; 0 0 1; 0 0 0", "-1 0 0; 0 0 -1; 0 0 0", "N N N", "",
     0},
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int slot_index(TableEntry& e, const std::string& name) {
  for (size_t i = 0; i < e.param_names.size(); ++i)
    if (e.param_names[i] == name) return static_cast<int>(i);
  e.param_names.push_back(name);
  return static_cast<int>(e.param_names.size()) - 1;
}

std::vector<std::vector<Cell>> parse_pattern(TableEntry& e,
                                             const std::string& text) {
  std::vector<std::vector<Cell>> rows;
  for (const std::string& row_text : split(text, ';')) {
    std::vector<Cell> row;
    for (const std::string& tok : tokens(row_text)) {
      Cell cell;
      if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') {
        cell.kind = CellKind::slot;
        cell.slot = slot_index(e, tok);
      } else if (tok.size() == 2 && tok[0] == '-' && tok[1] >= 'a' &&
                 tok[1] <= 'z') {
        cell.kind = CellKind::neg_slot;
        cell.slot = slot_index(e, tok.substr(1));
      } else {
        cell.kind = CellKind::value;
        cell.value = Rat::parse(tok);
      }
      row.push_back(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

TableEntry make_entry(const RowDef& def) {
  TableEntry e;
  e.id = def.id;
  e.r = def.r;
  e.Rp = parse_pattern(e, def.R);
  e.Lp = parse_pattern(e, def.L);
  for (const std::string& tok : tokens(def.sigma)) {
    if (tok == "0") e.sigma.push_back(SigmaStatus::zero);
    else if (tok == "F") e.sigma.push_back(SigmaStatus::free_coord);
    else if (tok == "N") e.sigma.push_back(SigmaStatus::nonzero);
    else fail(Errc::bad_argument, "bad sigma token in table");
  }
  std::string restr(def.restr);
  if (!restr.empty()) {
    for (const std::string& item : split(restr, ',')) {
      auto pos = item.find("!=");
      std::string name = item.substr(0, pos);
      Rat value = Rat::parse(item.substr(pos + 2));
      e.forbidden.emplace_back(slot_index(e, name), value);
    }
  }
  e.sigma_not_all_zero = def.flags & 1;
  e.sigma_ordered_23 = def.flags & 2;
  return e;
}

Rat eval_cell(const Cell& cell, const std::vector<Rat>& slot_values) {
  switch (cell.kind) {
    case CellKind::value: return cell.value;
    case CellKind::slot: return slot_values[cell.slot];
    case CellKind::neg_slot: return -slot_values[cell.slot];
  }
  return Rat(0);
}

Mat eval_pattern(const std::vector<std::vector<Cell>>& pat,
                 const std::vector<Rat>& slot_values) {
  int r = static_cast<int>(pat.size());
  Mat m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.at(i, j) = eval_cell(pat[i][j], slot_values);
  return m;
}

std::string cell_text(const TableEntry& e, const Cell& cell) {
  switch (cell.kind) {
    case CellKind::value: return cell.value.str();
    case CellKind::slot: return e.param_names[cell.slot];
    case CellKind::neg_slot: return "-" + e.param_names[cell.slot];
  }
  return "?";
}

std::vector<int> forced_zero_coords(const TableEntry& e);

ExtensionSpec instantiate_impl(const TableEntry& e, const ParamMap& params,
                               const std::vector<SigmaStatus>& statuses,
                               bool pin_forced,
                               const std::vector<int>& forced) {
  std::vector<Rat> slot_values(e.param_names.size());
  for (size_t i = 0; i < e.param_names.size(); ++i) {
    auto it = params.find(e.param_names[i]);
    if (it == params.end())
      fail(Errc::missing_parameter,
           "entry (" + e.id + ") needs parameter " + e.param_names[i]);
    slot_values[i] = it->second;
  }
  for (const auto& [slot, value] : e.forbidden)
    if (slot_values[slot] == value)
      fail(Errc::restriction_violated,
           "entry (" + e.id + ") requires " + e.param_names[slot] +
               " != " + value.str());

  std::vector<bool> is_forced(e.r, false);
  for (int k : forced) is_forced[k] = true;

  Vec sigma(e.r);
  for (int k = 0; k < e.r; ++k) {
    std::string name = "sigma" + std::to_string(k + 1);
    auto it = params.find(name);
    Rat value = it == params.end() ? Rat(0) : it->second;
    SigmaStatus st = statuses[k];
    if (pin_forced && is_forced[k]) st = SigmaStatus::zero;
    switch (st) {
      case SigmaStatus::zero:
        if (!value.is_zero())
          fail(Errc::restriction_violated,
               "entry (" + e.id + ") has " + name + " = 0");
        break;
      case SigmaStatus::free_coord:
        break;
      case SigmaStatus::nonzero:
        if (it == params.end())
          fail(Errc::missing_parameter,
               "entry (" + e.id + ") needs nonzero " + name);
        if (value.is_zero())
          fail(Errc::restriction_violated,
               "entry (" + e.id + ") requires " + name + " != 0");
        break;
    }
    sigma[k] = value;
  }
  if (e.sigma_not_all_zero && is_zero(sigma))
    fail(Errc::restriction_violated,
         "entry (" + e.id + ") requires a nonzero sigma");
  if (e.sigma_ordered_23 && sigma[1] < sigma[2])
    fail(Errc::restriction_violated,
         "entry (" + e.id + ") requires sigma2 >= sigma3");

  for (const auto& [name, value] : params) {
    bool known = false;
    for (const std::string& p : e.param_names) known |= name == p;
    for (int k = 1; k <= e.r; ++k) known |= name == "sigma" + std::to_string(k);
    if (!known)
      fail(Errc::bad_argument,
           "entry (" + e.id + ") has no parameter " + name);
  }

  ExtensionSpec spec = ExtensionSpec::zero(e.r, 1);
  spec.R[0] = eval_pattern(e.Rp, slot_values);
  spec.L[0] = eval_pattern(e.Lp, slot_values);
  spec.sigma[0][0] = sigma;
  return spec;
}

// Coordinates k with a nonzero printed row k of R: e_k then falls outside
// NS(R^T) for every admissible slot value. Verified on two slot samples.
std::vector<int> forced_zero_coords(const TableEntry& e) {
  std::vector<std::vector<int>> per_sample;
  for (int sample = 0; sample < 2; ++sample) {
    std::vector<Rat> slot_values(e.param_names.size());
    for (size_t i = 0; i < e.param_names.size(); ++i) {
      Rat v(sample == 0 ? 2 + static_cast<long>(i) : 5 + 2 * static_cast<long>(i));
      for (const auto& [slot, bad] : e.forbidden)
        while (slot == static_cast<int>(i) && v == bad) v += Rat(1);
      slot_values[i] = v;
    }
    Mat rmat = eval_pattern(e.Rp, slot_values);
    Subspace ns = sigma_nullspace(rmat);
    std::vector<int> forced;
    int zero_rows = 0;
    for (int k = 0; k < e.r; ++k) {
      Vec ek(e.r);
      ek[k] = Rat(1);
      if (!ns.contains(ek)) forced.push_back(k);
      else ++zero_rows;
    }
    if (ns.dim() != zero_rows)
      fail(Errc::bad_argument,
           "entry (" + e.id + ") has a non-coordinate sigma domain");
    per_sample.push_back(std::move(forced));
  }
  if (per_sample[0] != per_sample[1])
    fail(Errc::bad_argument,
         "entry (" + e.id + ") has a parameter-dependent sigma domain");
  return per_sample[0];
}

}  // namespace

std::string TableEntry::restriction_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [slot, value] : forbidden) {
    if (!first) os << ", ";
    os << param_names[slot] << " != " << value;
    first = false;
  }
  if (sigma_not_all_zero) {
    if (!first) os << ", ";
    os << "sigma not all zero";
    first = false;
  }
  if (sigma_ordered_23) {
    if (!first) os << ", ";
    os << "sigma2 >= sigma3";
    first = false;
  }
  return first ? "none" : os.str();
}

std::string TableEntry::sigma_text() const {
  std::ostringstream os;
  for (size_t k = 0; k < sigma.size(); ++k) {
    if (k) os << " ";
    switch (sigma[k]) {
      case SigmaStatus::zero: os << "0"; break;
      case SigmaStatus::free_coord: os << "free"; break;
      case SigmaStatus::nonzero: os << "nonzero"; break;
    }
  }
  return os.str();
}

std::string TableEntry::matrix_text(bool left) const {
  const auto& pat = left ? Lp : Rp;
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < pat.size(); ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < pat[i].size(); ++j) {
      if (j) os << " ";
      os << cell_text(*this, pat[i][j]);
    }
  }
  os << "]";
  return os.str();
}

const std::vector<TableEntry>& catalog() {
  static const std::vector<TableEntry> entries = [] {
    std::vector<TableEntry> out;
    for (const RowDef& def : kRows) out.push_back(make_entry(def));
    return out;
  }();
  return entries;
}

const TableEntry& catalog_entry(const std::string& id) {
  for (const TableEntry& e : catalog())
    if (e.id == id) return e;
  fail(Errc::bad_argument, "no catalog entry (" + id + ")");
}

ExtensionSpec instantiate(const TableEntry& e, const ParamMap& params) {
  return instantiate_impl(e, params, e.sigma, false, {});
}

ExtensionSpec instantiate_corrected(const TableEntry& e,
                                    const ParamMap& params) {
  return instantiate_impl(e, params, e.sigma, true, forced_zero_coords(e));
}

AuditReport audit_entry(const TableEntry& e) {
  AuditReport rep;
  rep.id = e.id;
  rep.printed = e.sigma;
  rep.forced_zero = forced_zero_coords(e);
  rep.corrected = e.sigma;
  for (int k : rep.forced_zero) {
    if (e.sigma[k] != SigmaStatus::zero) rep.flagged = true;
    rep.corrected[k] = SigmaStatus::zero;
  }

  {
    std::ostringstream os;
    os << "sigma pattern (" << e.sigma_text() << ")";
    if (e.sigma_not_all_zero) os << ", not all zero";
    if (e.sigma_ordered_23) os << ", sigma2 >= sigma3";
    rep.printed_domain = os.str();
  }
  {
    std::ostringstream os;
    os << "NS(R^T) = span{";
    bool first = true;
    for (int k = 0; k < e.r; ++k) {
      bool forced = false;
      for (int f : rep.forced_zero) forced |= f == k;
      if (forced) continue;
      if (!first) os << ", ";
      os << "e" << k + 1;
      first = false;
    }
    os << "}";
    rep.derived_domain = os.str();
  }

  // Antisymmetric sublocus: solve L = -R over the slots, then inspect the
  // sigma restrictions at sigma = 0.
  std::ostringstream why;
  bool possible = true;
  std::map<int, Rat> assignment;
  for (int i = 0; i < e.r && possible; ++i)
    for (int j = 0; j < e.r && possible; ++j) {
      const Cell& lc = e.Lp[i][j];
      const Cell& rc = e.Rp[i][j];
      // Want value(L) + value(R) == 0 pointwise.
      if (lc.kind == CellKind::value && rc.kind == CellKind::value) {
        if (lc.value + rc.value != Rat(0)) {
          possible = false;
          why << "L + R != 0 at (" << i + 1 << "," << j + 1 << ")";
        }
      } else if (lc.kind != CellKind::value && rc.kind != CellKind::value) {
        bool opposite = lc.slot == rc.slot && lc.kind != rc.kind;
        bool same = lc.slot == rc.slot && lc.kind == rc.kind;
        if (opposite) continue;  // -a vs a, holds identically
        if (same) {
          // a + a = 0 forces a = 0.
          assignment.emplace(lc.slot, Rat(0));
        } else {
          possible = false;
          why << "cross-slot relation at (" << i + 1 << "," << j + 1 << ")";
        }
      } else {
        const Cell& sc = lc.kind == CellKind::value ? rc : lc;
        const Cell& vc = lc.kind == CellKind::value ? lc : rc;
        Rat needed = -vc.value;
        if (sc.kind == CellKind::neg_slot) needed = -needed;
        auto [it, inserted] = assignment.emplace(sc.slot, needed);
        if (!inserted && it->second != needed) {
          possible = false;
          why << "conflicting values for " << e.param_names[sc.slot];
        }
      }
    }
  if (possible) {
    for (const auto& [slot, value] : assignment)
      for (const auto& [fslot, bad] : e.forbidden)
        if (fslot == slot && value == bad) {
          possible = false;
          why << e.param_names[slot] << " = " << value
              << " is excluded by the printed restriction";
        }
  }
  if (possible) {
    // L = -R is attainable; antisymmetry additionally needs sigma = 0.
    bool sigma_zero_allowed = !e.sigma_not_all_zero;
    for (int k = 0; k < e.r && sigma_zero_allowed; ++k)
      if (rep.corrected[k] == SigmaStatus::nonzero) sigma_zero_allowed = false;
    if (sigma_zero_allowed) {
      rep.lie_sublocus_empty = false;
      std::ostringstream os;
      os << "L = -R with sigma = 0";
      for (const auto& [slot, value] : assignment)
        os << ", " << e.param_names[slot] << " = " << value;
      rep.lie_sublocus = os.str();
    } else {
      rep.lie_sublocus =
          "empty: L = -R is attainable but sigma = 0 is excluded by the "
          "sigma restrictions";
    }
  } else {
    rep.lie_sublocus = "empty: " + why.str();
  }
  return rep;
}

ParamMap default_corrected_params(const TableEntry& e) {
  static const Rat pool[] = {Rat(1), Rat(2),  Rat(3), Rat(1, 2),
                             Rat(-1), Rat(-2), Rat(5)};
  ParamMap params;
  constexpr size_t pool_size = sizeof(pool) / sizeof(pool[0]);
  for (size_t i = 0; i < e.param_names.size(); ++i) {
    // Staggered start keeps multi-slot rows away from coincidences like the
    // all-ones diagonal.
    for (size_t step = 0; step < pool_size; ++step) {
      const Rat& v = pool[(i + step) % pool_size];
      bool ok = true;
      for (const auto& [slot, bad] : e.forbidden)
        if (slot == static_cast<int>(i) && v == bad) ok = false;
      if (ok) {
        params[e.param_names[i]] = v;
        break;
      }
    }
  }
  std::vector<int> forced;
  {
    AuditReport rep = audit_entry(e);
    forced = rep.forced_zero;
  }
  for (int k = 0; k < e.r; ++k) {
    bool is_forced = false;
    for (int f : forced) is_forced |= f == k;
    if (is_forced) continue;
    if (e.sigma[k] != SigmaStatus::zero)
      params["sigma" + std::to_string(k + 1)] = Rat(1);
  }
  return params;
}

}  // namespace leib
