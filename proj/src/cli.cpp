#include "leib/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "leib/catalog.hpp"
#include "leib/classifier.hpp"
#include "leib/io.hpp"
#include "leib/l22.hpp"
#include "leib/transforms.hpp"

namespace leib {

namespace {

using nlohmann::ordered_json;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::bad_argument:
    case Errc::missing_parameter:
    case Errc::restriction_violated:
    case Errc::unknown_case:
      return 2;
    default:
      return 1;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_argument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LeibnizAlgebra to_algebra(const Document& doc) {
  if (std::holds_alternative<LeibnizAlgebra>(doc))
    return std::get<LeibnizAlgebra>(doc);
  return build_algebra(std::get<ExtensionSpec>(doc));
}

const ExtensionSpec& to_spec(const Document& doc) {
  if (!std::holds_alternative<ExtensionSpec>(doc))
    fail(Errc::bad_argument, "this command needs a 'kind: spec' input");
  return std::get<ExtensionSpec>(doc);
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) fail(Errc::bad_argument, "empty list entry");
    out.push_back(Rat::parse(tok));
  }
  if (out.empty()) fail(Errc::bad_argument, "empty list");
  return out;
}

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos)
      fail(Errc::bad_argument, "parameters look like name=value, got '" +
                                   tok + "'");
    out[tok.substr(0, eq)] = Rat::parse(tok.substr(eq + 1));
  }
  return out;
}

ordered_json params_json(const ParamMap& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : params) j[name] = value.str();
  return j;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

const char* step_name(StepKind k) {
  switch (k) {
    case StepKind::basis_change:
      return "basis-change";
    case StepKind::shift:
      return "shift";
    case StepKind::recombination:
      return "recombination";
  }
  return "?";
}

struct Runner {
  bool json = false;
  std::ostream& out;

  int finish(Report& rep) {
    out << (json ? render_json(rep) : render_text(rep));
    return rep.exit_code;
  }

  int run(const std::string& name, const std::function<void(Report&)>& body) {
    Report rep;
    rep.command = name;
    try {
      body(rep);
    } catch (const Error& e) {
      rep.fields = ordered_json::object();
      rep.fields["error"] = errc_name(e.code());
      rep.fields["message"] = e.what();
      rep.exit_code = exit_code_for(e.code());
    }
    return finish(rep);
  }
};

void fill_check(Report& rep, const std::string& text) {
  rep.input_digest = digest_hex(text);
  LeibnizAlgebra alg = to_algebra(parse_document(text));
  rep.fields["dim"] = alg.dim();
  auto violations = check_left_leibniz(alg);
  rep.fields["identity"] = violations.empty() ? "holds" : "fails";
  rep.fields["violations"] = violations.size();
  if (!violations.empty()) {
    const auto& v = violations.front();
    rep.fields["first"] = "(" + alg.labels()[v.i] + "," + alg.labels()[v.j] +
                          "," + alg.labels()[v.k] + ") residual " +
                          vec_str(v.residual);
    rep.exit_code = 1;
  }
  rep.fields["antisymmetric"] = yesno(is_lie(alg));
}

void fill_series(Report& rep, const std::string& text,
                 const std::string& kind) {
  rep.input_digest = digest_hex(text);
  LeibnizAlgebra alg = to_algebra(parse_document(text));
  SeriesKind sk;
  if (kind == "derived")
    sk = SeriesKind::derived;
  else if (kind == "lower")
    sk = SeriesKind::lower_central;
  else
    fail(Errc::bad_argument, "series kind is 'derived' or 'lower'");
  SeriesResult sr = series(alg, sk);
  rep.fields["kind"] = kind;
  ordered_json dims = ordered_json::array();
  for (const Subspace& t : sr.terms) dims.push_back(t.dim());
  rep.fields["dims"] = dims;
  rep.fields["outcome"] =
      sr.terminates_at_zero ? "reaches zero" : "stabilizes nonzero";
  if (kind == "derived")
    rep.fields["solvable"] = yesno(sr.terminates_at_zero);
  else
    rep.fields["nilpotent"] = yesno(sr.terminates_at_zero);
}

void fill_annihilator(Report& rep, const std::string& text) {
  rep.input_digest = digest_hex(text);
  LeibnizAlgebra alg = to_algebra(parse_document(text));
  Subspace ann = left_annihilator(alg);
  rep.fields["dim"] = ann.dim();
  ordered_json basis = ordered_json::array();
  for (const Vec& v : ann.basis()) basis.push_back(vec_str(v));
  rep.fields["basis"] = basis;
}

void fill_nilradical(Report& rep, const std::string& text,
                     const std::string& candidate) {
  rep.input_digest = digest_hex(text);
  Document doc = parse_document(text);
  LeibnizAlgebra alg = to_algebra(doc);
  std::vector<Vec> gens;
  if (candidate.empty()) {
    if (!std::holds_alternative<ExtensionSpec>(doc))
      fail(Errc::bad_argument,
           "--candidate is required for a 'kind: algebra' input");
    int r = std::get<ExtensionSpec>(doc).r;
    for (int i = 0; i < r; ++i) {
      Vec v(alg.dim());
      v[i] = Rat(1);
      gens.push_back(std::move(v));
    }
  } else {
    std::istringstream is(candidate);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      auto it = std::find(alg.labels().begin(), alg.labels().end(), tok);
      if (it == alg.labels().end())
        fail(Errc::bad_argument, "unknown basis label '" + tok + "'");
      Vec v(alg.dim());
      v[it - alg.labels().begin()] = Rat(1);
      gens.push_back(std::move(v));
    }
  }
  Subspace cand = Subspace::span(alg.dim(), gens);
  rep.fields["candidate-dim"] = cand.dim();
  NilradicalResult nr = nilradical_check(alg, cand);
  rep.fields["certified"] = yesno(nr.is_nilradical);
  rep.fields["reason"] = nr.reason;
  rep.exit_code = nr.is_nilradical ? 0 : 1;
}

void fill_validate(Report& rep, const std::string& text) {
  rep.input_digest = digest_hex(text);
  ExtensionSpec spec = to_spec(parse_document(text));
  ValidationResult vr = validate_spec(spec);
  rep.fields["valid"] = yesno(vr.valid);
  ordered_json failures = ordered_json::array();
  for (const std::string& f : vr.failures) failures.push_back(f);
  rep.fields["failures"] = failures;
  if (!vr.constraints.nilindependence_certificate.empty())
    rep.fields["nilindependence"] = vr.constraints.nilindependence_certificate;
  if (!vr.nilradical.reason.empty())
    rep.fields["nilradical"] = vr.nilradical.reason;
  rep.exit_code = vr.valid ? 0 : 1;
}

void fill_canonicalize(Report& rep, const std::string& text) {
  rep.input_digest = digest_hex(text);
  ExtensionSpec spec = to_spec(parse_document(text));
  CanonicalForm form = canonicalize_r1(spec);
  rep.fields["entry"] = form.entry_id;
  rep.fields["params"] = params_json(form.params);
  ordered_json trail = ordered_json::array();
  for (const TransformStep& st : form.trail) trail.push_back(step_name(st.kind));
  rep.fields["trail"] = trail;
  rep.fields["canonical"] = emit_spec(form.canonical);
}

void fill_match(Report& rep, const std::string& text) {
  rep.input_digest = digest_hex(text);
  ExtensionSpec spec = to_spec(parse_document(text));
  CatalogMatch m = match_catalog(spec);
  rep.fields["entry"] = m.form.entry_id;
  rep.fields["params"] = params_json(m.form.params);
  rep.fields["row-flagged"] = yesno(m.audit.flagged);
  rep.fields["sigma-domain"] = m.audit.derived_domain;
  rep.fields["canonical"] = emit_spec(m.form.canonical);
}

void fill_catalog(Report& rep, const std::string& entry,
                  const std::string& params) {
  if (entry.empty()) {
    if (!params.empty())
      fail(Errc::bad_argument, "--params needs --entry");
    ordered_json rows = ordered_json::array();
    for (const TableEntry& e : catalog()) {
      ordered_json row = ordered_json::object();
      row["id"] = e.id;
      row["r"] = e.r;
      row["R"] = e.matrix_text(false);
      row["L"] = e.matrix_text(true);
      row["sigma"] = e.sigma_text();
      row["restrictions"] = e.restriction_text();
      rows.push_back(row);
    }
    rep.fields["rows"] = rows;
    return;
  }
  const TableEntry& e = catalog_entry(entry);
  rep.fields["id"] = e.id;
  rep.fields["r"] = e.r;
  rep.fields["R"] = e.matrix_text(false);
  rep.fields["L"] = e.matrix_text(true);
  rep.fields["sigma"] = e.sigma_text();
  rep.fields["restrictions"] = e.restriction_text();
  if (!params.empty()) {
    ExtensionSpec spec = instantiate(e, parse_params(params));
    rep.fields["spec"] = emit_spec(spec);
  }
}

void fill_audit(Report& rep, const std::string& entry) {
  std::vector<const TableEntry*> todo;
  if (entry.empty())
    for (const TableEntry& e : catalog()) todo.push_back(&e);
  else
    todo.push_back(&catalog_entry(entry));
  ordered_json rows = ordered_json::array();
  long long flagged = 0;
  for (const TableEntry* e : todo) {
    AuditReport a = audit_entry(*e);
    ordered_json row = ordered_json::object();
    row["id"] = a.id;
    row["flagged"] = a.flagged;
    ordered_json forced = ordered_json::array();
    for (int k : a.forced_zero) forced.push_back("sigma" + std::to_string(k + 1));
    row["forced-zero"] = forced;
    row["printed"] = a.printed_domain;
    row["derived"] = a.derived_domain;
    row["lie-sublocus"] =
        a.lie_sublocus_empty ? "empty" : a.lie_sublocus;
    rows.push_back(row);
    if (a.flagged) ++flagged;
  }
  rep.fields["rows"] = rows;
  rep.fields["flagged"] = flagged;
  rep.exit_code = flagged > 0 ? 1 : 0;
}

void fill_verify_empty(Report& rep, const std::string& case_id) {
  EmptinessCertificate cert = verify_empty_case(case_id);
  rep.fields["case"] = cert.case_id;
  rep.fields["statement"] = cert.statement;
  ordered_json ev = ordered_json::array();
  for (const std::string& e : cert.evidence) ev.push_back(e);
  rep.fields["evidence"] = ev;
  rep.fields["verified"] = yesno(cert.verified);
  rep.exit_code = cert.verified ? 0 : 1;
}

void fill_verify_l22(Report& rep, const std::string& grid, int jobs) {
  L22Options opts;
  opts.grid = parse_rat_list(grid);
  opts.jobs = jobs;
  L22Report lr = verify_l22(opts);
  ordered_json counts = ordered_json::object();
  counts["cells"] = lr.counts.cells;
  counts["sigma-candidates"] = lr.counts.sigma_candidates;
  counts["valid"] = lr.counts.valid;
  counts["lie"] = lr.counts.lie_valid;
  counts["decomposable-non-lie"] = lr.counts.decomposable_non_lie;
  counts["indecomposable-non-lie"] = lr.counts.indecomposable_non_lie;
  rep.fields["counts"] = counts;
  auto emit_all = [](const std::vector<ExtensionSpec>& specs) {
    ordered_json arr = ordered_json::array();
    for (const ExtensionSpec& s : specs) arr.push_back(emit_spec(s));
    return arr;
  };
  rep.fields["lie-examples"] = emit_all(lr.lie_examples);
  rep.fields["decomposable-examples"] = emit_all(lr.decomposable_examples);
  if (!lr.indecomposable_examples.empty())
    rep.fields["indecomposable-examples"] =
        emit_all(lr.indecomposable_examples);
  rep.exit_code = lr.counts.indecomposable_non_lie == 0 ? 0 : 1;
}

void fill_fingerprint(Report& rep, const std::string& text) {
  rep.input_digest = digest_hex(text);
  LeibnizAlgebra alg = to_algebra(parse_document(text));
  Fingerprint fp = invariant_fingerprint(alg);
  rep.fields["dim"] = fp.dim;
  ordered_json derived = ordered_json::array();
  for (int d : fp.derived_dims) derived.push_back(d);
  rep.fields["derived-dims"] = derived;
  ordered_json lower = ordered_json::array();
  for (int d : fp.lower_dims) lower.push_back(d);
  rep.fields["lower-dims"] = lower;
  rep.fields["annihilator-dim"] = fp.annihilator_dim;
  rep.fields["lie"] = yesno(fp.lie);
  rep.fields["solvable"] = yesno(fp.solvable);
  rep.fields["nilpotent"] = yesno(fp.nilpotent);
  rep.fields["summary"] = fp.str();
}

void fill_orbit_test(Report& rep, const std::string& entry, int seeds,
                     int steps, const std::string& params) {
  if (seeds < 1) fail(Errc::bad_argument, "--seeds must be positive");
  if (steps < 1) fail(Errc::bad_argument, "--steps must be positive");
  const TableEntry& e = catalog_entry(entry);
  ParamMap pm = default_corrected_params(e);
  for (const auto& [name, value] : parse_params(params)) pm[name] = value;
  ExtensionSpec spec0 = instantiate_corrected(e, pm);
  CanonicalForm base = canonicalize_r1(spec0);
  int matches = 0;
  std::string first_mismatch;
  for (int seed = 1; seed <= seeds; ++seed) {
    OrbitSample sample = random_orbit_sample(spec0, seed, steps);
    CanonicalForm cf = canonicalize_r1(sample.spec);
    if (cf.entry_id == base.entry_id && cf.params == base.params &&
        cf.canonical == base.canonical) {
      ++matches;
    } else if (first_mismatch.empty()) {
      first_mismatch = "seed " + std::to_string(seed) + " landed on entry " +
                       cf.entry_id;
    }
  }
  rep.fields["entry"] = entry;
  rep.fields["canonical-entry"] = base.entry_id;
  rep.fields["params"] = params_json(base.params);
  rep.fields["seeds"] = seeds;
  rep.fields["steps"] = steps;
  rep.fields["matches"] = matches;
  rep.fields["stable"] = yesno(matches == seeds);
  if (!first_mismatch.empty()) rep.fields["mismatch"] = first_mismatch;
  rep.exit_code = matches == seeds ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact classification toolkit for low-dimensional left "
               "Leibniz algebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the report as JSON");

  std::string input, kind = "derived", candidate, entry, params, case_id;
  std::string grid;
  int jobs = 1, seeds = 25, steps = 3;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "input file, or - for stdin")->required();
    sub->fallthrough();
    return sub;
  };

  CLI::App* c_check =
      with_input(app.add_subcommand("check", "test the bracket identity"));
  CLI::App* c_series = with_input(
      app.add_subcommand("series", "derived or lower central series"));
  c_series->add_option("--kind", kind, "derived|lower")
      ->check(CLI::IsMember({"derived", "lower"}));
  CLI::App* c_ann = with_input(
      app.add_subcommand("annihilator", "left annihilator basis"));
  CLI::App* c_nilrad = with_input(app.add_subcommand(
      "nilradical", "certify a candidate as the nilradical"));
  c_nilrad->add_option("--candidate", candidate,
                       "comma-separated basis labels");
  CLI::App* c_validate = with_input(app.add_subcommand(
      "validate-spec", "full validity check of an extension spec"));
  CLI::App* c_canon = with_input(app.add_subcommand(
      "canonicalize", "canonical form and catalog row of a spec"));
  CLI::App* c_match = with_input(app.add_subcommand(
      "match", "canonicalize and report the audited row"));

  CLI::App* c_catalog =
      app.add_subcommand("catalog", "print classification rows");
  c_catalog->fallthrough();
  c_catalog->add_option("--entry", entry, "row id, e.g. 3.16");
  c_catalog->add_option("--params", params, "name=value,... for --entry");

  CLI::App* c_audit =
      app.add_subcommand("audit", "sigma-domain audit of the printed rows");
  c_audit->fallthrough();
  c_audit->add_option("--entry", entry, "audit a single row");

  CLI::App* c_empty = app.add_subcommand(
      "verify-empty", "machine-check an emptiness certificate");
  c_empty->fallthrough();
  c_empty
      ->add_option("case", case_id,
                   "r2_jordan_nilpotent | r3_full_nilpotent | l22_nondiagonal")
      ->required();

  CLI::App* c_l22 = app.add_subcommand(
      "verify-l22", "exhaustive r = s = 2 sweep over a grid");
  c_l22->fallthrough();
  c_l22->add_option("--grid", grid, "comma-separated rationals")->required();
  c_l22->add_option("--jobs", jobs, "worker threads");

  CLI::App* c_fp = with_input(
      app.add_subcommand("fingerprint", "isomorphism invariants"));

  CLI::App* c_orbit = app.add_subcommand(
      "orbit-test", "canonical form stability along random orbit walks");
  c_orbit->fallthrough();
  c_orbit->add_option("--entry", entry, "row id")->required();
  c_orbit->add_option("--seeds", seeds, "number of random walks");
  c_orbit->add_option("--steps", steps, "steps per walk");
  c_orbit->add_option("--params", params, "name=value,... overrides");

  std::vector<const char*> argv;
  argv.push_back("leibclass");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner runner{json, out};
  try {
    if (*c_check)
      return runner.run("check",
                        [&](Report& r) { fill_check(r, read_input(input)); });
    if (*c_series)
      return runner.run("series", [&](Report& r) {
        fill_series(r, read_input(input), kind);
      });
    if (*c_ann)
      return runner.run("annihilator", [&](Report& r) {
        fill_annihilator(r, read_input(input));
      });
    if (*c_nilrad)
      return runner.run("nilradical", [&](Report& r) {
        fill_nilradical(r, read_input(input), candidate);
      });
    if (*c_validate)
      return runner.run("validate-spec", [&](Report& r) {
        fill_validate(r, read_input(input));
      });
    if (*c_canon)
      return runner.run("canonicalize", [&](Report& r) {
        fill_canonicalize(r, read_input(input));
      });
    if (*c_match)
      return runner.run("match",
                        [&](Report& r) { fill_match(r, read_input(input)); });
    if (*c_catalog)
      return runner.run("catalog",
                        [&](Report& r) { fill_catalog(r, entry, params); });
    if (*c_audit)
      return runner.run("audit", [&](Report& r) { fill_audit(r, entry); });
    if (*c_empty)
      return runner.run("verify-empty",
                        [&](Report& r) { fill_verify_empty(r, case_id); });
    if (*c_l22)
      return runner.run("verify-l22",
                        [&](Report& r) { fill_verify_l22(r, grid, jobs); });
    if (*c_fp)
      return runner.run("fingerprint", [&](Report& r) {
        fill_fingerprint(r, read_input(input));
      });
    if (*c_orbit)
      return runner.run("orbit-test", [&](Report& r) {
        fill_orbit_test(r, entry, seeds, steps, params);
      });
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace leib
