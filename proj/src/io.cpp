#include "leib/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace leib {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool valid_label(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Rat parse_rat(int line, const std::string& tok) {
  try {
    return Rat::parse(tok);
  } catch (const Error& e) {
    parse_fail(line, std::string(e.what()));
  }
}

int parse_int(int line, const std::string& tok, const std::string& what) {
  if (tok.empty()) parse_fail(line, what + " is empty");
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      parse_fail(line, what + " must be a nonnegative integer, got '" + tok +
                           "'");
  if (tok.size() > 3) parse_fail(line, what + " out of range");
  return std::stoi(tok);
}

struct Line {
  int number;
  std::string text;
};

std::vector<Line> nonblank_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, t});
  }
  return out;
}

// "key: rest" split at the first colon.
bool split_kv(const std::string& s, std::string& key, std::string& rest) {
  size_t colon = s.find(':');
  if (colon == std::string::npos) return false;
  key = trim(s.substr(0, colon));
  rest = trim(s.substr(colon + 1));
  return true;
}

LeibnizAlgebra parse_algebra(const std::vector<Line>& lines, size_t at) {
  int n = -1;
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<Rat> constants;
  std::set<std::pair<int, int>> listed;

  for (; at < lines.size(); ++at) {
    const Line& ln = lines[at];
    if (ln.text[0] == '[') {
      if (n < 0) parse_fail(ln.number, "bracket before basis");
      size_t comma = ln.text.find(',');
      size_t close = ln.text.find(']');
      if (comma == std::string::npos || close == std::string::npos ||
          comma > close)
        parse_fail(ln.number, "expected [a,b] = ...");
      std::string la = trim(ln.text.substr(1, comma - 1));
      std::string lb = trim(ln.text.substr(comma + 1, close - comma - 1));
      auto ia = index.find(la), ib = index.find(lb);
      if (ia == index.end())
        parse_fail(ln.number, "unknown basis label '" + la + "'");
      if (ib == index.end())
        parse_fail(ln.number, "unknown basis label '" + lb + "'");
      if (!listed.insert({ia->second, ib->second}).second)
        parse_fail(ln.number,
                   "bracket [" + la + "," + lb + "] listed twice");
      std::string rest = trim(ln.text.substr(close + 1));
      if (rest.empty() || rest[0] != '=')
        parse_fail(ln.number, "expected '=' after [" + la + "," + lb + "]");
      std::string expr = trim(rest.substr(1));
      if (expr.empty()) parse_fail(ln.number, "empty bracket value");
      auto coeff_at = [&](int k) -> Rat& {
        return constants[(static_cast<size_t>(ia->second) * n + ib->second) *
                             n +
                         k];
      };
      if (expr == "0") continue;
      size_t pos = 0;
      bool first = true;
      while (pos < expr.size()) {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(
                                        expr[pos])))
          ++pos;
        Rat sign(1);
        if (pos < expr.size() && (expr[pos] == '+' || expr[pos] == '-')) {
          if (expr[pos] == '-') sign = Rat(-1);
          ++pos;
        } else if (!first) {
          parse_fail(ln.number, "expected '+' or '-' between terms");
        }
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(
                                        expr[pos])))
          ++pos;
        size_t start = pos;
        while (pos < expr.size() && expr[pos] != '+' && expr[pos] != '-') ++pos;
        std::string term = trim(expr.substr(start, pos - start));
        if (term.empty()) parse_fail(ln.number, "empty term");
        Rat coeff(1);
        std::string label = term;
        size_t star = term.find('*');
        if (star != std::string::npos) {
          coeff = parse_rat(ln.number, trim(term.substr(0, star)));
          label = trim(term.substr(star + 1));
        }
        auto it = index.find(label);
        if (it == index.end())
          parse_fail(ln.number, "unknown basis label '" + label + "'");
        coeff_at(it->second) += sign * coeff;
        first = false;
      }
      continue;
    }
    std::string key, rest;
    if (!split_kv(ln.text, key, rest))
      parse_fail(ln.number, "expected 'key: value' or a bracket line");
    if (key == "dim") {
      if (n >= 0) parse_fail(ln.number, "dim listed twice");
      n = parse_int(ln.number, rest, "dim");
      if (n < 1) parse_fail(ln.number, "dim must be at least 1");
      constants.assign(static_cast<size_t>(n) * n * n, Rat(0));
    } else if (key == "basis") {
      if (n < 0) parse_fail(ln.number, "basis before dim");
      if (!labels.empty()) parse_fail(ln.number, "basis listed twice");
      labels = split_ws(rest);
      if (static_cast<int>(labels.size()) != n)
        parse_fail(ln.number, "basis needs exactly " + std::to_string(n) +
                                  " labels");
      for (int i = 0; i < n; ++i) {
        if (!valid_label(labels[i]))
          parse_fail(ln.number, "bad basis label '" + labels[i] + "'");
        if (!index.emplace(labels[i], i).second)
          parse_fail(ln.number, "duplicate basis label '" + labels[i] + "'");
      }
    } else {
      parse_fail(ln.number, "unknown key '" + key + "' in an algebra");
    }
  }
  if (n < 0) parse_fail(0, "missing dim");
  if (labels.empty()) parse_fail(0, "missing basis");
  return LeibnizAlgebra(std::move(labels), std::move(constants));
}

ExtensionSpec parse_spec(const std::vector<Line>& lines, size_t at) {
  int r = -1, s = -1;
  std::map<std::string, std::pair<int, std::string>> blocks;
  for (; at < lines.size(); ++at) {
    const Line& ln = lines[at];
    std::string key, rest;
    if (!split_kv(ln.text, key, rest))
      parse_fail(ln.number, "expected 'key: value'");
    if (key == "r") {
      if (r >= 0) parse_fail(ln.number, "r listed twice");
      r = parse_int(ln.number, rest, "r");
    } else if (key == "s") {
      if (s >= 0) parse_fail(ln.number, "s listed twice");
      s = parse_int(ln.number, rest, "s");
    } else {
      if (!blocks.emplace(key, std::make_pair(ln.number, rest)).second)
        parse_fail(ln.number, "block '" + key + "' listed twice");
    }
  }
  if (r < 0) parse_fail(0, "missing r");
  if (s < 0) parse_fail(0, "missing s");
  if (r < 1) parse_fail(0, "r must be at least 1");

  ExtensionSpec spec = ExtensionSpec::zero(r, s);
  auto take = [&](const std::string& key) {
    auto it = blocks.find(key);
    if (it == blocks.end())
      parse_fail(0, "missing block '" + key + "'");
    auto v = it->second;
    blocks.erase(it);
    return v;
  };
  auto parse_matrix = [&](const std::pair<int, std::string>& block) {
    Mat m(r, r);
    std::vector<std::string> rows;
    {
      std::istringstream is(block.second);
      std::string piece;
      while (std::getline(is, piece, ';')) rows.push_back(piece);
    }
    if (static_cast<int>(rows.size()) != r)
      parse_fail(block.first, "expected " + std::to_string(r) +
                                  " rows separated by ';'");
    for (int i = 0; i < r; ++i) {
      std::vector<std::string> toks = split_ws(rows[i]);
      if (static_cast<int>(toks.size()) != r)
        parse_fail(block.first, "row " + std::to_string(i + 1) + " needs " +
                                    std::to_string(r) + " entries");
      for (int j = 0; j < r; ++j) m.at(i, j) = parse_rat(block.first, toks[j]);
    }
    return m;
  };
  for (int a = 0; a < s; ++a) {
    spec.R[a] = parse_matrix(take("R" + std::to_string(a + 1)));
    spec.L[a] = parse_matrix(take("L" + std::to_string(a + 1)));
  }
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      auto block = take("sigma" + std::to_string(a + 1) +
                        std::to_string(b + 1));
      std::vector<std::string> toks = split_ws(block.second);
      if (static_cast<int>(toks.size()) != r)
        parse_fail(block.first,
                   "sigma block needs " + std::to_string(r) + " entries");
      for (int k = 0; k < r; ++k)
        spec.sigma[a][b][k] = parse_rat(block.first, toks[k]);
    }
  if (!blocks.empty())
    parse_fail(blocks.begin()->second.first,
               "unknown block '" + blocks.begin()->first + "'");
  return spec;
}

std::string format_terms(const LeibnizAlgebra& alg, int i, int j) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < alg.dim(); ++k) {
    const Rat& c = alg.c(i, j, k);
    if (c.is_zero()) continue;
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (a != Rat(1)) os << a.str() << "*";
    os << alg.labels()[k];
  }
  return first ? "0" : os.str();
}

}  // namespace

Document parse_document(const std::string& text) {
  std::vector<Line> lines = nonblank_lines(text);
  if (lines.empty()) fail(Errc::parse_error, "empty document");
  std::string key, rest;
  if (!split_kv(lines[0].text, key, rest) || key != "kind")
    parse_fail(lines[0].number, "expected 'kind: algebra' or 'kind: spec'");
  if (rest == "algebra") return parse_algebra(lines, 1);
  if (rest == "spec") return parse_spec(lines, 1);
  parse_fail(lines[0].number, "unknown kind '" + rest + "'");
}

std::string emit_algebra(const LeibnizAlgebra& alg) {
  std::ostringstream os;
  os << "kind: algebra\n";
  os << "dim: " << alg.dim() << "\n";
  os << "basis:";
  for (const std::string& l : alg.labels()) os << " " << l;
  os << "\n";
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      if (is_zero(alg.bracket_basis(i, j))) continue;
      os << "[" << alg.labels()[i] << "," << alg.labels()[j]
         << "] = " << format_terms(alg, i, j) << "\n";
    }
  return os.str();
}

std::string emit_spec(const ExtensionSpec& spec) {
  std::ostringstream os;
  os << "kind: spec\n";
  os << "r: " << spec.r << "\n";
  os << "s: " << spec.s << "\n";
  auto matrix_line = [&](const std::string& name, const Mat& m) {
    os << name << ":";
    for (int i = 0; i < m.rows(); ++i) {
      if (i) os << " ;";
      for (int j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).str();
    }
    os << "\n";
  };
  for (int a = 0; a < spec.s; ++a) {
    matrix_line("R" + std::to_string(a + 1), spec.R[a]);
    matrix_line("L" + std::to_string(a + 1), spec.L[a]);
  }
  for (int a = 0; a < spec.s; ++a)
    for (int b = 0; b < spec.s; ++b) {
      os << "sigma" << a + 1 << b + 1 << ":";
      for (int k = 0; k < spec.r; ++k)
        os << " " << spec.sigma[a][b][k].str();
      os << "\n";
    }
  return os.str();
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& data) {
  static const char* hexdig = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexdig[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

std::string field_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_text(const Report& rep) {
  std::ostringstream os;
  os << "command: " << rep.command << "\n";
  if (!rep.input_digest.empty()) os << "input: fnv1a:" << rep.input_digest
                                    << "\n";
  for (const auto& [key, value] : rep.fields.items())
    os << key << ": " << field_text(value) << "\n";
  return os.str();
}

std::string render_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["command"] = rep.command;
  if (!rep.input_digest.empty()) j["input"] = "fnv1a:" + rep.input_digest;
  j["exit"] = rep.exit_code;
  j["result"] = rep.fields;
  return j.dump(2) + "\n";
}

}  // namespace leib
