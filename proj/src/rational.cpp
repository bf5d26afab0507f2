#include "leib/rational.hpp"

#include <cctype>
#include <ostream>

namespace leib {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::irrational_spectrum: return "IrrationalSpectrum";
    case Errc::unsupported_arity: return "UnsupportedArity";
    case Errc::unsupported_codimension: return "UnsupportedCodimension";
    case Errc::not_solvable: return "NotSolvable";
    case Errc::not_jordan_form: return "NotJordanForm";
    case Errc::restriction_violated: return "RestrictionViolated";
    case Errc::missing_parameter: return "MissingParameter";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::lie_instance: return "LieInstance";
    case Errc::no_match: return "NoMatch";
    case Errc::unknown_case: return "UnknownCase";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_argument: return "BadArgument";
  }
  return "Error";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(const std::string& text) {
  // Grammar: ['-'] digits ['/' digits], denominator nonzero.
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  std::string nump = s, denp = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    nump = s.substr(0, slash);
    denp = s.substr(slash + 1);
  }
  if (!all_digits(nump) || !all_digits(denp))
    fail(Errc::parse_error, "bad rational literal '" + text + "'");
  mpz_class num(nump), den(denp);
  if (den == 0)
    fail(Errc::parse_error, "zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return Rat(q);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace leib
