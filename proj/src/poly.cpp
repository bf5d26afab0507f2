#include "leib/poly.hpp"

#include <algorithm>
#include <sstream>

namespace leib {

Rat Poly::eval(const Rat& t) const {
  Rat r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  Vec c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Vec c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& c, const Poly& p) {
  Vec r = p.c_;
  for (Rat& x : r) x *= c;
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return lead().inv() * *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(Errc::division_by_zero, "polynomial division");
  Poly r = num;
  Vec q(num.c_.size() > den.c_.size() ? num.c_.size() - den.c_.size() + 1 : 1);
  while (!r.is_zero() && r.degree() >= den.degree()) {
    int shift = r.degree() - den.degree();
    Rat f = r.lead() / den.lead();
    q[shift] = f;
    Vec sub(shift + den.c_.size());
    for (size_t i = 0; i < den.c_.size(); ++i) sub[shift + i] = f * den.c_[i];
    r = r - Poly(std::move(sub));
  }
  return {Poly(std::move(q)), r};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = c.abs();
    if (k == 0 || a != Rat(1)) os << a.str();
    if (k > 0) {
      if (a != Rat(1)) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = Poly::divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly char_poly(const Mat& m) {
  if (!m.square()) fail(Errc::dimension_mismatch, "char_poly of nonsquare");
  int n = m.rows();
  // Faddeev-LeVerrier: M_1 = M, c_{n-k} from traces; p(t) = t^n + ...
  Vec coeffs(n + 1);
  coeffs[n] = Rat(1);
  Mat mk = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat tr;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    Rat ck = -(tr / Rat(k));
    coeffs[n - k] = ck;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return Poly(std::move(coeffs));
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      divs.push_back(i);
      mpz_class other = n / i;
      if (other != i) divs.push_back(other);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p) {
  if (p.is_zero())
    fail(Errc::zero_polynomial, "roots of the zero polynomial");
  Vec c = p.coeffs();
  // Factor out t^k first.
  int zero_mult = 0;
  while (zero_mult < static_cast<int>(c.size()) && c[zero_mult].is_zero())
    ++zero_mult;
  c.erase(c.begin(), c.begin() + zero_mult);
  std::vector<std::pair<Rat, int>> roots;

  Poly q{Vec(c)};
  if (q.degree() >= 1) {
    // Clear denominators to an integer polynomial for the candidate sieve.
    mpz_class lcm = 1;
    for (const Rat& x : q.coeffs()) {
      mpz_class d = x.den();
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<mpz_class> ic;
    for (const Rat& x : q.coeffs()) {
      mpq_class v = x.raw() * mpq_class(lcm);
      ic.push_back(v.get_num());
    }
    mpz_class a0 = ic.front(), an = ic.back();
    for (const mpz_class& pn : positive_divisors(a0)) {
      for (const mpz_class& qd : positive_divisors(an)) {
        if (gcd(pn, qd) != 1) continue;
        for (int sign : {1, -1}) {
          Rat cand(mpq_class(sign * pn, qd));
          if (!q.eval(cand).is_zero()) continue;
          int mult = 0;
          Poly lin(Vec{-cand, Rat(1)});
          while (true) {
            auto [quo, rem] = Poly::divmod(q, lin);
            if (!rem.is_zero()) break;
            q = quo;
            ++mult;
          }
          if (mult > 0) roots.emplace_back(cand, mult);
        }
      }
      if (q.degree() < 1) break;
    }
  }
  if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return roots;
}

std::vector<Poly> pencil_char_poly(const Mat& a, const Mat& b) {
  if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::dimension_mismatch, "pencil_char_poly");
  int n = a.rows();
  // Coefficient of lambda^k in char(A + tB) has degree <= n in t; sample at
  // t = 0..n and interpolate.
  std::vector<Vec> samples;  // samples[s][k]
  for (int s = 0; s <= n; ++s) {
    Mat m = a + Rat(s) * b;
    samples.push_back(char_poly(m).coeffs());
  }
  std::vector<Poly> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    // Lagrange basis over the points t = 0..n.
    Poly acc;
    for (int s = 0; s <= n; ++s) {
      Poly basis = Poly::constant(Rat(1));
      Rat denom(1);
      for (int u = 0; u <= n; ++u) {
        if (u == s) continue;
        basis = basis * Poly(Vec{Rat(-u), Rat(1)});
        denom *= Rat(s - u);
      }
      acc = acc + (samples[s][k] / denom) * basis;
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace leib
