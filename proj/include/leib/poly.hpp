#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leib/matrix.hpp"

namespace leib {

// Univariate polynomial over Q, coefficients lowest degree first, no
// trailing zeros. The zero polynomial has empty coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& c) { return Poly(Vec{c}); }
  static Poly x() { return Poly(Vec{Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  const Vec& coeffs() const { return c_; }
  Rat coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0);
  }
  Rat lead() const { return is_zero() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& t) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const;

  // Quotient and remainder by a nonzero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  std::string str(const std::string& var = "t") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Vec c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic, or zero if both zero

// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recursion.
Poly char_poly(const Mat& m);

// Rational roots with multiplicities, descending by value.
// ZeroPolynomial on the zero polynomial.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p);

// char_poly(A + tB) as polynomials in t: entry k is the coefficient of
// lambda^k as an element of Q[t] (degree <= n). Computed by evaluation at
// n+1 points and Lagrange interpolation, so it stays exact.
std::vector<Poly> pencil_char_poly(const Mat& a, const Mat& b);

}  // namespace leib
