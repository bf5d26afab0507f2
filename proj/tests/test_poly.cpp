#include <doctest.h>

#include "leib/poly.hpp"

using namespace leib;

namespace {

Rat R(long n) { return Rat(n); }

Poly from(std::initializer_list<long> coeffs) {
  Vec v;
  for (long c : coeffs) v.push_back(Rat(c));
  return Poly(v);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("construction trims trailing zeros") {
  CHECK(Poly(Vec{R(1), R(0), R(0)}).degree() == 0);
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly::x().degree() == 1);
  CHECK(from({2, 0, 1}).coeff(2) == R(1));
  CHECK(from({2, 0, 1}).coeff(5) == R(0));
}

TEST_CASE("arithmetic and evaluation") {
  Poly p = from({2, -3, 1});  // (t-1)(t-2)
  CHECK(p == (Poly::x() - Poly::constant(R(1))) *
                 (Poly::x() - Poly::constant(R(2))));
  CHECK(p.eval(R(1)) == R(0));
  CHECK(p.eval(R(3)) == R(2));
  CHECK((p + from({1})).eval(R(1)) == R(1));
  CHECK((R(2) * p).lead() == R(2));
  CHECK((p - p).is_zero());
}

TEST_CASE("division with remainder") {
  Poly num = from({2, -3, 1});
  Poly den = from({-1, 1});  // t - 1
  auto [q, r] = Poly::divmod(num, den);
  CHECK(q == from({-2, 1}));
  CHECK(r.is_zero());
  auto [q2, r2] = Poly::divmod(from({1, 0, 0, 1}), from({1, 1}));
  CHECK(q2 * from({1, 1}) + r2 == from({1, 0, 0, 1}));
  CHECK(r2.degree() < 1);
}

TEST_CASE("gcd is monic") {
  Poly a = from({-1, 0, 1});   // (t-1)(t+1)
  Poly b = from({-2, 1, 1});   // (t-1)(t+2)
  CHECK(gcd(a, b) == from({-1, 1}));
  CHECK(gcd(R(3) * a, R(5) * a) == a.monic());
  CHECK(gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("characteristic polynomial of small matrices") {
  CHECK(char_poly(Mat::diag(Vec{R(1), R(2)})) == from({2, -3, 1}));
  Mat j3 = Mat{{R(3), R(1)}, {R(0), R(3)}};
  CHECK(char_poly(j3) == from({9, -6, 1}));
  CHECK(char_poly(Mat::zero(3, 3)) == from({0, 0, 0, 1}));
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  // Companion of t^3 - 2t^2 + 5t - 7.
  Mat c = Mat{{R(0), R(0), R(7)}, {R(1), R(0), R(-5)}, {R(0), R(1), R(2)}};
  CHECK(char_poly(c) == from({-7, 5, -2, 1}));
}

TEST_CASE("rational roots are descending with multiplicity") {
  Poly p = (Poly::x() - Poly::constant(R(2))) *
           (Poly::x() - Poly::constant(R(2))) *
           (Poly::x() + Poly::constant(R(1)));
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::make_pair(R(2), 2));
  CHECK(roots[1] == std::make_pair(R(-1), 1));

  CHECK(rational_roots(from({-2, 0, 1})).empty());  // t^2 - 2
  auto half = rational_roots(from({-1, 2}));        // 2t - 1
  REQUIRE(half.size() == 1);
  CHECK(half[0].first == Rat(1, 2));

  try {
    rational_roots(Poly());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_polynomial);
  }
}

TEST_CASE("pencil characteristic polynomial matches pointwise evaluation") {
  Mat a = Mat{{R(1), R(2)}, {R(0), R(3)}};
  Mat b = Mat{{R(0), R(1)}, {R(1), R(1)}};
  auto pencil = pencil_char_poly(a, b);
  REQUIRE(pencil.size() == 3);
  for (long t : {-2L, 0L, 1L, 7L}) {
    Poly direct = char_poly(a + Rat(t) * b);
    for (int k = 0; k <= 2; ++k)
      CHECK(pencil[k].eval(R(t)) == direct.coeff(k));
  }
  // Leading coefficient is identically 1.
  CHECK(pencil[2] == Poly::constant(R(1)));
}

}  // TEST_SUITE
