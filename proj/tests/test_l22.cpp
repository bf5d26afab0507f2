#include <doctest.h>

#include "leib/l22.hpp"

#include <utility>

#include "leib/algebra.hpp"

using namespace leib;

namespace {

Rat R(long n) { return Rat(n); }

// True when generator a acts only on the n_i line, the other generator only
// on the complementary line, and every sigma block respects that pairing.
bool split_pairs(const ExtensionSpec& sp, int i, int a) {
  int j = 1 - i, b = 1 - a;
  for (const auto& [gen, line] : {std::pair{a, i}, std::pair{b, j}}) {
    for (const Mat* m : {&sp.R[gen], &sp.L[gen]})
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          if ((p != line || q != line) && !m->at(p, q).is_zero()) return false;
    if (!sp.sigma[gen][gen][1 - line].is_zero()) return false;
  }
  return is_zero(sp.sigma[a][b]) && is_zero(sp.sigma[b][a]);
}

// Direct sum of two scaling lines, written against the mixed basis so the
// split is not visible by inspection.
ExtensionSpec hidden_sum() {
  ExtensionSpec spec = ExtensionSpec::zero(2, 2);
  spec.R[0] = Mat::diag(Vec{R(1), R(0)});
  spec.L[0] = Mat::diag(Vec{R(-1), R(0)});
  spec.R[1] = Mat::diag(Vec{R(1), R(0)});
  spec.L[1] = Mat::diag(Vec{R(-1), R(1)});
  spec.sigma[1][1] = Vec{R(0), R(1)};
  return spec;
}

}  // namespace

TEST_SUITE("l22") {

TEST_CASE("a masked direct sum is recognized and unmasked") {
  ExtensionSpec spec = hidden_sum();
  REQUIRE(validate_spec(spec).valid);
  CHECK_FALSE(is_lie(build_algebra(spec)));

  ExtensionSpec split;
  REQUIRE(l22_decomposable(spec, &split));

  // The rewritten spec is block diagonal: each generator keeps one line of
  // the abelian part (the pairing is up to the search order).
  int line0 = split_pairs(split, 0, 0) ? 0 : 1;
  REQUIRE(split_pairs(split, line0, 0));

  LeibnizAlgebra alg = build_algebra(split);
  REQUIRE(check_left_leibniz(alg).empty());
  Vec n0(4), n1(4), x0(4), x1(4);
  n0[line0] = R(1);
  n1[1 - line0] = R(1);
  x0[2] = R(1);
  x1[3] = R(1);
  Subspace u = Subspace::span(4, {n0, x0});
  Subspace v = Subspace::span(4, {n1, x1});
  CHECK(ideal_test(alg, u));
  CHECK(ideal_test(alg, v));
  CHECK(u.intersect(v).is_zero());
  CHECK(u.sum(v) == Subspace::whole(4));
}

TEST_CASE("scalar actions never split") {
  ExtensionSpec spec = ExtensionSpec::zero(2, 2);
  spec.R[0] = Mat::diag(Vec{R(1), R(1)});
  spec.L[0] = Mat::diag(Vec{R(-1), R(-1)});
  CHECK_FALSE(l22_decomposable(spec));
}

TEST_CASE("decomposability is limited to the two by two case") {
  try {
    l22_decomposable(ExtensionSpec::zero(2, 1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_argument);
  }
}

TEST_CASE("sweep counts on the tiny grid") {
  L22Options opts;
  opts.grid = {R(0), R(1)};
  L22Report rep = verify_l22(opts);
  CHECK(rep.counts.cells == 6);
  CHECK(rep.counts.sigma_candidates == 8);
  CHECK(rep.counts.valid == 8);
  CHECK(rep.counts.lie_valid == 0);
  CHECK(rep.counts.decomposable_non_lie == 8);
  CHECK(rep.counts.indecomposable_non_lie == 0);
  CHECK(rep.counts.valid == rep.counts.lie_valid +
                                rep.counts.decomposable_non_lie +
                                rep.counts.indecomposable_non_lie);
  CHECK(rep.lie_examples.empty());
  CHECK(rep.decomposable_examples.size() == 3);  // capped
  for (const auto& ex : rep.decomposable_examples) {
    CHECK(validate_spec(ex).valid);
    CHECK(l22_decomposable(ex));
  }
}

TEST_CASE("sweep reports do not depend on scheduling") {
  L22Options one;
  one.grid = {R(0), R(1)};
  L22Options many = one;
  many.jobs = 4;
  L22Report a = verify_l22(one);
  L22Report b = verify_l22(many);
  CHECK(a.counts == b.counts);
  CHECK(a.lie_examples == b.lie_examples);
  CHECK(a.decomposable_examples == b.decomposable_examples);
  CHECK(a.indecomposable_examples == b.indecomposable_examples);
}

TEST_CASE("the grid is sorted and deduplicated") {
  L22Options messy;
  messy.grid = {R(1), R(0), R(1), R(0)};
  L22Options clean;
  clean.grid = {R(0), R(1)};
  CHECK(verify_l22(messy).counts == verify_l22(clean).counts);
}

TEST_CASE("sweep option validation") {
  L22Options opts;
  try {
    verify_l22(opts);  // empty grid
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_argument);
  }
  opts.grid = {R(0)};
  opts.jobs = 0;
  try {
    verify_l22(opts);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_argument);
  }
}

}  // TEST_SUITE
