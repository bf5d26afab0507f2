#pragma once

#include <array>
#include <string>
#include <vector>

#include "leib/algebra.hpp"

namespace leib {

// Extension data over an abelian algebra with basis n_1..n_r and adjoined
// generators x_1..x_s:
//   [x_a, n_i] = sum_k L[a](i,k) n_k
//   [n_i, x_a] = sum_k R[a](i,k) n_k
//   [x_a, x_b] = sum_k sigma[a][b][k] n_k
struct ExtensionSpec {
  int r = 0, s = 0;
  std::vector<Mat> L, R;             // s matrices, r x r
  std::vector<std::vector<Vec>> sigma;  // s x s vectors of length r

  static ExtensionSpec zero(int r, int s);
  void check_shape() const;  // DimensionMismatch on malformed data

  friend bool operator==(const ExtensionSpec& a, const ExtensionSpec& b) {
    return a.r == b.r && a.s == b.s && a.L == b.L && a.R == b.R &&
           a.sigma == b.sigma;
  }
  friend bool operator!=(const ExtensionSpec& a, const ExtensionSpec& b) {
    return !(a == b);
  }
};

// Basis order n_1..n_r, x_1..x_s.
LeibnizAlgebra build_algebra(const ExtensionSpec& spec);

// Reads the blocks of an algebra whose first r basis vectors span an abelian
// ideal acted on as above; inverse of build_algebra.
ExtensionSpec spec_from_algebra(const LeibnizAlgebra& alg, int r);

struct ConstraintReport {
  std::vector<std::pair<int, int>> eq5a;  // (alpha,beta): [L^a, L^b] != 0
  std::vector<std::pair<int, int>> eq5b;  // (alpha,beta): [L^a, R^b] != 0
  std::vector<std::pair<int, int>> eq5c;  // (alpha,beta): (R^a+L^a)R^b != 0
  // (alpha,beta,gamma,k): bilinear compatibility of sigma with L and R fails
  std::vector<std::array<int, 4>> eq6;
  std::vector<std::array<int, 3>> lemma31;  // (alpha,beta,gamma) annihilation
  bool bounds_ok = false;       // r + s = n with n/2 <= r <= n - 1
  bool nilindependent = false;  // the adjoined generators
  std::string nilindependence_certificate;

  bool constraints_hold() const {
    return eq5a.empty() && eq5b.empty() && eq5c.empty() && eq6.empty();
  }
};

ConstraintReport check_structure_constraints(const ExtensionSpec& spec);

struct LemmaReport {
  std::vector<std::array<int, 3>> lemma31;   // as above
  std::vector<std::pair<int, int>> part2;    // s=1 only: (i,j) with R_ij != 0
                                             // but sigma_i != 0
  bool part2_checked = false;
};

// Lemma-level consequences of validity. Part 2 applies to s = 1 and needs R
// in Jordan form (NotJordanForm otherwise).
LemmaReport lemma_checks(const ExtensionSpec& spec);

struct ValidationResult {
  bool valid = false;
  ConstraintReport constraints;
  NilradicalResult nilradical;
  std::vector<std::string> failures;  // human-readable, empty when valid
};

// Valid means: shape and bounds hold, the built algebra satisfies the left
// Leibniz identity (equivalently eq5a/b/c and eq6 are clean), the adjoined
// generators are nilindependent, and the abelian part is the nilradical.
ValidationResult validate_spec(const ExtensionSpec& spec);

struct LFamily {
  Mat particular;          // one solution (free coordinates zeroed)
  std::vector<Mat> basis;  // homogeneous directions
};

// All L with [L,R] = 0 and (R+L)R = 0.
LFamily solve_L_family(const Mat& R);

// NS(R^T): the space sigma must live in for s = 1.
Subspace sigma_nullspace(const Mat& R);

}  // namespace leib
