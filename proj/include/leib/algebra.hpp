#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leib/spectral.hpp"

namespace leib {

// Finite-dimensional algebra over Q given by structure constants,
// [e_i, e_j] = sum_k c(i,j,k) e_k. No identity is assumed; the checks below
// decide which identities hold.
class LeibnizAlgebra {
public:
  LeibnizAlgebra(std::vector<std::string> labels, std::vector<Rat> constants);

  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Rat& c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  Rat& c(int i, int j, int k) { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<Rat>& constants() const { return c_; }

  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  // Coordinate matrices of y -> [x,y] and y -> [y,x].
  Mat left_op(const Vec& x) const;
  Mat right_op(const Vec& x) const;

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.labels_ == b.labels_ && a.c_ == b.c_;
  }

private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<Rat> c_;
};

struct LeibnizViolation {
  int i, j, k;   // basis indices of the failing triple
  Vec residual;  // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]
};

std::vector<LeibnizViolation> check_left_leibniz(const LeibnizAlgebra& alg);

bool is_lie(const LeibnizAlgebra& alg);

// First basis pair with [e_i,e_j] != -[e_j,e_i] (includ. i == j), if any.
std::optional<std::pair<int, int>> antisymmetry_witness(
    const LeibnizAlgebra& alg);

enum class SeriesKind { derived, lower_central };

struct SeriesResult {
  std::vector<Subspace> terms;  // terms[0] is the whole algebra
  bool terminates_at_zero = false;
  bool stabilized_nonzero = false;
};

SeriesResult series(const LeibnizAlgebra& alg, SeriesKind kind);

bool is_solvable(const LeibnizAlgebra& alg);
bool is_nilpotent(const LeibnizAlgebra& alg);

// span of [U, V] via basis products.
Subspace product_span(const LeibnizAlgebra& alg, const Subspace& u,
                      const Subspace& v);

Subspace left_annihilator(const LeibnizAlgebra& alg);

bool is_nilpotent_element(const LeibnizAlgebra& alg, const Vec& x);

// Element-level nilindependence, decided on the stacked operator matrices
// diag(L_x, R_x).
NilindependenceResult nilindependent_elements(const LeibnizAlgebra& alg,
                                              const std::vector<Vec>& xs);

bool ideal_test(const LeibnizAlgebra& alg, const Subspace& u);

// Lower-central series of a subalgebra, with ambient brackets.
bool subspace_is_nilpotent_subalgebra(const LeibnizAlgebra& alg,
                                      const Subspace& w);

struct NilradicalResult {
  bool is_nilradical = false;
  std::string reason;
};

// Certifies that candidate is the unique maximal nilpotent ideal. Requires a
// solvable algebra (NotSolvable otherwise) and candidate codimension <= 2
// (UnsupportedCodimension otherwise; the codim-2 case additionally needs an
// abelian candidate). Line nilpotency in the codim-2 sweep is decided over
// the algebraic closure.
NilradicalResult nilradical_check(const LeibnizAlgebra& alg,
                                  const Subspace& candidate);

}  // namespace leib
