#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "leib/rational.hpp"

namespace leib {

using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
bool is_zero(const Vec& v);
Rat dot(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

// Dense row-major exact rational matrix.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat diag(const Vec& d);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& c, const Mat& m);
  Mat operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Vec apply(const Vec& v) const;  // matrix * column vector

  std::string str() const;

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Mat commutator(const Mat& a, const Mat& b);  // ab - ba
Mat power(const Mat& m, int k);              // k >= 0

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(Mat& m);

int rank(const Mat& m);

// Canonical basis of the right nullspace {v : m v = 0}. The basis rows are
// themselves in reduced echelon form, so equal spaces get equal bases.
std::vector<Vec> nullspace(const Mat& m);

Mat inverse(const Mat& m);  // SingularMatrix if not invertible
bool invertible(const Mat& m);
Rat det(const Mat& m);

bool is_nilpotent(const Mat& m);

// Solve m x = b exactly. Returns false if inconsistent; x gets the solution
// with free coordinates set to zero.
bool solve(const Mat& m, const Vec& b, Vec& x);

// Row-space subspace with an RREF basis, so equality is representation
// equality. Used for ideals, series terms, annihilators.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace zero(int ambient) { return span(ambient, {}); }
  static Subspace whole(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  // Coordinates of v in this basis; DimensionMismatch if v is outside.
  Vec coordinates(const Vec& v) const;

  // Ambient standard coordinates not used as pivots; lifting them spans a
  // complement.
  std::vector<int> free_coordinates() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

private:
  int ambient_;
  std::vector<Vec> basis_;  // RREF rows, no zero rows
  std::vector<int> pivots_;
};

}  // namespace leib
