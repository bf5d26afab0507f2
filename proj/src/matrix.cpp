#include "leib/matrix.hpp"

#include <sstream>

namespace leib {

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "vector add");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "vector sub");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "dot");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      fail(Errc::dimension_mismatch, "ragged matrix literal");
    for (const Rat& x : r) a_.push_back(x);
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(Errc::dimension_mismatch, "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  return from_rows(cols).transpose();
}

Vec Mat::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

bool Mat::is_zero() const {
  for (const Rat& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(Errc::dimension_mismatch, "matrix add");
  Mat r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(Errc::dimension_mismatch, "matrix sub");
  Mat r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) fail(Errc::dimension_mismatch, "matrix mul");
  Mat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Mat operator*(const Rat& c, const Mat& m) {
  Mat r(m.rows_, m.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(Errc::dimension_mismatch, "matrix apply");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat power(const Mat& m, int k) {
  if (!m.square()) fail(Errc::dimension_mismatch, "power of nonsquare");
  Mat r = Mat::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int p = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(lead, j));
    Rat inv = m.at(lead, col).inv();
    for (int j = 0; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int rank(const Mat& m) {
  Mat t = m;
  return static_cast<int>(rref(t).size());
}

std::vector<Vec> nullspace(const Mat& m) {
  Mat t = m;
  std::vector<int> pivots = rref(t);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -t.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat inverse(const Mat& m) {
  if (!m.square()) fail(Errc::dimension_mismatch, "inverse of nonsquare");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    fail(Errc::singular_matrix, "matrix is singular");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool invertible(const Mat& m) {
  return m.square() && rank(m) == m.rows();
}

Rat det(const Mat& m) {
  if (!m.square()) fail(Errc::dimension_mismatch, "det of nonsquare");
  Mat t = m;
  int n = t.rows();
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!t.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(t.at(p, j), t.at(col, j));
      d = -d;
    }
    d *= t.at(col, col);
    Rat inv = t.at(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (t.at(i, col).is_zero()) continue;
      Rat f = t.at(i, col) * inv;
      for (int j = col; j < n; ++j) t.at(i, j) -= f * t.at(col, j);
    }
  }
  return d;
}

bool is_nilpotent(const Mat& m) {
  if (!m.square()) fail(Errc::dimension_mismatch, "nilpotency of nonsquare");
  return power(m, m.rows()).is_zero();
}

bool solve(const Mat& m, const Vec& b, Vec& x) {
  if (static_cast<int>(b.size()) != m.rows())
    fail(Errc::dimension_mismatch, "solve rhs");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return true;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (!vectors.empty()) {
    for (const Vec& v : vectors)
      if (static_cast<int>(v.size()) != ambient)
        fail(Errc::dimension_mismatch, "span vector size");
    Mat m = Mat::from_rows(vectors);
    s.pivots_ = rref(m);
    for (size_t r = 0; r < s.pivots_.size(); ++r)
      s.basis_.push_back(m.row(static_cast<int>(r)));
  }
  return s;
}

Subspace Subspace::whole(int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = Rat(1);
    rows.push_back(std::move(v));
  }
  return span(ambient, rows);
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    fail(Errc::dimension_mismatch, "contains vector size");
  Vec r = v;
  for (size_t b = 0; b < basis_.size(); ++b) {
    const Rat& c = r[pivots_[b]];
    if (c.is_zero()) continue;
    Rat f = c;  // pivot entries are 1
    for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_[b][j];
  }
  return leib::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(Errc::dimension_mismatch, "sum");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(Errc::dimension_mismatch, "intersect");
  // v in both spans: v = sum a_i u_i = sum b_j w_j. Solve [U^T | -W^T] on
  // stacked coefficients, read intersection vectors off the U part.
  if (basis_.empty() || other.basis_.empty()) return zero(ambient_);
  int nu = dim(), nw = other.dim();
  Mat m(ambient_, nu + nw);
  for (int i = 0; i < ambient_; ++i) {
    for (int a = 0; a < nu; ++a) m.at(i, a) = basis_[a][i];
    for (int b = 0; b < nw; ++b) m.at(i, nu + b) = -other.basis_[b][i];
  }
  std::vector<Vec> vecs;
  for (const Vec& ker : nullspace(m)) {
    Vec v(ambient_);
    for (int a = 0; a < nu; ++a)
      for (int i = 0; i < ambient_; ++i) v[i] += ker[a] * basis_[a][i];
    vecs.push_back(std::move(v));
  }
  return span(ambient_, vecs);
}

Vec Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    fail(Errc::dimension_mismatch, "coordinates size");
  Vec r = v;
  Vec coords(basis_.size());
  for (size_t b = 0; b < basis_.size(); ++b) {
    Rat c = r[pivots_[b]];
    coords[b] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) r[j] -= c * basis_[b][j];
  }
  if (!leib::is_zero(r))
    fail(Errc::dimension_mismatch, "vector outside subspace");
  return coords;
}

std::vector<int> Subspace::free_coordinates() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<int> free;
  for (int i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) free.push_back(i);
  return free;
}

}  // namespace leib
