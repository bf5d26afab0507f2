#include "leib/algebra.hpp"

namespace leib {

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> labels,
                               std::vector<Rat> constants)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      c_(std::move(constants)) {
  if (c_.size() != static_cast<size_t>(n_) * n_ * n_)
    fail(Errc::dimension_mismatch, "structure constant table size");
}

Vec LeibnizAlgebra::bracket_basis(int i, int j) const {
  Vec r(n_);
  for (int k = 0; k < n_; ++k) r[k] = c(i, j, k);
  return r;
}

Vec LeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    fail(Errc::dimension_mismatch, "bracket operand size");
  Vec r(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Rat f = x[i] * y[j];
      for (int k = 0; k < n_; ++k) r[k] += f * c(i, j, k);
    }
  }
  return r;
}

Mat LeibnizAlgebra::left_op(const Vec& x) const {
  if (static_cast<int>(x.size()) != n_)
    fail(Errc::dimension_mismatch, "left_op operand size");
  Mat m(n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      Rat s;
      for (int i = 0; i < n_; ++i)
        if (!x[i].is_zero()) s += x[i] * c(i, j, k);
      m.at(k, j) = s;
    }
  return m;
}

Mat LeibnizAlgebra::right_op(const Vec& x) const {
  if (static_cast<int>(x.size()) != n_)
    fail(Errc::dimension_mismatch, "right_op operand size");
  Mat m(n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      Rat s;
      for (int i = 0; i < n_; ++i)
        if (!x[i].is_zero()) s += x[i] * c(j, i, k);
      m.at(k, j) = s;
    }
  return m;
}

std::vector<LeibnizViolation> check_left_leibniz(const LeibnizAlgebra& alg) {
  int n = alg.dim();
  std::vector<LeibnizViolation> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // residual = [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]
        Vec ei(n), ej(n), ek(n);
        ei[i] = Rat(1);
        ej[j] = Rat(1);
        ek[k] = Rat(1);
        Vec r = alg.bracket(ei, alg.bracket_basis(j, k));
        r = r - alg.bracket(alg.bracket_basis(i, j), ek);
        r = r - alg.bracket(ej, alg.bracket_basis(i, k));
        if (!is_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

bool is_lie(const LeibnizAlgebra& alg) {
  return !antisymmetry_witness(alg) && check_left_leibniz(alg).empty();
}

std::optional<std::pair<int, int>> antisymmetry_witness(
    const LeibnizAlgebra& alg) {
  int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (alg.c(i, j, k) != -alg.c(j, i, k)) return std::pair{i, j};
  return std::nullopt;
}

Subspace product_span(const LeibnizAlgebra& alg, const Subspace& u,
                      const Subspace& v) {
  std::vector<Vec> prods;
  for (const Vec& a : u.basis())
    for (const Vec& b : v.basis()) prods.push_back(alg.bracket(a, b));
  return Subspace::span(alg.dim(), prods);
}

SeriesResult series(const LeibnizAlgebra& alg, SeriesKind kind) {
  SeriesResult res;
  Subspace whole = Subspace::whole(alg.dim());
  res.terms.push_back(whole);
  for (int guard = 0; guard <= alg.dim() + 1; ++guard) {
    const Subspace& last = res.terms.back();
    Subspace next = kind == SeriesKind::derived
                        ? product_span(alg, last, last)
                        : product_span(alg, whole, last);
    if (next == last) {
      res.stabilized_nonzero = !last.is_zero();
      res.terminates_at_zero = last.is_zero();
      return res;
    }
    res.terms.push_back(next);
    if (next.is_zero()) {
      res.terminates_at_zero = true;
      return res;
    }
  }
  fail(Errc::dimension_mismatch, "series failed to stabilize");  // unreachable
}

bool is_solvable(const LeibnizAlgebra& alg) {
  return series(alg, SeriesKind::derived).terminates_at_zero;
}

bool is_nilpotent(const LeibnizAlgebra& alg) {
  return series(alg, SeriesKind::lower_central).terminates_at_zero;
}

Subspace left_annihilator(const LeibnizAlgebra& alg) {
  int n = alg.dim();
  Mat m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m.at(j * n + k, i) = alg.c(i, j, k);
  return Subspace::span(n, nullspace(m));
}

bool is_nilpotent_element(const LeibnizAlgebra& alg, const Vec& x) {
  return is_nilpotent(alg.left_op(x)) && is_nilpotent(alg.right_op(x));
}

namespace {

Mat stacked_ops(const LeibnizAlgebra& alg, const Vec& x) {
  Mat l = alg.left_op(x), r = alg.right_op(x);
  int n = alg.dim();
  Mat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = l.at(i, j);
      m.at(n + i, n + j) = r.at(i, j);
    }
  return m;
}

}  // namespace

NilindependenceResult nilindependent_elements(const LeibnizAlgebra& alg,
                                              const std::vector<Vec>& xs) {
  std::vector<Mat> ms;
  for (const Vec& x : xs) ms.push_back(stacked_ops(alg, x));
  return nilindependent_matrices(ms);
}

bool ideal_test(const LeibnizAlgebra& alg, const Subspace& u) {
  Subspace whole = Subspace::whole(alg.dim());
  return u.contains(product_span(alg, whole, u)) &&
         u.contains(product_span(alg, u, whole));
}

bool subspace_is_nilpotent_subalgebra(const LeibnizAlgebra& alg,
                                      const Subspace& w) {
  if (!w.contains(product_span(alg, w, w))) return false;
  Subspace term = product_span(alg, w, w);
  for (int guard = 0; guard <= alg.dim() + 1; ++guard) {
    if (term.is_zero()) return true;
    Subspace next = product_span(alg, w, term);
    if (next == term) return false;
    term = next;
  }
  return false;
}

NilradicalResult nilradical_check(const LeibnizAlgebra& alg,
                                  const Subspace& candidate) {
  if (candidate.ambient() != alg.dim())
    fail(Errc::dimension_mismatch, "candidate ambient dimension");
  if (!is_solvable(alg))
    fail(Errc::not_solvable,
         "nilradical certification supports solvable algebras only");

  if (!ideal_test(alg, candidate))
    return {false, "candidate is not an ideal"};
  if (!subspace_is_nilpotent_subalgebra(alg, candidate))
    return {false, "candidate is not nilpotent"};
  Subspace whole = Subspace::whole(alg.dim());
  Subspace derived = product_span(alg, whole, whole);
  if (!candidate.contains(derived))
    return {false,
            "solvable algebras have [L,L] inside the nilradical and the "
            "candidate misses part of [L,L]"};

  int codim = alg.dim() - candidate.dim();
  if (codim == 0)
    return {true, "the algebra itself is nilpotent"};
  if (is_nilpotent(alg))
    return {false, "the whole algebra is nilpotent, so the nilradical is "
                   "strictly larger than the candidate"};
  if (codim == 1)
    return {true, "candidate is a nilpotent ideal and the only larger "
                  "subspace, the whole algebra, is not nilpotent"};
  if (codim > 2)
    fail(Errc::unsupported_codimension,
         "candidate codimension " + std::to_string(codim) +
             " exceeds the supported bound 2");

  // Codimension 2. Any intermediate subspace W = candidate + span{w}
  // contains [L,L], hence is automatically an ideal; it remains to rule out
  // nilpotency of every such W.
  if (!product_span(alg, candidate, candidate).is_zero())
    fail(Errc::unsupported_codimension,
         "codimension-2 certification requires an abelian candidate");
  std::vector<int> free = candidate.free_coordinates();
  Vec q1(alg.dim()), q2(alg.dim());
  q1[free[0]] = Rat(1);
  q2[free[1]] = Rat(1);
  // With candidate abelian and [w,C] inside [L,L] (so inside C), W is
  // nilpotent exactly when the action c -> [w,c] on the candidate is a
  // nilpotent matrix. Sweep all lines w = q1 + t*q2 plus the line q2.
  int d = candidate.dim();
  auto action = [&](const Vec& w) {
    Mat a(d, d);
    for (int m = 0; m < d; ++m) {
      Vec img = alg.bracket(w, candidate.basis()[m]);
      Vec coords = candidate.coordinates(img);
      for (int k = 0; k < d; ++k) a.at(k, m) = coords[k];
    }
    return a;
  };
  Mat a1 = action(q1), a2 = action(q2);
  if (is_nilpotent(a2))
    return {false, "candidate plus the line through coordinate " +
                       std::to_string(free[1]) + " is a nilpotent ideal"};
  auto coeffs = pencil_char_poly(a1, a2);
  Poly g;
  for (size_t k = 0; k + 1 < coeffs.size(); ++k) g = gcd(g, coeffs[k]);
  if (g.is_zero())
    return {false, "every line in the quotient acts nilpotently"};
  if (g.degree() > 0) {
    auto roots = rational_roots(g);
    std::string where =
        roots.empty() ? "an irrational parameter (root of " + g.str() + ")"
                      : "parameter t = " + roots.front().first.str();
    return {false,
            "candidate plus a quotient line is nilpotent at " + where};
  }
  return {true,
          "no quotient line acts nilpotently (decided over the algebraic "
          "closure), so the candidate is the maximal nilpotent ideal"};
}

}  // namespace leib
