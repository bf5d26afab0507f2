#include "leib/extension.hpp"

namespace leib {

ExtensionSpec ExtensionSpec::zero(int r, int s) {
  ExtensionSpec spec;
  spec.r = r;
  spec.s = s;
  spec.L.assign(s, Mat::zero(r, r));
  spec.R.assign(s, Mat::zero(r, r));
  spec.sigma.assign(s, std::vector<Vec>(s, Vec(r)));
  return spec;
}

void ExtensionSpec::check_shape() const {
  if (r < 0 || s < 0) fail(Errc::dimension_mismatch, "negative dimensions");
  if (static_cast<int>(L.size()) != s || static_cast<int>(R.size()) != s)
    fail(Errc::dimension_mismatch, "operator block count");
  for (const Mat& m : L)
    if (m.rows() != r || m.cols() != r)
      fail(Errc::dimension_mismatch, "L block shape");
  for (const Mat& m : R)
    if (m.rows() != r || m.cols() != r)
      fail(Errc::dimension_mismatch, "R block shape");
  if (static_cast<int>(sigma.size()) != s)
    fail(Errc::dimension_mismatch, "sigma block count");
  for (const auto& row : sigma) {
    if (static_cast<int>(row.size()) != s)
      fail(Errc::dimension_mismatch, "sigma block count");
    for (const Vec& v : row)
      if (static_cast<int>(v.size()) != r)
        fail(Errc::dimension_mismatch, "sigma vector length");
  }
}

LeibnizAlgebra build_algebra(const ExtensionSpec& spec) {
  spec.check_shape();
  int n = spec.r + spec.s;
  std::vector<std::string> labels;
  for (int i = 1; i <= spec.r; ++i) labels.push_back("n" + std::to_string(i));
  for (int a = 1; a <= spec.s; ++a) labels.push_back("x" + std::to_string(a));
  std::vector<Rat> c(static_cast<size_t>(n) * n * n);
  LeibnizAlgebra alg(std::move(labels), std::move(c));
  for (int a = 0; a < spec.s; ++a)
    for (int i = 0; i < spec.r; ++i)
      for (int k = 0; k < spec.r; ++k) {
        alg.c(spec.r + a, i, k) = spec.L[a].at(i, k);
        alg.c(i, spec.r + a, k) = spec.R[a].at(i, k);
      }
  for (int a = 0; a < spec.s; ++a)
    for (int b = 0; b < spec.s; ++b)
      for (int k = 0; k < spec.r; ++k)
        alg.c(spec.r + a, spec.r + b, k) = spec.sigma[a][b][k];
  return alg;
}

ExtensionSpec spec_from_algebra(const LeibnizAlgebra& alg, int r) {
  int n = alg.dim();
  if (r < 0 || r > n) fail(Errc::bad_argument, "abelian part dimension");
  int s = n - r;
  ExtensionSpec spec = ExtensionSpec::zero(r, s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = r; k < n; ++k)
        if (!alg.c(i, j, k).is_zero())
          fail(Errc::bad_argument,
               "bracket values leave the abelian part, not in extension form");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (!alg.c(i, j, k).is_zero())
          fail(Errc::bad_argument, "first block is not abelian");
  for (int a = 0; a < s; ++a)
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        spec.L[a].at(i, k) = alg.c(r + a, i, k);
        spec.R[a].at(i, k) = alg.c(i, r + a, k);
      }
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (int k = 0; k < r; ++k)
        spec.sigma[a][b][k] = alg.c(r + a, r + b, k);
  return spec;
}

namespace {

std::vector<std::array<int, 3>> annihilation_violations(
    const ExtensionSpec& spec) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < spec.s; ++a)
    for (int b = a; b < spec.s; ++b) {
      Vec v = spec.sigma[a][b];
      if (a != b) v = v + spec.sigma[b][a];
      for (int g = 0; g < spec.s; ++g)
        if (!is_zero(spec.R[g].transpose().apply(v)))
          out.push_back({a, b, g});
    }
  return out;
}

}  // namespace

ConstraintReport check_structure_constraints(const ExtensionSpec& spec) {
  spec.check_shape();
  ConstraintReport rep;
  int n = spec.r + spec.s;
  rep.bounds_ok = spec.s >= 1 && 2 * spec.r >= n && spec.r <= n - 1;

  for (int a = 0; a < spec.s; ++a)
    for (int b = 0; b < spec.s; ++b) {
      if (a < b && !commutator(spec.L[a], spec.L[b]).is_zero())
        rep.eq5a.emplace_back(a, b);
      if (!commutator(spec.L[a], spec.R[b]).is_zero())
        rep.eq5b.emplace_back(a, b);
      if (!((spec.R[a] + spec.L[a]) * spec.R[b]).is_zero())
        rep.eq5c.emplace_back(a, b);
    }

  for (int a = 0; a < spec.s; ++a)
    for (int b = 0; b < spec.s; ++b)
      for (int g = 0; g < spec.s; ++g)
        for (int k = 0; k < spec.r; ++k) {
          Rat v;
          for (int j = 0; j < spec.r; ++j)
            v += spec.sigma[b][g][j] * spec.L[a].at(j, k) -
                 spec.sigma[a][b][j] * spec.R[g].at(j, k) -
                 spec.sigma[a][g][j] * spec.L[b].at(j, k);
          if (!v.is_zero()) rep.eq6.push_back({a, b, g, k});
        }

  rep.lemma31 = annihilation_violations(spec);

  if (spec.s >= 1 && spec.s <= 2) {
    LeibnizAlgebra alg = build_algebra(spec);
    std::vector<Vec> xs;
    for (int a = 0; a < spec.s; ++a) {
      Vec x(n);
      x[spec.r + a] = Rat(1);
      xs.push_back(std::move(x));
    }
    auto ni = nilindependent_elements(alg, xs);
    rep.nilindependent = ni.independent;
    rep.nilindependence_certificate = ni.certificate;
  }
  return rep;
}

LemmaReport lemma_checks(const ExtensionSpec& spec) {
  spec.check_shape();
  LemmaReport rep;
  rep.lemma31 = annihilation_violations(spec);
  if (spec.s == 1) {
    if (!is_jordan_matrix(spec.R[0]))
      fail(Errc::not_jordan_form,
           "entrywise sigma vanishing applies to R in Jordan form only");
    rep.part2_checked = true;
    for (int i = 0; i < spec.r; ++i)
      for (int j = 0; j < spec.r; ++j)
        if (!spec.R[0].at(i, j).is_zero() && !spec.sigma[0][0][i].is_zero())
          rep.part2.emplace_back(i, j);
  }
  return rep;
}

ValidationResult validate_spec(const ExtensionSpec& spec) {
  spec.check_shape();
  ValidationResult res;
  res.constraints = check_structure_constraints(spec);
  if (!res.constraints.bounds_ok) {
    res.failures.push_back("dimension bounds n/2 <= r <= n-1 fail");
    return res;
  }
  if (!res.constraints.constraints_hold())
    res.failures.push_back("structure constraints fail, the bracket does not "
                           "satisfy the left Leibniz identity");
  if (!res.constraints.nilindependent)
    res.failures.push_back("adjoined generators are not nilindependent: " +
                           res.constraints.nilindependence_certificate);

  LeibnizAlgebra alg = build_algebra(spec);
  std::vector<Vec> abelian;
  for (int i = 0; i < spec.r; ++i) {
    Vec v(alg.dim());
    v[i] = Rat(1);
    abelian.push_back(std::move(v));
  }
  res.nilradical = nilradical_check(alg, Subspace::span(alg.dim(), abelian));
  if (!res.nilradical.is_nilradical)
    res.failures.push_back("abelian part is not the nilradical: " +
                           res.nilradical.reason);
  res.valid = res.failures.empty();
  return res;
}

LFamily solve_L_family(const Mat& R) {
  if (!R.square()) fail(Errc::dimension_mismatch, "solve_L_family");
  int r = R.rows();
  int un = r * r;
  auto idx = [r](int i, int j) { return i * r + j; };
  // Rows: [L,R] = 0 then LR = -R^2, unknowns vec(L) row-major.
  Mat m(2 * un, un);
  Vec rhs(2 * un);
  Mat r2 = R * R;
  int row = 0;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k, ++row) {
      for (int j = 0; j < r; ++j) {
        m.at(row, idx(i, j)) += R.at(j, k);
        m.at(row, idx(j, k)) -= R.at(i, j);
      }
      rhs[row] = Rat(0);
    }
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k, ++row) {
      for (int j = 0; j < r; ++j) m.at(row, idx(i, j)) += R.at(j, k);
      rhs[row] = -r2.at(i, k);
    }
  Vec x;
  if (!solve(m, rhs, x))
    fail(Errc::dimension_mismatch, "L family system inconsistent");
  LFamily fam{Mat(r, r), {}};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) fam.particular.at(i, j) = x[idx(i, j)];
  for (const Vec& v : nullspace(m)) {
    Mat b(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) b.at(i, j) = v[idx(i, j)];
    fam.basis.push_back(std::move(b));
  }
  return fam;
}

Subspace sigma_nullspace(const Mat& R) {
  if (!R.square()) fail(Errc::dimension_mismatch, "sigma_nullspace");
  return Subspace::span(R.rows(), nullspace(R.transpose()));
}

}  // namespace leib
