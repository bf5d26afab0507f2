#include "leib/transforms.hpp"

#include <random>

namespace leib {

TransformStep TransformStep::basis_change(Mat s) {
  TransformStep t;
  t.kind = StepKind::basis_change;
  t.S = std::move(s);
  return t;
}

TransformStep TransformStep::shift(std::vector<Vec> mu) {
  TransformStep t;
  t.kind = StepKind::shift;
  t.mu = std::move(mu);
  return t;
}

TransformStep TransformStep::recombination(Mat g) {
  TransformStep t;
  t.kind = StepKind::recombination;
  t.G = std::move(g);
  return t;
}

ExtensionSpec apply_basis_change(const ExtensionSpec& spec, const Mat& S) {
  spec.check_shape();
  if (S.rows() != spec.r || S.cols() != spec.r)
    fail(Errc::dimension_mismatch, "basis change size");
  Mat sinv = inverse(S);  // SingularMatrix if not invertible
  Mat sinv_t = sinv.transpose();
  ExtensionSpec out = spec;
  for (int a = 0; a < spec.s; ++a) {
    out.L[a] = S * spec.L[a] * sinv;
    out.R[a] = S * spec.R[a] * sinv;
  }
  for (int a = 0; a < spec.s; ++a)
    for (int b = 0; b < spec.s; ++b)
      out.sigma[a][b] = sinv_t.apply(spec.sigma[a][b]);
  return out;
}

ExtensionSpec apply_shift(const ExtensionSpec& spec,
                          const std::vector<Vec>& mu) {
  spec.check_shape();
  if (static_cast<int>(mu.size()) != spec.s)
    fail(Errc::dimension_mismatch, "shift vector count");
  for (const Vec& m : mu)
    if (static_cast<int>(m.size()) != spec.r)
      fail(Errc::dimension_mismatch, "shift vector length");
  ExtensionSpec out = spec;
  for (int a = 0; a < spec.s; ++a)
    for (int b = 0; b < spec.s; ++b)
      out.sigma[a][b] = spec.sigma[a][b] +
                        spec.R[b].transpose().apply(mu[a]) +
                        spec.L[a].transpose().apply(mu[b]);
  return out;
}

ExtensionSpec apply_recombination(const ExtensionSpec& spec, const Mat& G) {
  spec.check_shape();
  if (G.rows() != spec.s || G.cols() != spec.s)
    fail(Errc::dimension_mismatch, "recombination size");
  if (!invertible(G)) fail(Errc::singular_matrix, "recombination matrix");
  ExtensionSpec out = spec;
  for (int a = 0; a < spec.s; ++a) {
    Mat l = Mat::zero(spec.r, spec.r), r = Mat::zero(spec.r, spec.r);
    for (int b = 0; b < spec.s; ++b) {
      l = l + G.at(a, b) * spec.L[b];
      r = r + G.at(a, b) * spec.R[b];
    }
    out.L[a] = l;
    out.R[a] = r;
  }
  for (int a = 0; a < spec.s; ++a)
    for (int b = 0; b < spec.s; ++b) {
      Vec v(spec.r);
      for (int g = 0; g < spec.s; ++g)
        for (int d = 0; d < spec.s; ++d)
          v = v + (G.at(a, g) * G.at(b, d)) * spec.sigma[g][d];
      out.sigma[a][b] = v;
    }
  return out;
}

ExtensionSpec apply_step(const ExtensionSpec& spec, const TransformStep& step) {
  switch (step.kind) {
    case StepKind::basis_change: return apply_basis_change(spec, step.S);
    case StepKind::shift: return apply_shift(spec, step.mu);
    case StepKind::recombination: return apply_recombination(spec, step.G);
  }
  fail(Errc::bad_argument, "unknown step kind");
}

ExtensionSpec apply_trail(const ExtensionSpec& spec,
                          const std::vector<TransformStep>& trail) {
  ExtensionSpec out = spec;
  for (const TransformStep& t : trail) out = apply_step(out, t);
  return out;
}

Mat step_block_matrix(const TransformStep& step, int r, int s) {
  Mat p = Mat::identity(r + s);
  switch (step.kind) {
    case StepKind::basis_change:
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) p.at(i, j) = step.S.at(i, j);
      break;
    case StepKind::shift:
      for (int a = 0; a < s; ++a)
        for (int j = 0; j < r; ++j) p.at(r + a, j) = step.mu[a][j];
      break;
    case StepKind::recombination:
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) p.at(r + a, r + b) = step.G.at(a, b);
      break;
  }
  return p;
}

LeibnizAlgebra transport_structure(const LeibnizAlgebra& alg, const Mat& P) {
  int n = alg.dim();
  if (P.rows() != n || P.cols() != n)
    fail(Errc::dimension_mismatch, "transport matrix size");
  Mat pinv = inverse(P);
  std::vector<Rat> c(static_cast<size_t>(n) * n * n);
  LeibnizAlgebra out(alg.labels(), std::move(c));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // [y'_i, y'_j] in the old basis, then convert coordinates.
      Vec old(n);
      for (int a = 0; a < n; ++a) {
        if (P.at(i, a).is_zero()) continue;
        for (int b = 0; b < n; ++b) {
          if (P.at(j, b).is_zero()) continue;
          Rat f = P.at(i, a) * P.at(j, b);
          for (int cc = 0; cc < n; ++cc) old[cc] += f * alg.c(a, b, cc);
        }
      }
      for (int k = 0; k < n; ++k) {
        Rat v;
        for (int cc = 0; cc < n; ++cc) v += old[cc] * pinv.at(cc, k);
        out.c(i, j, k) = v;
      }
    }
  return out;
}

namespace {

const Rat kPool[] = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(1, 2), Rat(1), Rat(2)};

Rat draw(std::mt19937_64& rng) { return kPool[rng() % 6]; }

Mat draw_invertible(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = draw(rng);
    if (invertible(m)) return m;
  }
  return Mat::identity(n);  // statistically unreachable
}

}  // namespace

OrbitSample random_orbit_sample(const ExtensionSpec& spec, std::uint64_t seed,
                                int steps) {
  spec.check_shape();
  std::mt19937_64 rng(seed);
  OrbitSample out{spec, {}};
  for (int i = 0; i < steps; ++i) {
    TransformStep step;
    switch (rng() % 3) {
      case 0:
        step = TransformStep::basis_change(draw_invertible(rng, spec.r));
        break;
      case 1: {
        std::vector<Vec> mu(spec.s, Vec(spec.r));
        for (int a = 0; a < spec.s; ++a)
          for (int j = 0; j < spec.r; ++j) mu[a][j] = draw(rng);
        step = TransformStep::shift(std::move(mu));
        break;
      }
      default:
        step = TransformStep::recombination(draw_invertible(rng, spec.s));
        break;
    }
    out.spec = apply_step(out.spec, step);
    out.trail.push_back(std::move(step));
  }
  return out;
}

}  // namespace leib
