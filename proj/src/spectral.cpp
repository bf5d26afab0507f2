#include "leib/spectral.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace leib {

JordanData jordan_chains(const Mat& m) {
  if (!m.square()) fail(Errc::dimension_mismatch, "jordan of nonsquare");
  int n = m.rows();
  Poly p = char_poly(m);
  auto roots = rational_roots(p);
  int total = 0;
  for (auto& [r, mult] : roots) total += mult;
  if (total < n) {
    Poly res = p;
    for (auto& [r, mult] : roots)
      for (int i = 0; i < mult; ++i)
        res = Poly::divmod(res, Poly(Vec{-r, Rat(1)})).first;
    fail(Errc::irrational_spectrum,
         "characteristic polynomial has irrational factor " + res.str());
  }

  JordanData data;
  data.n = n;
  for (auto& [lambda, mult] : roots) {
    Mat a = m - lambda * Mat::identity(n);
    // Nullspace filtration up to stabilization at the algebraic multiplicity.
    std::vector<Subspace> filt;  // filt[k] = ker a^{k+1}
    Mat ak = a;
    while (true) {
      filt.push_back(Subspace::span(n, nullspace(ak)));
      if (filt.back().dim() == mult) break;
      ak = ak * a;
    }
    int height = static_cast<int>(filt.size());
    std::vector<std::vector<Vec>> level_tops(height + 1);
    Subspace used = height >= 2 ? filt[height - 2] : Subspace::zero(n);
    for (int k = height; k >= 1; --k) {
      // Chains of length >= k contribute their height-k vector; extend the
      // picked set with canonical nullspace basis vectors of ker a^k.
      std::vector<Vec> newly;
      for (const Vec& cand : filt[k - 1].basis()) {
        if (used.contains(cand)) continue;
        newly.push_back(cand);
        std::vector<Vec> ext = used.basis();
        ext.push_back(cand);
        used = Subspace::span(n, ext);
      }
      for (const Vec& top : newly) {
        JordanChain chain;
        chain.eigenvalue = lambda;
        std::vector<Vec> down;
        Vec v = top;
        for (int i = 0; i < k; ++i) {
          down.push_back(v);
          v = a.apply(v);
        }
        std::reverse(down.begin(), down.end());
        chain.chain = std::move(down);
        data.blocks.push_back(std::move(chain));
      }
      if (k >= 2) {
        // Pass the images of current tops down one level as committed picks.
        std::vector<Vec> next_used =
            k >= 3 ? filt[k - 3].basis() : std::vector<Vec>{};
        for (const JordanChain& c : data.blocks) {
          if (c.eigenvalue != lambda) continue;
          if (c.size() >= k - 1) next_used.push_back(c.chain[k - 2]);
        }
        used = Subspace::span(n, next_used);
      }
    }
  }
  return data;
}

namespace {

int default_group(const Rat& e) { return e.is_zero() ? 1 : 0; }

}  // namespace

JordanResult assemble_jordan(const JordanData& data, int (*group)(const Rat&)) {
  if (!group) group = default_group;
  std::vector<const JordanChain*> order;
  for (const auto& b : data.blocks) order.push_back(&b);
  std::stable_sort(order.begin(), order.end(),
                   [&](const JordanChain* a, const JordanChain* b) {
                     auto ka = std::tuple(group(a->eigenvalue), -a->size());
                     auto kb = std::tuple(group(b->eigenvalue), -b->size());
                     if (ka != kb) return ka < kb;
                     return a->eigenvalue > b->eigenvalue;
                   });
  int n = data.n;
  Mat j(n, n);
  std::vector<Vec> cols;
  int pos = 0;
  for (const JordanChain* b : order) {
    for (int i = 0; i < b->size(); ++i) {
      j.at(pos + i, pos + i) = b->eigenvalue;
      if (i + 1 < b->size()) j.at(pos + i, pos + i + 1) = Rat(1);
      cols.push_back(b->chain[i]);
    }
    pos += b->size();
  }
  Mat p = Mat::from_cols(cols);
  return JordanResult{j, inverse(p)};
}

JordanResult jordan_form(const Mat& m) {
  return assemble_jordan(jordan_chains(m));
}

bool is_jordan_matrix(const Mat& m) {
  if (!m.square()) return false;
  int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (j == i + 1) {
        const Rat& v = m.at(i, j);
        if (!v.is_zero() && v != Rat(1)) return false;
        if (v == Rat(1) && m.at(i, i) != m.at(j, j)) return false;
      } else if (!m.at(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

NilindependenceResult nilindependent_matrices(const std::vector<Mat>& xs) {
  if (xs.empty() || xs.size() > 2)
    fail(Errc::unsupported_arity,
         "nilindependence supports 1 or 2 matrices, got " +
             std::to_string(xs.size()));
  for (const Mat& x : xs)
    if (!x.square() || x.rows() != xs[0].rows())
      fail(Errc::dimension_mismatch, "nilindependence matrix sizes");

  NilindependenceResult res;
  if (xs.size() == 1) {
    if (is_nilpotent(xs[0])) {
      res.independent = false;
      res.certificate = "the matrix itself is nilpotent";
      res.witness = Vec{Rat(1)};
    } else {
      res.independent = true;
      res.certificate = "the matrix is not nilpotent";
    }
    return res;
  }

  if (is_nilpotent(xs[1])) {
    res.independent = false;
    res.certificate = "second matrix is nilpotent";
    res.witness = Vec{Rat(0), Rat(1)};
    return res;
  }
  // Combinations with nonzero first coefficient scale to X1 + t*X2; the
  // remaining line (0,1) was just checked. Nilpotency of X1 + t*X2 over the
  // closure means every non-leading coefficient of its characteristic
  // polynomial vanishes at t, so a witness exists iff their gcd has a root.
  auto coeffs = pencil_char_poly(xs[0], xs[1]);
  Poly g;
  for (size_t k = 0; k + 1 < coeffs.size(); ++k) g = gcd(g, coeffs[k]);
  if (g.is_zero()) {
    res.independent = false;
    res.certificate = "every member of the pencil X1 + t*X2 is nilpotent";
    res.witness = Vec{Rat(1), Rat(0)};
    return res;
  }
  if (g.degree() == 0) {
    res.independent = true;
    res.certificate =
        "gcd of the non-leading pencil coefficients is a nonzero constant";
    return res;
  }
  auto roots = rational_roots(g);
  if (!roots.empty()) {
    Rat t0 = roots.front().first;
    res.independent = false;
    res.certificate = "X1 + (" + t0.str() + ")*X2 is nilpotent";
    res.witness = Vec{Rat(1), t0};
    return res;
  }
  res.independent = false;
  res.certificate =
      "pencil coefficient gcd " + g.str() +
      " vanishes over the algebraic closure; no rational witness";
  return res;
}

}  // namespace leib
