#include "leib/l22.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <thread>

#include "leib/algebra.hpp"
#include "leib/spectral.hpp"
#include "leib/transforms.hpp"

namespace leib {

namespace {

Rat cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

bool is_scalar2(const Mat& m) {
  return m.at(0, 1).is_zero() && m.at(1, 0).is_zero() &&
         m.at(0, 0) == m.at(1, 1);
}

Vec normalize_line(Vec v) {
  Rat lead = v[0].is_zero() ? v[1] : v[0];
  return {v[0] / lead, v[1] / lead};
}

// Lines of the abelian part invariant under all four acting matrices:
// rational eigenlines of the first non-scalar one, filtered by the rest.
// Empty when every matrix is scalar (then every line is invariant).
std::vector<Vec> joint_invariant_lines(const std::array<Mat, 4>& ops) {
  const Mat* base = nullptr;
  for (const Mat& m : ops)
    if (!is_scalar2(m)) {
      base = &m;
      break;
    }
  std::vector<Vec> lines;
  if (!base) return lines;
  for (const auto& [lambda, mult] : rational_roots(char_poly(*base))) {
    Mat shifted = *base - lambda * Mat::identity(2);
    for (const Vec& v : nullspace(shifted)) {
      bool invariant = true;
      for (const Mat& m : ops)
        if (!cross(m.apply(v), v).is_zero()) invariant = false;
      if (!invariant) continue;
      Vec line = normalize_line(v);
      if (std::find(lines.begin(), lines.end(), line) == lines.end())
        lines.push_back(line);
    }
  }
  return lines;
}

Vec embed_a(const Vec& v) { return {v[0], v[1], Rat(0), Rat(0)}; }

Vec unit4(int k) {
  Vec v(4);
  v[k] = Rat(1);
  return v;
}

bool check_split(const ExtensionSpec& spec, const Subspace& i1,
                 const Subspace& i2) {
  LeibnizAlgebra alg = build_algebra(spec);
  return i1.dim() + i2.dim() == 4 && i1.intersect(i2).is_zero() &&
         i1.sum(i2) == Subspace::whole(4) && ideal_test(alg, i1) &&
         ideal_test(alg, i2);
}

// Acting matrices on the abelian part: p are the left actions of the two
// generators, q the right actions.
struct Actions {
  std::array<Mat, 2> p, q;
  std::array<Mat, 4> all() const { return {p[0], p[1], q[0], q[1]}; }
};

// Split with a one-dimensional summand: a line killed by every acting
// matrix, a complementary invariant line absorbing sigma after a shift.
bool split_1_3(const ExtensionSpec& spec, const Actions& act,
               ExtensionSpec* out) {
  Mat stacked(8, 2);
  {
    std::array<Mat, 4> ops = act.all();
    for (int a = 0; a < 4; ++a)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          stacked.at(2 * a + i, j) = ops[a].at(i, j);
  }
  std::vector<Vec> kernel = nullspace(stacked);
  if (kernel.empty()) return false;
  std::vector<Vec> lines = joint_invariant_lines(act.all());
  for (const Vec& k : kernel) {
    Vec ell = normalize_line(k);
    for (const Vec& m : lines) {
      if (m == ell) continue;
      Vec phi{m[1], -m[0]};  // functional with kernel m
      Mat sys(4, 4);
      Vec rhs(4);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          int row = 2 * a + b;
          for (int j = 0; j < 2; ++j) {
            sys.at(row, 2 * a + j) += phi[0] * act.q[b].at(0, j) +
                                      phi[1] * act.q[b].at(1, j);
            sys.at(row, 2 * b + j) += phi[0] * act.p[a].at(0, j) +
                                      phi[1] * act.p[a].at(1, j);
          }
          rhs[row] = -dot(phi, spec.sigma[a][b]);
        }
      Vec mu;
      if (!solve(sys, rhs, mu)) continue;
      ExtensionSpec shifted =
          apply_shift(spec, {{mu[0], mu[1]}, {mu[2], mu[3]}});
      Subspace i1 = Subspace::span(4, {embed_a(ell)});
      Subspace i2 = Subspace::span(4, {embed_a(m), unit4(2), unit4(3)});
      if (!check_split(shifted, i1, i2)) continue;
      if (out) *out = shifted;
      return true;
    }
  }
  return false;
}

// Split into two 2-dimensional ideals: each takes one invariant line and
// one recombined generator acting trivially on the other line.
bool split_2_2(const ExtensionSpec& spec, const Actions& act,
               ExtensionSpec* out) {
  std::vector<Vec> lines = joint_invariant_lines(act.all());
  if (lines.size() < 2) return false;
  auto killers = [&](const Vec& v) {
    // {g : (g1 p1 + g2 p2) v = 0 and (g1 q1 + g2 q2) v = 0}
    Mat sys(4, 2);
    for (int g = 0; g < 2; ++g)
      for (int i = 0; i < 2; ++i) {
        sys.at(i, g) = dot(act.p[g].row(i), v);
        sys.at(2 + i, g) = dot(act.q[g].row(i), v);
      }
    return nullspace(sys);
  };
  for (size_t ui = 0; ui < lines.size(); ++ui)
    for (size_t vi = 0; vi < lines.size(); ++vi) {
      if (ui == vi) continue;
      const Vec& u = lines[ui];
      const Vec& v = lines[vi];
      std::vector<Vec> s1 = killers(v), s2 = killers(u);
      for (const Vec& g1 : s1)
        for (const Vec& g2 : s2) {
          if (cross(g1, g2).is_zero()) continue;
          ExtensionSpec rec =
              apply_recombination(spec, Mat::from_rows({g1, g2}));
          Actions ra{{rec.L[0].transpose(), rec.L[1].transpose()},
                     {rec.R[0].transpose(), rec.R[1].transpose()}};
          Vec phi_u{u[1], -u[0]};  // kernel u
          Vec phi_v{v[1], -v[0]};  // kernel v
          // sigma'11 on the u line, sigma'22 on the v line, mixed ones zero.
          Mat sys(6, 4);
          Vec rhs(6);
          auto add_row = [&](int row, const Vec& functional, int a, int b) {
            for (int j = 0; j < 2; ++j) {
              sys.at(row, 2 * a + j) += functional[0] * ra.q[b].at(0, j) +
                                        functional[1] * ra.q[b].at(1, j);
              sys.at(row, 2 * b + j) += functional[0] * ra.p[a].at(0, j) +
                                        functional[1] * ra.p[a].at(1, j);
            }
            rhs[row] -= dot(functional, rec.sigma[a][b]);
          };
          add_row(0, phi_v, 0, 0);
          add_row(1, phi_u, 1, 1);
          add_row(2, {Rat(1), Rat(0)}, 0, 1);
          add_row(3, {Rat(0), Rat(1)}, 0, 1);
          add_row(4, {Rat(1), Rat(0)}, 1, 0);
          add_row(5, {Rat(0), Rat(1)}, 1, 0);
          Vec mu;
          if (!solve(sys, rhs, mu)) continue;
          ExtensionSpec shifted =
              apply_shift(rec, {{mu[0], mu[1]}, {mu[2], mu[3]}});
          Subspace i1 = Subspace::span(4, {embed_a(u), unit4(2)});
          Subspace i2 = Subspace::span(4, {embed_a(v), unit4(3)});
          if (!check_split(shifted, i1, i2)) continue;
          if (out) *out = shifted;
          return true;
        }
    }
  return false;
}

}  // namespace

bool l22_decomposable(const ExtensionSpec& spec, ExtensionSpec* out) {
  spec.check_shape();
  if (spec.r != 2 || spec.s != 2)
    fail(Errc::bad_argument, "decomposability test handles r = s = 2");
  // With four scalar matrices any cross-bracket condition zeroes a whole
  // generator combination, which nilindependence of a valid spec forbids.
  if (is_scalar2(spec.L[0]) && is_scalar2(spec.L[1]) &&
      is_scalar2(spec.R[0]) && is_scalar2(spec.R[1]))
    return false;
  Actions act{{spec.L[0].transpose(), spec.L[1].transpose()},
              {spec.R[0].transpose(), spec.R[1].transpose()}};
  if (split_1_3(spec, act, out)) return true;
  return split_2_2(spec, act, out);
}

namespace {

struct Cell {
  Mat r1, r2, l1, l2;
};

struct Shard {
  L22Counts counts;
  // (cell index, order within cell) keeps merged output independent of the
  // job count.
  std::vector<std::pair<std::pair<long long, long long>, ExtensionSpec>> lie,
      decomposable, indecomposable;
};

int sigma_index(int a, int b, int j) { return (a * 2 + b) * 2 + j; }

void process_cell(const Cell& cell, long long cell_seq,
                  const std::vector<Rat>& grid, int cap, Shard& shard) {
  // sigma-independent validity prechecks: the generators must be
  // nilindependent and no generator combination may act nilpotently on the
  // abelian part (otherwise the nilradical grows past it).
  auto stack2 = [](const Mat& l, const Mat& r) {
    Mat m(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m.at(i, j) = l.at(i, j);
        m.at(2 + i, 2 + j) = r.at(i, j);
      }
    return m;
  };
  if (!nilindependent_matrices({stack2(cell.l1, cell.r1),
                                stack2(cell.l2, cell.r2)})
           .independent)
    return;
  if (!nilindependent_matrices({cell.l1, cell.l2}).independent) return;

  // The mixed identity is linear in sigma; enumerate its solution space
  // restricted to the grid.
  Mat rr(16, 8);
  {
    const Mat* l[2] = {&cell.l1, &cell.l2};
    const Mat* r[2] = {&cell.r1, &cell.r2};
    int row = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int g = 0; g < 2; ++g)
          for (int k = 0; k < 2; ++k, ++row)
            for (int j = 0; j < 2; ++j) {
              rr.at(row, sigma_index(b, g, j)) += l[a]->at(j, k);
              rr.at(row, sigma_index(a, b, j)) -= r[g]->at(j, k);
              rr.at(row, sigma_index(a, g, j)) -= l[b]->at(j, k);
            }
  }
  std::vector<int> pivots = rref(rr);
  std::vector<bool> is_pivot(8, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < 8; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  auto on_grid = [&](const Rat& v) {
    return std::find(grid.begin(), grid.end(), v) != grid.end();
  };

  int f = static_cast<int>(free_cols.size());
  std::vector<size_t> odo(f, 0);
  long long local = 0;
  while (true) {
    Vec x(8);
    for (int i = 0; i < f; ++i) x[free_cols[i]] = grid[odo[i]];
    bool ok = true;
    for (size_t prow = 0; prow < pivots.size() && ok; ++prow) {
      Rat v;
      for (int c : free_cols) v -= rr.at(static_cast<int>(prow), c) * x[c];
      if (!on_grid(v)) ok = false;
      x[pivots[prow]] = v;
    }
    if (ok) {
      shard.counts.sigma_candidates += 1;
      ExtensionSpec spec = ExtensionSpec::zero(2, 2);
      spec.R[0] = cell.r1;
      spec.R[1] = cell.r2;
      spec.L[0] = cell.l1;
      spec.L[1] = cell.l2;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int j = 0; j < 2; ++j)
            spec.sigma[a][b][j] = x[sigma_index(a, b, j)];
      if (local % 97 == 0 &&
          !check_left_leibniz(build_algebra(spec)).empty())
        fail(Errc::bad_argument,
             "sweep cross-check failed: constraints held but the bracket "
             "identity does not");
      ValidationResult vr = validate_spec(spec);
      if (!vr.valid)
        fail(Errc::bad_argument,
             "sweep precheck and validation disagree on a candidate");
      shard.counts.valid += 1;
      auto key = std::make_pair(cell_seq, local);
      if (is_lie(build_algebra(spec))) {
        shard.counts.lie_valid += 1;
        if (static_cast<int>(shard.lie.size()) < cap)
          shard.lie.emplace_back(key, spec);
      } else if (l22_decomposable(spec)) {
        shard.counts.decomposable_non_lie += 1;
        if (static_cast<int>(shard.decomposable.size()) < cap)
          shard.decomposable.emplace_back(key, spec);
      } else {
        shard.counts.indecomposable_non_lie += 1;
        if (shard.indecomposable.size() < 32)
          shard.indecomposable.emplace_back(key, spec);
      }
      local += 1;
    } else {
      local += 1;
    }
    int d = f - 1;
    for (; d >= 0; --d) {
      if (++odo[d] < grid.size()) break;
      odo[d] = 0;
    }
    if (d < 0) break;
  }
}

}  // namespace

L22Report verify_l22(const L22Options& opts) {
  if (opts.grid.empty()) fail(Errc::bad_argument, "empty sweep grid");
  if (opts.jobs < 1) fail(Errc::bad_argument, "job count must be positive");
  std::vector<Rat> grid = opts.grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Mat> shapes;
  for (long lead : {1L, -1L}) {
    for (long second : {1L, 0L, -1L})
      shapes.push_back(Mat::diag({Rat(lead), Rat(second)}));
    Mat j{{Rat(lead), Rat(1)}, {Rat(0), Rat(lead)}};
    shapes.push_back(j);
  }

  std::vector<Mat> grid_mats;
  for (const Rat& a : grid)
    for (const Rat& b : grid)
      for (const Rat& c : grid)
        for (const Rat& d : grid) grid_mats.push_back(Mat{{a, b}, {c, d}});

  std::vector<Cell> cells;
  for (const Mat& r1 : shapes)
    for (const Mat& r2 : grid_mats) {
      std::vector<const Mat*> l1s;
      for (const Mat& l1 : grid_mats) {
        if (!commutator(l1, r1).is_zero()) continue;
        if (!commutator(l1, r2).is_zero()) continue;
        Mat sum = r1 + l1;
        if (!(sum * r1).is_zero() || !(sum * r2).is_zero()) continue;
        l1s.push_back(&l1);
      }
      if (l1s.empty()) continue;
      for (const Mat& l2 : grid_mats) {
        if (!commutator(l2, r1).is_zero()) continue;
        if (!commutator(l2, r2).is_zero()) continue;
        Mat sum = r2 + l2;
        if (!(sum * r1).is_zero() || !(sum * r2).is_zero()) continue;
        for (const Mat* l1 : l1s) {
          if (!commutator(*l1, l2).is_zero()) continue;
          cells.push_back({r1, r2, *l1, l2});
        }
      }
    }

  int jobs = std::min(opts.jobs,
                      static_cast<int>(std::max<size_t>(cells.size(), 1)));
  std::vector<Shard> shards(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](int w) {
    try {
      for (size_t i = w; i < cells.size(); i += jobs)
        process_cell(cells[i], static_cast<long long>(i), grid,
                     opts.example_cap, shards[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  L22Report report;
  report.counts.cells = static_cast<long long>(cells.size());
  auto merge = [&](auto member, std::vector<ExtensionSpec>& dst, size_t cap) {
    std::vector<std::pair<std::pair<long long, long long>, ExtensionSpec>> all;
    for (Shard& s : shards) {
      auto& src = s.*member;
      all.insert(all.end(), src.begin(), src.end());
    }
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, spec] : all) {
      if (dst.size() >= cap) break;
      dst.push_back(spec);
    }
  };
  for (const Shard& s : shards) {
    report.counts.sigma_candidates += s.counts.sigma_candidates;
    report.counts.valid += s.counts.valid;
    report.counts.lie_valid += s.counts.lie_valid;
    report.counts.decomposable_non_lie += s.counts.decomposable_non_lie;
    report.counts.indecomposable_non_lie += s.counts.indecomposable_non_lie;
  }
  merge(&Shard::lie, report.lie_examples, opts.example_cap);
  merge(&Shard::decomposable, report.decomposable_examples, opts.example_cap);
  merge(&Shard::indecomposable, report.indecomposable_examples, 32);
  return report;
}

}  // namespace leib
