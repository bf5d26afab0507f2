#pragma once

#include <vector>

#include "leib/extension.hpp"

namespace leib {

struct L22Options {
  std::vector<Rat> grid;
  int jobs = 1;
  int example_cap = 3;
};

struct L22Counts {
  long long cells = 0;
  long long sigma_candidates = 0;
  long long valid = 0;
  long long lie_valid = 0;
  long long decomposable_non_lie = 0;
  long long indecomposable_non_lie = 0;

  friend bool operator==(const L22Counts&, const L22Counts&) = default;
};

struct L22Report {
  L22Counts counts;
  std::vector<ExtensionSpec> lie_examples;
  std::vector<ExtensionSpec> decomposable_examples;
  std::vector<ExtensionSpec> indecomposable_examples;
};

// Exhaustive sweep of r = s = 2 specs on a grid. R1 runs over the eight
// normalized shapes (diagonal with leading entry +-1 and second entry in
// {1, 0, -1}, or a 2x2 Jordan block with eigenvalue +-1); R2, L1, L2 run
// over grid matrices satisfying the operator constraints; sigma runs over
// the grid points of the solution space of the mixed linear identity.
// Valid specs are counted as Lie, decomposable non-Lie, or indecomposable
// non-Lie. The report is independent of the job count.
L22Report verify_l22(const L22Options& opts);

// Splits a valid r = s = 2 spec into a direct sum of two ideals when a
// recombination plus shift exhibits one. The transformed spec is written to
// *out when given; the split is re-verified on the built algebra before
// returning true.
bool l22_decomposable(const ExtensionSpec& spec, ExtensionSpec* out = nullptr);

}  // namespace leib
