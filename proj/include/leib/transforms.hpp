#pragma once

#include <cstdint>
#include <vector>

#include "leib/extension.hpp"

namespace leib {

enum class StepKind { basis_change, shift, recombination };

// One isomorphism move on extension data. Payload depends on kind:
// basis_change uses S (r x r, invertible), shift uses mu (s vectors of
// length r), recombination uses G (s x s, invertible).
struct TransformStep {
  StepKind kind;
  Mat S;
  std::vector<Vec> mu;
  Mat G;

  static TransformStep basis_change(Mat s);
  static TransformStep shift(std::vector<Vec> mu);
  static TransformStep recombination(Mat g);
};

// n' = S n: conjugates L and R, maps sigma through (S^-1)^T.
ExtensionSpec apply_basis_change(const ExtensionSpec& spec, const Mat& S);

// x'_a = x_a + mu^a . n: L and R unchanged,
// sigma^{ab} += (R^b)^T mu^a + (L^a)^T mu^b.
ExtensionSpec apply_shift(const ExtensionSpec& spec,
                          const std::vector<Vec>& mu);

// x'_a = sum_b G_ab x_b: recombines operator blocks and sigma bilinearly.
ExtensionSpec apply_recombination(const ExtensionSpec& spec, const Mat& G);

ExtensionSpec apply_step(const ExtensionSpec& spec, const TransformStep& step);
ExtensionSpec apply_trail(const ExtensionSpec& spec,
                          const std::vector<TransformStep>& trail);

// The (r+s) x (r+s) change-of-basis matrix P with new basis = P * old basis,
// for transporting structure constants of the built algebra.
Mat step_block_matrix(const TransformStep& step, int r, int s);

// Structure constants in the basis y'_i = sum_a P_ia y_a.
LeibnizAlgebra transport_structure(const LeibnizAlgebra& alg, const Mat& P);

struct OrbitSample {
  ExtensionSpec spec;
  std::vector<TransformStep> trail;
};

// Deterministic pseudo-random walk through the isomorphism orbit. Entries
// are drawn from a small rational pool; invertibility is enforced by
// rejection.
OrbitSample random_orbit_sample(const ExtensionSpec& spec, std::uint64_t seed,
                                int steps);

}  // namespace leib
