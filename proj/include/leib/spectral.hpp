#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leib/poly.hpp"

namespace leib {

// One Jordan chain: chain[0] is the eigenvector, (M - eigenvalue*I) maps
// chain[k+1] to chain[k]. Block size = chain length.
struct JordanChain {
  Rat eigenvalue;
  std::vector<Vec> chain;
  int size() const { return static_cast<int>(chain.size()); }
};

struct JordanData {
  int n = 0;
  std::vector<JordanChain> blocks;
};

// Chains for every eigenvalue; IrrationalSpectrum (message names the
// residual factor) if the characteristic polynomial does not split over Q.
JordanData jordan_chains(const Mat& m);

struct JordanResult {
  Mat j;  // the Jordan matrix
  Mat s;  // s * m * inverse(s) == j
};

// Blocks ordered by an integer group key (ascending), then descending block
// size, then descending eigenvalue. group(e) lets callers promote a leader
// eigenvalue; the default order uses group 0 for nonzero and 1 for zero.
JordanResult assemble_jordan(const JordanData& data,
                             int (*group)(const Rat&) = nullptr);

JordanResult jordan_form(const Mat& m);

bool is_jordan_matrix(const Mat& m);

struct NilindependenceResult {
  bool independent = false;
  std::string certificate;
  // Coefficients of a nilpotent combination when dependence has a rational
  // witness; empty otherwise (dependence over the closure only).
  std::optional<Vec> witness;
};

// Decides whether no nontrivial linear combination (over the algebraic
// closure) of the given matrices is nilpotent. Supports 1 or 2 matrices;
// UnsupportedArity otherwise.
NilindependenceResult nilindependent_matrices(const std::vector<Mat>& xs);

}  // namespace leib
