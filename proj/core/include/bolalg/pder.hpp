#pragma once

#include <optional>
#include <utility>

#include "bolalg/ideals.hpp"

namespace bolalg {

/// All pairs (D, z) with D(x·y) = D(x)·y + x·D(y) + (z;x,y) + (x·y)·z.
/// Pair vectors have n² + n coordinates: D row-major, then z.
struct PDerSolution {
  std::size_t algebra_dim = 0;
  Subspace pair_space;
  bool skew_pairs_only = false;  ///< only i < j imposed (both skewness checks passed)
};

struct CompanionSet {
  bool defined = false;
  Vector particular;
  Subspace homogeneous;

  bool contains(const Vector& z) const;
};

Vector pack_pair(const Matrix& d, const Vector& z);
/// Inverse of pack_pair for an n-dimensional algebra.
std::pair<Matrix, Vector> unpack_pair(std::size_t n, const Vector& pair);

/// Defect of the identity at (e_i, e_j); zero iff it holds there.
Vector pder_residual(const BolAlgebra& algebra, const Matrix& d, const Vector& z, std::size_t i,
                     std::size_t j);

/// Checks the identity on all basis pairs; the witness is the first failing (i, j).
Verdict is_pseudo_derivation(const BolAlgebra& algebra, const Matrix& d, const Vector& z);

PDerSolution pder_solve(const BolAlgebra& algebra);

CompanionSet companions_of(const BolAlgebra& algebra, const Matrix& d);

/// Matrix of x -> (x; alpha, beta).
Matrix d_matrix(const BolAlgebra& algebra, const Vector& alpha, const Vector& beta);

/// span{(D_{e_i,e_j}, e_i·e_j) | i < j} in the pair space.
Subspace inner_pder_span(const BolAlgebra& algebra);

}  // namespace bolalg
