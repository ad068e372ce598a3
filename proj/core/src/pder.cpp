#include "bolalg/pder.hpp"

namespace bolalg {

namespace {

bool skewness_holds(const BolAlgebra& a) {
  const Report r = check_axioms(a, Profile::consistent);
  return r.passed(std::string(axiom::binary_skew)) && r.passed(std::string(axiom::skew_last));
}

}  // namespace

bool CompanionSet::contains(const Vector& z) const {
  return defined && homogeneous.contains(z - particular);
}

Vector pack_pair(const Matrix& d, const Vector& z) {
  const std::size_t n = z.size();
  if (d.rows() != n || d.cols() != n) throw DimensionError("pack_pair: D must be n x n");
  Vector out(n * n + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r * n + c] = d(r, c);
  for (std::size_t k = 0; k < n; ++k) out[n * n + k] = z[k];
  return out;
}

std::pair<Matrix, Vector> unpack_pair(std::size_t n, const Vector& pair) {
  if (pair.size() != n * n + n) throw DimensionError("unpack_pair: expected n^2 + n coordinates");
  Matrix d(n, n);
  Vector z(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) d(r, c) = pair[r * n + c];
  for (std::size_t k = 0; k < n; ++k) z[k] = pair[n * n + k];
  return {d, z};
}

Vector pder_residual(const BolAlgebra& a, const Matrix& d, const Vector& z, std::size_t i,
                     std::size_t j) {
  const std::size_t n = a.dim();
  const Vector x = Vector::unit(n, i), y = Vector::unit(n, j);
  const Vector xy = a.basis_product(i, j);
  Vector r = d.apply(xy);
  r -= a.product(d.col(i), y);
  r -= a.product(x, d.col(j));
  r -= a.triple(z, x, y);
  r -= a.product(xy, z);
  return r;
}

Verdict is_pseudo_derivation(const BolAlgebra& a, const Matrix& d, const Vector& z) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n || z.size() != n)
    throw DimensionError("is_pseudo_derivation: shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = pder_residual(a, d, z, i, j);
      if (!r.is_zero()) return Verdict::no(Witness{{i + 1, j + 1}, std::move(r), "identity fails"});
    }
  return Verdict::yes();
}

PDerSolution pder_solve(const BolAlgebra& a) {
  const std::size_t n = a.dim();
  const std::size_t unknowns = n * n + n;
  const bool skew = skewness_holds(a);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = skew ? i + 1 : 0; j < n; ++j) pairs.emplace_back(i, j);

  // The residual is linear in (D, z): column u of the system is the residual
  // of the u-th unit pair vector, stacked over all imposed basis pairs.
  Matrix system(pairs.size() * n, unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    const auto [d, z] = unpack_pair(n, Vector::unit(unknowns, u));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const Vector r = pder_residual(a, d, z, pairs[p].first, pairs[p].second);
      for (std::size_t l = 0; l < n; ++l) system(p * n + l, u) = r[l];
    }
  }
  return PDerSolution{n, nullspace(system), skew};
}

CompanionSet companions_of(const BolAlgebra& a, const Matrix& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("companions_of: D must be n x n");
  // residual(D, z) = residual(D, 0) + residual(0, z); solve residual(0, z) = -residual(D, 0).
  const Matrix zero(n, n);
  Matrix system(n * n * n, n);
  Vector rhs(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t base = (i * n + j) * n;
      const Vector fixed = pder_residual(a, d, Vector(n), i, j);
      for (std::size_t l = 0; l < n; ++l) rhs[base + l] = -fixed[l];
      for (std::size_t s = 0; s < n; ++s) {
        const Vector r = pder_residual(a, zero, Vector::unit(n, s), i, j);
        for (std::size_t l = 0; l < n; ++l) system(base + l, s) = r[l];
      }
    }
  auto sol = solve_affine(system, rhs);
  if (!sol) return CompanionSet{false, Vector(n), Subspace::zero(n)};
  return CompanionSet{true, std::move(sol->particular), std::move(sol->homogeneous)};
}

Matrix d_matrix(const BolAlgebra& a, const Vector& alpha, const Vector& beta) {
  const std::size_t n = a.dim();
  if (alpha.size() != n || beta.size() != n) throw DimensionError("d_matrix: dimension mismatch");
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.set_col(k, a.triple(Vector::unit(n, k), alpha, beta));
  return m;
}

Subspace inner_pder_span(const BolAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(pack_pair(d_matrix(a, Vector::unit(n, i), Vector::unit(n, j)),
                               a.basis_product(i, j)));
  return Subspace::span(n * n + n, gens);
}

}  // namespace bolalg
