#include "bolalg/algebra.hpp"

namespace bolalg {

namespace {

/// Inverse of the square matrix whose columns are `cols`; nullopt if singular.
std::optional<Matrix> inverse_of_columns(std::size_t n, const std::vector<Vector>& cols) {
  if (cols.size() != n) return std::nullopt;
  if (n == 0) return Matrix();
  Matrix aug(n, 2 * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) aug(r, c) = cols[c][r];
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = 1;
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

}  // namespace

Report lie_pair_preconditions(const LieAlgebra& g, const Subspace& b, const Subspace& h) {
  const std::size_t n = g.dim();
  if (b.ambient_dim() != n || h.ambient_dim() != n)
    throw DimensionError("lie pair: subspaces must live in the Lie algebra");

  Report report;
  const std::string direct(lie_pair::direct_sum);
  const Subspace meet = subspace_intersect(b, h);
  if (meet.dim() != 0) {
    report.add_fail(direct, Witness{{}, meet.basis_vector(0), "B and h intersect"});
  } else if (b.dim() + h.dim() != n) {
    report.add_fail(direct, Witness{{}, {},
                                    "dim B + dim h = " + std::to_string(b.dim() + h.dim()) +
                                        " but dim G = " + std::to_string(n)});
  } else {
    report.add_pass(direct);
  }

  const auto basis = b.basis();
  const std::size_t k = basis.size();
  std::vector<Vector> brackets;
  brackets.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) brackets.push_back(g.bracket(basis[i], basis[j]));

  bool closed = true;
  for (std::size_t i = 0; i < k && closed; ++i)
    for (std::size_t j = 0; j < k && closed; ++j)
      for (std::size_t l = 0; l < k && closed; ++l) {
        Vector v = g.bracket(basis[i], brackets[j * k + l]);
        if (!b.contains(v)) {
          report.add_fail(std::string(lie_pair::triple_closure),
                          Witness{{i + 1, j + 1, l + 1}, std::move(v), "[B,[B,B]] leaves B"});
          closed = false;
        }
      }
  if (closed) report.add_pass(std::string(lie_pair::triple_closure));

  const Subspace derived = Subspace::span(n, brackets);
  const Subspace overlap = subspace_intersect(derived, b);
  if (overlap.dim() != 0)
    report.add_fail(std::string(lie_pair::bracket_meets),
                    Witness{{}, overlap.basis_vector(0), "[B,B] meets B"});
  else
    report.add_pass(std::string(lie_pair::bracket_meets));
  return report;
}

BolAlgebra from_lie_pair(const LieAlgebra& g, const Subspace& b, const Subspace& h) {
  const Report pre = lie_pair_preconditions(g, b, h);
  for (const auto& c : pre.checks())
    if (!c.passed) throw LiePairError("from_lie_pair: precondition '" + c.name + "' fails", c);

  const std::size_t n = g.dim();
  const auto basis = b.basis();
  const std::size_t k = basis.size();
  std::vector<Vector> cols = basis;
  for (auto& v : h.basis()) cols.push_back(std::move(v));
  const Matrix to_split = *inverse_of_columns(n, cols);

  BolAlgebra out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Vector br = g.bracket(basis[i], basis[j]);
      const Vector split = to_split.apply(br);
      Vector coords(k);
      for (std::size_t c = 0; c < k; ++c) coords[c] = split[c];
      out.set_product(i, j, coords);

      for (std::size_t z = 0; z < k; ++z)
        out.set_triple(z, i, j, *b.coordinates(g.bracket(basis[z], br)));
    }
  return out;
}

}  // namespace bolalg
