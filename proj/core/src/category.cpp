#include "bolalg/category.hpp"

namespace bolalg {

namespace {

struct MatrixSolution {
  Matrix x;
  bool unique;
};

/// Solves a·x = b column by column; nullopt when some column is inconsistent.
std::optional<MatrixSolution> solve_matrix(const Matrix& a, const Matrix& b) {
  Matrix x(a.cols(), b.cols());
  bool unique = true;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto sol = solve_affine(a, b.col(c));
    if (!sol) return std::nullopt;
    x.set_col(c, sol->particular);
    unique = sol->homogeneous.dim() == 0;
  }
  if (b.cols() == 0) unique = nullspace(a).dim() == 0;
  return MatrixSolution{std::move(x), unique};
}

Factorization finish(bool cone_valid, std::optional<MatrixSolution> sol, const BolAlgebra& from,
                     const BolAlgebra& to) {
  Factorization out;
  out.cone_valid = cone_valid;
  if (!sol) return out;
  out.exists = true;
  out.unique = sol->unique;
  out.mediator_morphism = is_morphism(Morphism(from, to, sol->x));
  out.mediator = std::move(sol->x);
  return out;
}

void require_parallel(const Morphism& f, const Morphism& g, const char* what) {
  if (f.source() != g.source() || f.target() != g.target())
    throw DimensionError(std::string(what) + ": maps must share source and target");
}

void require_morphisms(const Morphism& f, const Morphism& g, const char* what) {
  for (const Morphism* m : {&f, &g}) {
    const Verdict v = is_morphism(*m);
    if (!v) throw PreconditionError(std::string(what) + ": input is not a morphism (" +
                                    v.witness->detail + ")");
  }
}

}  // namespace

Product product(std::span<const BolAlgebra> factors) {
  if (factors.empty()) throw PreconditionError("product: empty list of algebras");
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (const auto& f : factors) {
    offset.push_back(total);
    total += f.dim();
  }

  BolAlgebra out(total);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const BolAlgebra& a = factors[f];
    const std::size_t o = offset[f], n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          out.bin(o + i, o + j, o + k) = a.bin(i, j, k);
          for (std::size_t l = 0; l < n; ++l) out.ter(o + i, o + j, o + k, o + l) = a.ter(i, j, k, l);
        }
  }

  Product prod{out, {}, {}};
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const std::size_t o = offset[f], n = factors[f].dim();
    Matrix p(n, total), e(total, n);
    for (std::size_t i = 0; i < n; ++i) {
      p(i, o + i) = 1;
      e(o + i, i) = 1;
    }
    prod.projections.emplace_back(out, factors[f], std::move(p));
    prod.injections.emplace_back(factors[f], out, std::move(e));
  }
  return prod;
}

Factorization factor_through_product(const Product& prod, const BolAlgebra& apex,
                                     std::span<const Morphism> legs) {
  if (legs.size() != prod.projections.size())
    throw DimensionError("factor_through_product: one leg per factor required");
  bool cone_valid = true;
  std::vector<Vector> rows;
  for (std::size_t f = 0; f < legs.size(); ++f) {
    if (legs[f].source() != apex || legs[f].target() != prod.projections[f].target())
      throw DimensionError("factor_through_product: leg " + std::to_string(f + 1) +
                           " has the wrong source or target");
    cone_valid = cone_valid && is_morphism(legs[f]).holds;
    for (std::size_t r = 0; r < legs[f].matrix().rows(); ++r) rows.push_back(legs[f].matrix().row(r));
  }
  // Stacked projections form the identity, but solving keeps the check honest.
  std::vector<Vector> prow;
  for (const auto& p : prod.projections)
    for (std::size_t r = 0; r < p.matrix().rows(); ++r) prow.push_back(p.matrix().row(r));
  const std::size_t total = prod.algebra.dim();
  const Matrix stacked_p = Matrix::from_rows(total, prow);
  const Matrix stacked_h = Matrix::from_rows(apex.dim(), rows);
  return finish(cone_valid, solve_matrix(stacked_p, stacked_h), apex, prod.algebra);
}

Equalizer equalizer(const Morphism& f, const Morphism& g) {
  require_parallel(f, g, "equalizer");
  require_morphisms(f, g, "equalizer");
  Subspace e = nullspace(f.matrix() - g.matrix());
  Verdict closed = is_subalgebra(f.source(), e);
  if (!closed) throw PreconditionError("equalizer: solution space is not a subalgebra");
  BolAlgebra sub = restrict_to(f.source(), e);
  const auto basis = e.basis();
  Morphism incl(sub, f.source(), Matrix::from_columns(f.source().dim(), basis));
  const bool commutes = compose(f, incl).matrix() == compose(g, incl).matrix();
  return Equalizer{std::move(e), std::move(sub), std::move(incl), std::move(closed), commutes};
}

Factorization factor_through_equalizer(const Equalizer& eq, const Morphism& f, const Morphism& g,
                                       const Morphism& h) {
  if (h.target() != f.source())
    throw DimensionError("factor_through_equalizer: h must land in the source of f and g");
  const bool cone_valid =
      is_morphism(h).holds && compose(f, h).matrix() == compose(g, h).matrix();
  return finish(cone_valid, solve_matrix(eq.inclusion.matrix(), h.matrix()), h.source(),
                eq.algebra);
}

Coequalizer coequalizer(const Morphism& f, const Morphism& g, CoequalizerMode mode,
                        IdealMode ideal_mode) {
  require_parallel(f, g, "coequalizer");
  require_morphisms(f, g, "coequalizer");
  const BolAlgebra& target = f.target();
  Subspace gens = mode == CoequalizerMode::images
                      ? subspace_sum(column_space(f.matrix()), column_space(g.matrix()))
                      : column_space(f.matrix() - g.matrix());
  Subspace ideal = ideal_closure(target, gens, ideal_mode);
  Quotient quot = quotient(target, ideal, ideal_mode);
  const bool commutes =
      compose(quot.projection, f).matrix() == compose(quot.projection, g).matrix();
  return Coequalizer{std::move(ideal), std::move(quot.algebra), std::move(quot.projection),
                     commutes};
}

Factorization factor_through_coequalizer(const Coequalizer& coeq, const Morphism& f,
                                         const Morphism& g, const Morphism& h) {
  if (h.source() != f.target())
    throw DimensionError("factor_through_coequalizer: h must start at the target of f and g");
  const bool cone_valid =
      is_morphism(h).holds && compose(h, f).matrix() == compose(h, g).matrix();
  // x·p = h  <=>  p^T x^T = h^T
  auto sol = solve_matrix(coeq.projection.matrix().transpose(), h.matrix().transpose());
  if (sol) sol->x = sol->x.transpose();
  return finish(cone_valid, std::move(sol), coeq.algebra, h.target());
}

}  // namespace bolalg
