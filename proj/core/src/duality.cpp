#include "bolalg/duality.hpp"

namespace bolalg {

BolModule dual_module(const BolAlgebra& algebra, const BolModule& v, DualVariant variant) {
  if (algebra.dim() != v.alg_dim()) throw DimensionError("dual_module: dimension mismatch");
  const std::size_t n = v.alg_dim();
  BolModule out(n, v.mod_dim());
  for (std::size_t i = 0; i < n; ++i) {
    out.left(i) = v.left(i).transpose();
    out.right(i) = variant == DualVariant::strict ? v.left(i).transpose() : v.right(i).transpose();
    for (std::size_t j = 0; j < n; ++j) {
      out.vbb(i, j) = v.vbb(j, i).transpose();
      out.bvb(i, j) = v.bvb(j, i).transpose();
      out.bbv(i, j) = v.bbv(j, i).transpose();
    }
  }
  return out;
}

BolModule opposite_rep(const BolAlgebra& algebra, const BolModule& v) {
  if (algebra.dim() != v.alg_dim()) throw DimensionError("opposite_rep: dimension mismatch");
  const std::size_t n = v.alg_dim();
  BolModule out(n, v.mod_dim());
  for (std::size_t i = 0; i < n; ++i) {
    out.left(i) = v.right(i);
    out.right(i) = v.left(i);
    for (std::size_t j = 0; j < n; ++j) {
      out.vbb(i, j) = v.vbb(j, i);
      out.bvb(i, j) = v.bvb(j, i);
      out.bbv(i, j) = v.bbv(j, i);
    }
  }
  return out;
}

BolModule transpose_actions(const BolModule& v) {
  const std::size_t n = v.alg_dim();
  BolModule out(n, v.mod_dim());
  for (std::size_t i = 0; i < n; ++i) {
    out.left(i) = v.left(i).transpose();
    out.right(i) = v.right(i).transpose();
    for (std::size_t j = 0; j < n; ++j) {
      out.vbb(i, j) = v.vbb(i, j).transpose();
      out.bvb(i, j) = v.bvb(i, j).transpose();
      out.bbv(i, j) = v.bbv(i, j).transpose();
    }
  }
  return out;
}

DualityRoundTrip duality_roundtrip(const BolAlgebra& algebra, const BolModule& module,
                                   const Identity& identity) {
  const BolAlgebra op_alg = opposite(algebra, OppositeVariant::section2);
  const BolModule op_mod = opposite_rep(algebra, module);
  const Identity dual = dualize_identity(identity);
  DualityRoundTrip out;
  out.original = check_identity(algebra, module, identity);
  out.dual_opposite = check_identity(op_alg, op_mod, dual, OperatorOrder::opposite);
  out.dual_transposed = check_identity(op_alg, transpose_actions(op_mod), dual);
  out.asserted = plain_symbols(identity);
  return out;
}

}  // namespace bolalg
