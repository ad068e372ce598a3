#pragma once

#include "bolalg/identity.hpp"

namespace bolalg {

enum class DualVariant {
  repaired,  ///< R*(tau)(f) = f∘R_tau
  strict,    ///< R*(tau)(f) = f∘L_tau, the formula as printed
};

/// Module on V*: every pair action is the transpose of the argument-swapped
/// original, L* = L^T and R* = R^T (or L^T when strict).
BolModule dual_module(const BolAlgebra& algebra, const BolModule& module,
                      DualVariant variant = DualVariant::repaired);

/// Pair arguments of r, c, m swapped; L and R exchanged.
BolModule opposite_rep(const BolAlgebra& algebra, const BolModule& module);

/// Every action matrix transposed, pairs untouched. Composition order flips,
/// so this realizes End(V)^op inside End(V*).
BolModule transpose_actions(const BolModule& module);

struct DualityRoundTrip {
  IdentityResult original;             ///< I on (B, V)
  IdentityResult dual_opposite;        ///< I* on (B^op, V^op) in End(V)^op
  IdentityResult dual_transposed;      ///< I* on (B^op, (V^op)^T), standard order
  bool asserted = false;               ///< plain-symbol identity: the verdicts must agree

  bool agree() const noexcept {
    return original.holds == dual_opposite.holds && original.holds == dual_transposed.holds;
  }
};

/// Exhaustive-basis check of I and of its dual on the opposite pair, with
/// B^op the section-2 opposite algebra.
DualityRoundTrip duality_roundtrip(const BolAlgebra& algebra, const BolModule& module,
                                   const Identity& identity);

}  // namespace bolalg
