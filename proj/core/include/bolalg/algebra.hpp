#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bolalg/error.hpp"
#include "bolalg/linalg.hpp"
#include "bolalg/report.hpp"

namespace bolalg {

/// Finite-dimensional algebra with a binary product x·y and a trilinear
/// product (x; y, z), both given by structure constants in the standard
/// basis e_0..e_{n-1}:
///   e_i · e_j      = sum_k c[i][j][k] e_k
///   (e_i; e_j, e_k) = sum_l t[i][j][k][l] e_l
///
/// No identity is enforced here. Whether the data is a Bol algebra is the
/// business of check_axioms.
class BolAlgebra {
 public:
  BolAlgebra() = default;
  explicit BolAlgebra(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  const Scalar& bin(std::size_t i, std::size_t j, std::size_t k) const {
    return binary_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& bin(std::size_t i, std::size_t j, std::size_t k) {
    return binary_[(i * dim_ + j) * dim_ + k];
  }
  const Scalar& ter(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ternary_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  Scalar& ter(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ternary_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }

  /// e_i · e_j
  Vector basis_product(std::size_t i, std::size_t j) const;
  /// (e_i; e_j, e_k)
  Vector basis_triple(std::size_t i, std::size_t j, std::size_t k) const;
  void set_product(std::size_t i, std::size_t j, const Vector& v);
  void set_triple(std::size_t i, std::size_t j, std::size_t k, const Vector& v);

  /// Multilinear extensions.
  Vector product(const Vector& x, const Vector& y) const;
  Vector triple(const Vector& x, const Vector& y, const Vector& z) const;

  bool binary_is_zero() const;
  bool ternary_is_zero() const;
  /// Copy with the binary tensor cleared.
  BolAlgebra without_binary() const;

  friend bool operator==(const BolAlgebra&, const BolAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> binary_;
  std::vector<Scalar> ternary_;
};

/// Lie algebra by structure constants: [e_i, e_j] = sum_k b[i][j][k] e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Scalar& coef(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& coef(std::size_t i, std::size_t j, std::size_t k) {
    return bracket_[(i * dim_ + j) * dim_ + k];
  }
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_antisymmetric(std::size_t i, std::size_t j, const Vector& v);
  Vector bracket(const Vector& x, const Vector& y) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> bracket_;
};

enum class Operation {
  binary,          ///< x·y, args (x, y)
  ternary,         ///< (x; y, z), args (x, y, z)
  d_operator,      ///< D_{a,b}(x) = (x; a, b), args (x, a, b)
  delta_operator,  ///< Delta_{a,b}(x) = (a; b, x), args (a, b, x)
};

/// Evaluates one of the operations on arbitrary vectors.
Vector evaluate(const BolAlgebra& algebra, Operation op, std::span<const Vector> args);

/// Axiom profile. `literal` checks (x;x,y) = 0; `consistent` replaces it by
/// skewness of the trilinear product in its last two slots.
enum class Profile { literal, consistent };

namespace axiom {
inline constexpr std::string_view skew_first = "skew-slots-1-2";
inline constexpr std::string_view skew_last = "skew-slots-2-3";
inline constexpr std::string_view cyclic = "cyclic";
inline constexpr std::string_view ternary_derivation = "ternary-derivation";
inline constexpr std::string_view binary_skew = "binary-skew";
inline constexpr std::string_view pseudo_derivation = "pseudo-derivation";
inline constexpr std::string_view antisymmetry = "antisymmetry";
inline constexpr std::string_view jacobi = "jacobi";
}  // namespace axiom

/// Evaluates every identity on all basis tuples (enough by multilinearity).
/// Failures carry the lexicographically smallest failing tuple.
Report check_axioms(const BolAlgebra& algebra, Profile profile = Profile::consistent);
/// Trilinear identities only.
Report check_lts(const BolAlgebra& algebra, Profile profile = Profile::consistent);

/// Residual of the named identity at a 0-based basis tuple, computed through
/// the generic multilinear evaluator. Used to replay witnesses.
Vector axiom_residual(const BolAlgebra& algebra, std::string_view identity,
                      std::span<const std::size_t> indices);

Report jacobi_check(const LieAlgebra& lie);
Vector jacobi_residual(const LieAlgebra& lie, std::string_view identity,
                       std::span<const std::size_t> indices);

enum class OppositeVariant {
  section2,  ///< [x;y,z] = -(z;x,y), [x,y] = -x·y
  theorem,   ///< [x;y,z] = -(x;y,z), [x,y] = -x·y
};

BolAlgebra opposite(const BolAlgebra& algebra, OppositeVariant variant);

/// x·y = [x,y], (x;y,z) = [x,[y,z]]. Throws PreconditionError when the input
/// fails jacobi_check.
BolAlgebra from_lie_algebra(const LieAlgebra& lie);

namespace lie_pair {
inline constexpr std::string_view direct_sum = "direct-sum";
inline constexpr std::string_view triple_closure = "triple-closure";
inline constexpr std::string_view bracket_meets = "bracket-meets-subspace";
}  // namespace lie_pair

/// Verifies G = B (+) h, [B,[B,B]] in B and [B,B] meet B = {0}.
Report lie_pair_preconditions(const LieAlgebra& g, const Subspace& b, const Subspace& h);

/// Bol algebra on B with x·y = projection of [x,y] onto B along h and
/// (z;x,y) = [z,[x,y]], written in the canonical basis of B. Throws
/// LiePairError naming the failed condition.
BolAlgebra from_lie_pair(const LieAlgebra& g, const Subspace& b, const Subspace& h);

class LiePairError : public PreconditionError {
 public:
  LiePairError(const std::string& what, Check failed)
      : PreconditionError(what), failed_(std::move(failed)) {}
  const Check& failed() const noexcept { return failed_; }

 private:
  Check failed_;
};

}  // namespace bolalg
