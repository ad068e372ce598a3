#pragma once

#include <optional>
#include <string>

#include "bolalg/algebra.hpp"

namespace bolalg {

/// Outcome of a yes/no structural question, with a replayable witness on "no".
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {false, std::move(w)}; }
};

/// `literal`: I·B and (I;B,B) inside I. `strong`: I closed in every slot.
enum class IdealMode { literal, strong };

/// Linear map between algebras; being a morphism is checked, not assumed.
class Morphism {
 public:
  Morphism(BolAlgebra source, BolAlgebra target, Matrix map);

  static Morphism identity(const BolAlgebra& a);
  static Morphism zero(const BolAlgebra& source, const BolAlgebra& target);

  const BolAlgebra& source() const noexcept { return source_; }
  const BolAlgebra& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return map_; }
  Vector apply(const Vector& v) const { return map_.apply(v); }

 private:
  BolAlgebra source_;
  BolAlgebra target_;
  Matrix map_;
};

/// g ∘ f
Morphism compose(const Morphism& g, const Morphism& f);

Verdict is_ideal(const BolAlgebra& algebra, const Subspace& ideal, IdealMode mode);

/// Smallest subspace containing `generators` that is closed as `mode` demands.
Subspace ideal_closure(const BolAlgebra& algebra, const Subspace& generators, IdealMode mode);

/// Closed under both products.
Verdict is_subalgebra(const BolAlgebra& algebra, const Subspace& sub);

/// Structure constants of a closed subspace in its canonical basis.
/// Throws PreconditionError when `sub` is not a subalgebra.
BolAlgebra restrict_to(const BolAlgebra& algebra, const Subspace& sub);

/// Raised by quotient(): `kind` is "not-an-ideal" or "ill-defined".
class QuotientError : public PreconditionError {
 public:
  QuotientError(const std::string& what, std::string kind, Witness witness)
      : PreconditionError(what), kind_(std::move(kind)), witness_(std::move(witness)) {}
  const std::string& kind() const noexcept { return kind_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  Witness witness_;
};

struct Quotient {
  BolAlgebra algebra;
  Morphism projection;
};

/// B/I on the lexicographically first standard complement of I. Checks that
/// products of representatives agree modulo I in every slot before returning.
Quotient quotient(const BolAlgebra& algebra, const Subspace& ideal, IdealMode mode);

Verdict is_morphism(const Morphism& f);

struct KernelImage {
  Subspace kernel;
  Subspace image;
  Verdict kernel_is_ideal;
  Verdict image_is_subalgebra;
};

/// Throws PreconditionError when `f` is not a morphism.
KernelImage kernel_image(const Morphism& f);

struct FirstIso {
  Morphism induced;  ///< source/ker f -> im f
  bool bijective = false;
  Verdict morphism;
  bool verified() const noexcept { return bijective && morphism.holds; }
};

FirstIso first_iso(const Morphism& f);

}  // namespace bolalg
