#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bolalg/ideals.hpp"

namespace bolalg {

/// Result of a universal-property spot check against one caller cone.
struct Factorization {
  bool cone_valid = false;  ///< the supplied legs are morphisms and commute as required
  bool exists = false;
  bool unique = false;
  Verdict mediator_morphism{false, std::nullopt};
  std::optional<Matrix> mediator;

  bool holds() const noexcept { return cone_valid && exists && unique && mediator_morphism.holds; }
};

struct Product {
  BolAlgebra algebra;
  std::vector<Morphism> projections;
  std::vector<Morphism> injections;  ///< finite coproduct legs on the same space
};

/// Componentwise operations on the direct sum. Throws on an empty list.
Product product(std::span<const BolAlgebra> factors);

/// Cone over the factors: apex C with legs h_i : C -> B_i.
Factorization factor_through_product(const Product& prod, const BolAlgebra& apex,
                                     std::span<const Morphism> legs);

struct Equalizer {
  Subspace subspace;
  BolAlgebra algebra;  ///< E restricted to its canonical basis
  Morphism inclusion;
  Verdict closed;      ///< E is a subalgebra
  bool commutes = false;  ///< f∘e = g∘e
};

Equalizer equalizer(const Morphism& f, const Morphism& g);

/// h : C -> source with f∘h = g∘h must factor uniquely through the inclusion.
Factorization factor_through_equalizer(const Equalizer& eq, const Morphism& f,
                                       const Morphism& g, const Morphism& h);

enum class CoequalizerMode {
  images,      ///< quotient by the ideal generated by im f + im g
  difference,  ///< quotient by the ideal generated by im (f - g)
};

struct Coequalizer {
  Subspace ideal;
  BolAlgebra algebra;
  Morphism projection;
  bool commutes = false;  ///< p∘f = p∘g
};

Coequalizer coequalizer(const Morphism& f, const Morphism& g, CoequalizerMode mode,
                        IdealMode ideal_mode = IdealMode::strong);

/// h : target -> Q with h∘f = h∘g must factor uniquely through the projection.
Factorization factor_through_coequalizer(const Coequalizer& coeq, const Morphism& f,
                                         const Morphism& g, const Morphism& h);

}  // namespace bolalg
