#include <gtest/gtest.h>

#include "catalog.hpp"
#include "oracle.hpp"

using namespace bolalg;
using namespace bolalg::test;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::unit(n, i); }

BolAlgebra heis() { return from_lie_algebra(lie_heisenberg()); }

}  // namespace

TEST(Ideal, CentreOfHeisenberg) {
  const Subspace z = Subspace::span(3, {e(3, 2)});
  EXPECT_TRUE(is_ideal(heis(), z, IdealMode::literal).holds);
  EXPECT_TRUE(is_ideal(heis(), z, IdealMode::strong).holds);
}

TEST(Ideal, LineThroughXIsNotAnIdeal) {
  const Verdict v = is_ideal(heis(), Subspace::span(3, {e(3, 0)}), IdealMode::literal);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_FALSE(v.witness->residual.is_zero());
}

TEST(Ideal, LiteralButNotStrong) {
  // span{e} in the sl2 pair: (e;B,B) stays in span{e}, (f;e,f) = 2f escapes.
  const Subspace i = Subspace::span(2, {e(2, 0)});
  EXPECT_TRUE(is_ideal(sl2_pair(), i, IdealMode::literal).holds);
  EXPECT_FALSE(is_ideal(sl2_pair(), i, IdealMode::strong).holds);
}

TEST(Closure, HeisenbergLine) {
  const Subspace x = Subspace::span(3, {e(3, 0)});
  const Subspace c = ideal_closure(heis(), x, IdealMode::literal);
  EXPECT_EQ(c, Subspace::span(3, {e(3, 0), e(3, 2)}));
  EXPECT_TRUE(is_ideal(heis(), c, IdealMode::literal).holds);
}

TEST(Closure, Sl2IsSimple) {
  const BolAlgebra sl2 = from_lie_algebra(lie_sl2());
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(ideal_closure(sl2, Subspace::span(3, {e(3, i)}), IdealMode::literal).dim(), 3u);
}

TEST(Subalgebra, RestrictToCentre) {
  const Subspace xz = Subspace::span(3, {e(3, 0), e(3, 2)});
  EXPECT_TRUE(is_subalgebra(heis(), xz).holds);
  const BolAlgebra r = restrict_to(heis(), xz);
  EXPECT_EQ(r.dim(), 2u);
  EXPECT_TRUE(r.binary_is_zero());
  EXPECT_THROW(restrict_to(heis(), Subspace::span(3, {e(3, 0), e(3, 1)})), PreconditionError);
}

TEST(Quotient, HeisenbergByCentreIsAbelian) {
  const Quotient q = quotient(heis(), Subspace::span(3, {e(3, 2)}), IdealMode::literal);
  EXPECT_EQ(q.algebra.dim(), 2u);
  EXPECT_TRUE(q.algebra.binary_is_zero());
  EXPECT_TRUE(q.algebra.ternary_is_zero());
  EXPECT_TRUE(is_morphism(q.projection).holds);
  EXPECT_TRUE(oracle::is_morphism(heis(), q.algebra, q.projection.matrix()));
}

TEST(Quotient, ByWholeAndByZero) {
  for (const auto& [name, a] : bol_catalog()) {
    const std::size_t n = a.dim();
    EXPECT_EQ(quotient(a, Subspace::full(n), IdealMode::literal).algebra.dim(), 0u) << name;
    const Quotient q = quotient(a, Subspace::zero(n), IdealMode::literal);
    EXPECT_EQ(q.algebra, a) << name;
    EXPECT_EQ(q.projection.matrix(), Matrix::identity(n)) << name;
  }
}

TEST(Quotient, NotAnIdeal) {
  try {
    (void)quotient(heis(), Subspace::span(3, {e(3, 0)}), IdealMode::literal);
    FAIL() << "expected QuotientError";
  } catch (const QuotientError& err) {
    EXPECT_EQ(err.kind(), "not-an-ideal");
  }
}

TEST(Quotient, LiteralIdealThatIsIllDefined) {
  try {
    (void)quotient(sl2_pair(), Subspace::span(2, {e(2, 0)}), IdealMode::literal);
    FAIL() << "expected QuotientError";
  } catch (const QuotientError& err) {
    EXPECT_EQ(err.kind(), "ill-defined");
    EXPECT_FALSE(err.witness().residual.is_zero());
  }
}

TEST(Morphism, CatalogMorphismsAgreeWithOracle) {
  for (const auto& [name, f] : morphism_catalog()) {
    EXPECT_TRUE(is_morphism(f).holds) << name;
    EXPECT_TRUE(oracle::is_morphism(f.source(), f.target(), f.matrix())) << name;
  }
}

TEST(Morphism, NonMorphismWitness) {
  const BolAlgebra p = sl2_pair();
  const Morphism f(p, p, Matrix{{1, 0}, {0, 2}});
  const Verdict v = is_morphism(f);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->indices.size(), 3u);
  EXPECT_FALSE(oracle::is_morphism(p, p, f.matrix()));
}

TEST(Morphism, ShapeIsValidated) {
  EXPECT_THROW(Morphism(sl2_pair(), heis(), Matrix(2, 2)), DimensionError);
}

TEST(Morphism, CompositionOfMorphisms) {
  const BolAlgebra p = sl2_pair();
  const Morphism s(p, p, Matrix{{2, 0}, {0, Scalar(1, 2)}});
  const Morphism ss = compose(s, s);
  EXPECT_EQ(ss.matrix(), (Matrix{{4, 0}, {0, Scalar(1, 4)}}));
  EXPECT_TRUE(is_morphism(ss).holds);
}

TEST(KernelImage, HeisenbergOntoAbelian) {
  const BolAlgebra ab = from_lie_algebra(lie_abelian(2));
  const Morphism f(heis(), ab, Matrix{{1, 0, 0}, {0, 1, 0}});
  const KernelImage ki = kernel_image(f);
  EXPECT_EQ(ki.kernel, Subspace::span(3, {e(3, 2)}));
  EXPECT_EQ(ki.image, Subspace::full(2));
  EXPECT_TRUE(ki.kernel_is_ideal.holds);
  EXPECT_TRUE(ki.image_is_subalgebra.holds);
}

TEST(KernelImage, RefusesNonMorphism) {
  const BolAlgebra p = sl2_pair();
  EXPECT_THROW(kernel_image(Morphism(p, p, Matrix{{1, 0}, {0, 2}})), PreconditionError);
}

TEST(FirstIso, CatalogMorphisms) {
  for (const auto& [name, f] : morphism_catalog()) {
    const KernelImage ki = kernel_image(f);
    EXPECT_TRUE(ki.kernel_is_ideal.holds) << name;
    EXPECT_TRUE(ki.image_is_subalgebra.holds) << name;
    const FirstIso iso = first_iso(f);
    EXPECT_TRUE(iso.verified()) << name;
    EXPECT_EQ(iso.induced.source().dim(), f.source().dim() - ki.kernel.dim()) << name;
    EXPECT_EQ(iso.induced.target().dim(), ki.image.dim()) << name;
    EXPECT_EQ(oracle::rank(iso.induced.matrix()), ki.image.dim()) << name;
  }
}
