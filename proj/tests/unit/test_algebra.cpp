#include <gtest/gtest.h>

#include "catalog.hpp"
#include "oracle.hpp"

using namespace bolalg;
using namespace bolalg::test;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::unit(n, i); }

}  // namespace

TEST(Algebra, ZeroAlgebrasPassBothProfiles) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_TRUE(check_axioms(zero_algebra(n), Profile::literal).passed()) << n;
    EXPECT_TRUE(check_axioms(zero_algebra(n), Profile::consistent).passed()) << n;
  }
}

TEST(Algebra, CatalogAgreesWithOracle) {
  for (const auto& [name, a] : bol_catalog()) {
    for (Profile p : {Profile::literal, Profile::consistent})
      EXPECT_EQ(check_axioms(a, p).passed(), oracle::satisfies_axioms(a, p)) << name;
    EXPECT_TRUE(check_axioms(a).passed()) << name << "\n" << to_string(check_axioms(a));
  }
}

TEST(Algebra, Sl2PairEntry) {
  // (e;e,f) = [e,[e,f]] = [e,h] = -2e
  EXPECT_EQ(sl2_pair().basis_triple(0, 0, 1), (Vector{-2, 0}));
  const BolAlgebra sl2 = from_lie_algebra(lie_sl2());
  EXPECT_EQ(sl2.basis_triple(0, 0, 1), (Vector{-2, 0, 0}));
}

TEST(Algebra, LiteralProfileRejectsSl2Pair) {
  // (e;f,e) = 2e is not killed by skewness in the first two slots.
  const Report r = check_axioms(sl2_pair(), Profile::literal);
  const Check* c = r.find(std::string(axiom::skew_first));
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  ASSERT_TRUE(c->witness.has_value());
  EXPECT_EQ(c->witness->indices, (std::vector<std::size_t>{1, 1, 2}));
}

TEST(Algebra, WitnessReplaysThroughResidual) {
  BolAlgebra b = sl2_pair();
  b.ter(1, 0, 1, 0) += 1;
  const Report r = check_axioms(b);
  ASSERT_FALSE(r.passed());
  for (const auto& c : r.checks()) {
    if (c.passed) continue;
    ASSERT_TRUE(c.witness.has_value());
    std::vector<std::size_t> idx;
    for (auto i : c.witness->indices) idx.push_back(i - 1);
    const Vector replay = axiom_residual(b, c.name, idx);
    EXPECT_FALSE(replay.is_zero()) << c.name;
    EXPECT_EQ(replay, c.witness->residual) << c.name;
  }
}

TEST(Algebra, WitnessIsLexicographicallyFirst) {
  BolAlgebra b = zero_algebra(3);
  b.bin(2, 1, 0) = 1;  // e3·e2 = e1 without e2·e3 = -e1
  b.bin(1, 2, 0) = 0;
  const Report r = check_axioms(b);
  const Check* c = r.find(std::string(axiom::binary_skew));
  ASSERT_NE(c, nullptr);
  ASSERT_FALSE(c->passed);
  EXPECT_EQ(c->witness->indices, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(c->witness->residual, (Vector{1, 0, 0}));
}

TEST(Algebra, EvaluateMatchesOracle) {
  const BolAlgebra b = from_lie_algebra(lie_sl2());
  const Vector x{1, 2, -1}, y{0, Scalar(1, 2), 3}, z{-1, 1, 1};
  const Vector xy[] = {x, y};
  EXPECT_EQ(evaluate(b, Operation::binary, xy), oracle::product(b, x, y));
  const Vector xyz[] = {x, y, z};
  EXPECT_EQ(evaluate(b, Operation::ternary, xyz), oracle::triple(b, x, y, z));
  // D_{a,b}(x) = (x;a,b), Delta_{a,b}(x) = (a;b,x)
  const Vector d_args[] = {z, x, y};
  EXPECT_EQ(evaluate(b, Operation::d_operator, d_args), oracle::triple(b, z, x, y));
  const Vector delta_args[] = {x, y, z};
  EXPECT_EQ(evaluate(b, Operation::delta_operator, delta_args), oracle::triple(b, x, y, z));
  const Vector one[] = {x};
  EXPECT_THROW(evaluate(b, Operation::binary, one), DimensionError);
}

TEST(Algebra, LieSubclassPassesConsistent) {
  for (const auto& [name, g] : lie_catalog()) {
    ASSERT_TRUE(oracle::satisfies_jacobi(g)) << name;
    EXPECT_TRUE(jacobi_check(g).passed()) << name;
    EXPECT_TRUE(check_axioms(from_lie_algebra(g), Profile::consistent).passed()) << name;
  }
}

TEST(Algebra, FromLieRejectsNonLie) {
  LieAlgebra g(2);
  g.set_bracket(0, 1, Vector{1, 1});
  EXPECT_FALSE(jacobi_check(g).passed());
  EXPECT_THROW(from_lie_algebra(g), PreconditionError);
}

TEST(Algebra, OppositeSection2PermutesArguments) {
  const BolAlgebra b = sl2_pair();
  const BolAlgebra op = opposite(b, OppositeVariant::section2);
  // t'(e2,e1,e1) = -t(e1,e2,e1)
  for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(op.ter(1, 0, 0, l), -b.ter(0, 1, 0, l));
  EXPECT_EQ(opposite(opposite(b, OppositeVariant::theorem), OppositeVariant::theorem), b);
}

TEST(Algebra, ProductsAreMultilinear) {
  const BolAlgebra b = from_lie_algebra(lie_heisenberg());
  const Vector x = e(3, 0) + 2 * e(3, 1), y = e(3, 1) - e(3, 0);
  // [x,y] = [e1,e2] - 2[e2,e1] = 3z
  EXPECT_EQ(b.product(x, y), (Vector{0, 0, 3}));
}

TEST(LiePair, Sl2PairStructureConstants) {
  const LieAlgebra g = lie_sl2();
  const Subspace bsp = Subspace::span(3, {e(3, 0), e(3, 1)});
  const Subspace h = Subspace::span(3, {e(3, 2)});
  const Report pre = lie_pair_preconditions(g, bsp, h);
  EXPECT_TRUE(pre.passed()) << to_string(pre);
  const BolAlgebra out = from_lie_pair(g, bsp, h);
  EXPECT_TRUE(out.binary_is_zero());
  EXPECT_EQ(out.basis_triple(0, 0, 1), (Vector{-2, 0}));
  EXPECT_EQ(out.basis_triple(1, 0, 1), (Vector{0, 2}));
  EXPECT_TRUE(out.basis_triple(0, 1, 1).is_zero());
  EXPECT_EQ(out, sl2_pair());
  EXPECT_TRUE(check_axioms(out).passed());
}

TEST(LiePair, RejectsBracketMeetingSubspace) {
  const LieAlgebra g = lie_sl2();
  const Subspace bsp = Subspace::span(3, {e(3, 0), e(3, 2)});
  const Subspace h = Subspace::span(3, {e(3, 1)});
  const Report pre = lie_pair_preconditions(g, bsp, h);
  const Check* c = pre.find(std::string(lie_pair::bracket_meets));
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  ASSERT_TRUE(c->witness.has_value());
  EXPECT_FALSE(c->witness->residual.is_zero());
  try {
    (void)from_lie_pair(g, bsp, h);
    FAIL() << "expected LiePairError";
  } catch (const LiePairError& err) {
    EXPECT_FALSE(err.failed().passed);
  }
}

TEST(LiePair, RejectsNonComplement) {
  const LieAlgebra g = lie_sl2();
  const Subspace bsp = Subspace::span(3, {e(3, 0), e(3, 1)});
  const Subspace h = Subspace::span(3, {e(3, 0)});
  const Report pre = lie_pair_preconditions(g, bsp, h);
  const Check* c = pre.find(std::string(lie_pair::direct_sum));
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
}
