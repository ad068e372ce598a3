#include <gtest/gtest.h>

#include "catalog.hpp"

using namespace bolalg;
using namespace bolalg::test;

TEST(IdentityParse, SimpleCyclic) {
  const Identity id = parse_identity("m(a,b) + c(a,b) + r(a,b) = 0");
  EXPECT_EQ(id.symbols, (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(id.declared);
  ASSERT_EQ(id.lhs.size(), 3u);
  EXPECT_TRUE(id.rhs.empty());
  EXPECT_EQ(id.lhs[1].chain[0].kind, Atom::Kind::c);
}

TEST(IdentityParse, CoefficientsChainsAndNesting) {
  const Identity id = parse_identity("sym a, b, t; -2/3*L(t).r(a,b) - id = L((t;a,b)) + m((a*b),t)");
  EXPECT_TRUE(id.declared);
  EXPECT_EQ(id.symbols, (std::vector<std::string>{"a", "b", "t"}));
  ASSERT_EQ(id.lhs.size(), 2u);
  EXPECT_EQ(id.lhs[0].coefficient, Scalar(-2, 3));
  EXPECT_EQ(id.lhs[0].chain.size(), 2u);
  EXPECT_EQ(id.lhs[1].coefficient, -1);
  EXPECT_EQ(id.lhs[1].chain[0].kind, Atom::Kind::id);
  EXPECT_EQ(id.rhs[0].chain[0].args[0].kind, Arg::Kind::triple);
  EXPECT_EQ(id.rhs[1].chain[0].args[0].kind, Arg::Kind::product);
  EXPECT_FALSE(plain_symbols(id));
  EXPECT_TRUE(plain_symbols(parse_identity("L(t) = R(t)")));
}

TEST(IdentityParse, RoundTripsThroughText) {
  for (auto name : builtin_identity_names)
    for (AxiomForm f : {AxiomForm::normalized, AxiomForm::printed}) {
      const Identity id = builtin_identity(name, f);
      EXPECT_EQ(parse_identity(to_string(id)), id) << name;
    }
}

TEST(IdentityParse, ErrorPositions) {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      (void)parse_identity(text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 1u);
      return e.column();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(column_of("L(t"), 4u);
  EXPECT_EQ(column_of("Q(t) = 0"), 1u);
  EXPECT_EQ(column_of("L(t) + "), 8u);
  EXPECT_GT(column_of("m(a) = 0"), 0u);
  EXPECT_GT(column_of("L(t) = R(t) = 0"), 0u);
  EXPECT_GT(column_of("sym a; L(b) = 0"), 0u);  // undeclared symbol
}

TEST(IdentityDual, SwapsReversesAndIsInvolutive) {
  const Identity id = parse_identity("sym a, b, t; L(t).r(a,b) = R(t) + m(a,b).c(b,t)");
  const Identity d = dualize_identity(id);
  EXPECT_EQ(to_string(d), to_string(parse_identity("sym a, b, t; r(b,a).R(t) = L(t) + c(t,b).m(b,a)")));
  EXPECT_EQ(dualize_identity(d), id);
}

TEST(IdentityCheck, PrintedCyclicOnRegularSl2Pair) {
  const BolAlgebra b = sl2_pair();
  const BolModule v = regular_module(b);
  const IdentityResult printed = check_identity(b, v, parse_identity("m(a,b) + c(a,b) + r(a,b) = 0"));
  EXPECT_FALSE(printed.holds);
  EXPECT_TRUE(printed.complete);
  ASSERT_TRUE(printed.witness.has_value());
  EXPECT_EQ(printed.witness->indices, (std::vector<std::size_t>{1, 2}));
  const IdentityResult cyclic = check_identity(b, v, parse_identity("m(a,b) + c(b,a) + r(a,b) = 0"));
  EXPECT_TRUE(cyclic.holds);
  EXPECT_EQ(cyclic.bindings, 4u);
}

TEST(IdentityCheck, SingleBinding) {
  const BolAlgebra b = sl2_pair();
  const BolModule v = regular_module(b);
  const Identity id = parse_identity("r(a,b) = -1*r(b,a)");
  Environment env{{"a", Vector{1, 2}}, {"b", Vector{Scalar(1, 2), -1}}};
  EXPECT_TRUE(check_identity(b, v, id, env).holds);
  env.erase("b");
  EXPECT_THROW(check_identity(b, v, id, env), PreconditionError);
}

TEST(IdentityCheck, ChainOrder) {
  // L(t).r(a,b) is L_t ∘ r(a,b) in the standard order.
  const BolAlgebra s = from_lie_algebra(lie_sl2());
  const BolModule v = regular_module(s);
  const Identity id = parse_identity("L(t).r(a,b) = 0");
  const Environment env{{"t", Vector{1, 0, 0}}, {"a", Vector{0, 1, 0}}, {"b", Vector{0, 0, 1}}};
  const Matrix std_side = evaluate_side(s, v, id.lhs, env, OperatorOrder::standard);
  const Matrix op_side = evaluate_side(s, v, id.lhs, env, OperatorOrder::opposite);
  const Matrix lt = v.L(env.at("t")), rab = v.r(env.at("a"), env.at("b"));
  EXPECT_EQ(std_side, lt * rab);
  EXPECT_EQ(op_side, rab * lt);
}

TEST(IdentityCheck, BuiltinsAgreeWithPProperties) {
  for (const auto& mc : module_catalog())
    for (AxiomForm f : {AxiomForm::normalized, AxiomForm::printed}) {
      const Report p = check_p_properties(mc.algebra, mc.module, f);
      for (auto name : builtin_identity_names) {
        const IdentityResult r = check_identity(mc.algebra, mc.module, builtin_identity(name, f));
        const Check* c = p.find(std::string(name));
        ASSERT_NE(c, nullptr);
        EXPECT_EQ(r.holds, c->passed) << mc.name << " " << name;
        if (!r.holds) EXPECT_EQ(r.witness->indices, c->witness->indices) << mc.name << " " << name;
      }
    }
}

TEST(IdentityCheck, MultilinearDetection) {
  EXPECT_TRUE(multilinear(builtin_identity("p4")));
  EXPECT_TRUE(multilinear(builtin_identity("p5")));
  EXPECT_FALSE(multilinear(parse_identity("L(a).L(a) = 0")));
  EXPECT_FALSE(multilinear(parse_identity("L(a) = R(b)")));
}

TEST(IdentityCheck, UnknownBuiltin) { EXPECT_THROW(builtin_identity("p9"), Error); }
