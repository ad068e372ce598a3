#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bolalg/module.hpp"

namespace bolalg {

/// Algebra-valued argument of an atom: a symbol, a triple (x;y,z) or a
/// product (x*y) of arguments.
struct Arg {
  enum class Kind { symbol, triple, product };
  Kind kind = Kind::symbol;
  std::string name;       // symbol only
  std::vector<Arg> args;  // 3 for triple, 2 for product

  friend bool operator==(const Arg&, const Arg&) = default;
};

struct Atom {
  enum class Kind { L, R, r, c, m, id };
  Kind kind = Kind::id;
  std::vector<Arg> args;  // 1 for L/R, 2 for r/c/m, 0 for id

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// coefficient × chain; the chain a.b acts as a(b(v)) in the standard order.
struct Term {
  Scalar coefficient{1};
  std::vector<Atom> chain;

  friend bool operator==(const Term&, const Term&) = default;
};

/// An empty side is the zero operator.
using Side = std::vector<Term>;

struct Identity {
  std::vector<std::string> symbols;  ///< declared, or in order of first use
  bool declared = false;             ///< symbols came from "sym" declarations
  Side lhs;
  Side rhs;

  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Grammar:
///   identity := decl* expr "=" expr
///   decl     := "sym" NAME ("," NAME)* ";"
///   expr     := term (("+"|"-") term)* | "0"
///   term     := [RATIONAL "*"] chain
///   chain    := atom ("." atom)*
///   atom     := "L(" arg ")" | "R(" arg ")" | "r(" arg "," arg ")"
///             | "c(" arg "," arg ")" | "m(" arg "," arg ")" | "id"
///   arg      := NAME | "(" arg ";" arg "," arg ")" | "(" arg "*" arg ")"
/// Errors are ParseError with line 1 and the 1-based character position.
Identity parse_identity(std::string_view text);

/// Text that parses back to the same identity.
std::string to_string(const Identity& identity);

/// L <-> R, pair arguments swapped, every chain reversed.
Identity dualize_identity(const Identity& identity);

/// True when no atom has a nested argument.
bool plain_symbols(const Identity& identity);

/// Every term has degree one in every symbol, so checking all basis
/// assignments decides the identity for the given algebra and module.
bool multilinear(const Identity& identity);

enum class OperatorOrder {
  standard,  ///< chain a.b is the composite a∘b
  opposite,  ///< chain a.b is the product in End(V)^op, i.e. b∘a
};

struct IdentityResult {
  bool holds = true;
  bool complete = false;  ///< the verdict covers all elements, not just the tried bindings
  std::size_t bindings = 0;
  std::optional<Witness> witness;
};

using Environment = std::map<std::string, Vector>;

/// Both sides as operators on V for one binding. Throws PreconditionError
/// when a symbol is unbound.
Matrix evaluate_side(const BolAlgebra& algebra, const BolModule& module, const Side& side,
                     const Environment& env, OperatorOrder order = OperatorOrder::standard);

/// Checks one binding.
IdentityResult check_identity(const BolAlgebra& algebra, const BolModule& module,
                              const Identity& identity, const Environment& env,
                              OperatorOrder order = OperatorOrder::standard);

/// Checks every assignment of basis vectors to the symbols (lexicographic;
/// the witness lists the 1-based basis index of each symbol).
IdentityResult check_identity(const BolAlgebra& algebra, const BolModule& module,
                              const Identity& identity,
                              OperatorOrder order = OperatorOrder::standard);

/// Text of the built-in p1-p5 in the chosen form; p2 is the same in both.
std::string builtin_identity_text(std::string_view name, AxiomForm form = AxiomForm::normalized);
Identity builtin_identity(std::string_view name, AxiomForm form = AxiomForm::normalized);
inline constexpr std::string_view builtin_identity_names[] = {"p1", "p2", "p3", "p4", "p5"};

}  // namespace bolalg
