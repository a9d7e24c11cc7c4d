#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ramond/scalar.hpp"

namespace ramond {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Symbols the grammar accepts in generator position. X and Y are the twist
/// elements, expanded to their Ubar realizations when evaluated; E and V are
/// module basis symbols, accepted only when parsing vectors.
enum class ExprGen { L, G, C, T, Xi, XiT, X, Y, E, V };

/// Abstract syntax tree node. Products are recorded uniformly; whether a
/// product is scalar or noncommutative is resolved during evaluation.
struct Expr {
  enum class Kind { Number, Parameter, Gen, Sum, Diff, Product, Bracket, Neg };

  Kind kind;
  Rational number;               // Number
  Param parameter{Param::Lambda};  // Parameter
  ExprGen gen{ExprGen::L};       // Gen
  int index = 0;                 // Gen: L/G/t/xit/X/Y index; E: offset
  int index2 = 0;                // Gen E: xi-degree
  std::vector<Expr> children;    // Sum/Diff/Product/Bracket/Neg

  static Expr num(Rational r) {
    Expr e{Kind::Number};
    e.number = std::move(r);
    return e;
  }
};

/// Grammar (whitespace-insensitive):
///   expr     := ["-"] term (("+"|"-") term)*
///   term     := factor ("*" factor)*
///   factor   := atom ["^" posint]          (powers desugar to products)
///   atom     := rational | param | gen | "[" expr "," expr "]" | "(" expr ")"
///   gen      := ("L"|"G"|"t"|"xit"|"X"|"Y") "(" int ")" | "C" | "xi"
///   rational := int ["/" posint]
///   param    := "lambda" | "b" | "c" | "h"
/// X(0) and Y(0) are rejected (the twist index is nonzero). With
/// allow_vectors, atoms may also be "e(i,r)" (r in {0,1}) and "v".
Expr parse(const std::string& text, bool allow_vectors = false);

/// Text form accepted back by parse; stable under parse∘render.
std::string render(const Expr& e);

}  // namespace ramond
