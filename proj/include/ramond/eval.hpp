#pragma once

#include <optional>
#include <variant>

#include "ramond/env.hpp"
#include "ramond/gamma.hpp"
#include "ramond/parser.hpp"
#include "ramond/twist.hpp"
#include "ramond/verma.hpp"

namespace ramond {

/// Evaluation context: a plain algebra flavor, the module Gamma(lambda,b),
/// or the Verma module M(h,c).
struct AlgebraContext {
  Flavor flavor;
};
struct ModuleContext {
  Scalar lambda{Scalar::param(Param::Lambda)};
  Scalar b{Scalar::param(Param::B)};
};
struct VermaContext {
  Scalar h{Scalar::param(Param::H)};
  Scalar c{Scalar::param(Param::C)};
};
using EvalContext = std::variant<AlgebraContext, ModuleContext, VermaContext>;

struct EvalResult {
  std::variant<EnvElement, GammaVector, VermaVector> value;
  /// Set when C appeared in module context (it acts as zero there).
  bool central_flagged = false;

  std::string to_string() const;
};

/// Evaluates an operator expression in an algebra context (or the operator
/// algebra of a module context: Ubar for Gamma, U(s) for Verma). Throws
/// std::invalid_argument on symbols illegal in the context.
EnvElement eval_operator(const Expr& e, const EvalContext& ctx, bool* central_flagged = nullptr);

/// Evaluates a vector expression ("e(i,r)" combinations for Gamma,
/// "word*v" combinations for Verma), including operator applications that
/// appear inside the expression.
EvalResult eval_vector(const Expr& e, const EvalContext& ctx);

/// Full dispatch: operator expressions in algebra contexts, operator
/// application when a --vector is supplied by the caller.
EvalResult eval_expr(const Expr& e, const EvalContext& ctx,
                     const std::optional<std::string>& vector_text = std::nullopt);

}  // namespace ramond
