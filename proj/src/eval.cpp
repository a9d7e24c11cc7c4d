#include "ramond/eval.hpp"

namespace ramond {

namespace {

Flavor operator_flavor(const EvalContext& ctx) {
  if (const auto* a = std::get_if<AlgebraContext>(&ctx)) return a->flavor;
  if (std::holds_alternative<ModuleContext>(ctx)) return Flavor::Ubar;
  return Flavor::S;
}

EnvElement gen_to_env(const Expr& e, Flavor f, bool module_ctx, bool* central_flagged) {
  auto single = [&](Generator g) {
    return EnvElement::from_lie(
        LieElement::single(f == Flavor::Ubar ? Flavor::Stilde : f, g), f);
  };
  switch (e.gen) {
    case ExprGen::L: return single(Generator::L(e.index));
    case ExprGen::G: return single(Generator::G(e.index));
    case ExprGen::C:
      if (module_ctx) {
        // C acts as zero on Gamma; flagged, not fatal.
        if (central_flagged) *central_flagged = true;
        return EnvElement::zero(f);
      }
      if (f != Flavor::S)
        throw std::invalid_argument("C is only available in flavor s");
      return single(Generator::C());
    case ExprGen::T:
      if (f != Flavor::Stilde && f != Flavor::Ubar)
        throw std::invalid_argument("t(i) needs flavor stilde or ubar");
      return single(Generator::T(e.index));
    case ExprGen::Xi:
      if (f != Flavor::Stilde && f != Flavor::Ubar)
        throw std::invalid_argument("xi needs flavor stilde or ubar");
      return single(Generator::Xi());
    case ExprGen::XiT:
      if (f != Flavor::Stilde && f != Flavor::Ubar)
        throw std::invalid_argument("xit(i) needs flavor stilde or ubar");
      return single(Generator::XiT(e.index));
    case ExprGen::X:
      if (f != Flavor::Ubar) throw std::invalid_argument("X(m) lives in Ubar");
      return make_twist(TwistKind::X, e.index).realization;
    case ExprGen::Y:
      if (f != Flavor::Ubar) throw std::invalid_argument("Y(m) lives in Ubar");
      return make_twist(TwistKind::Y, e.index).realization;
    case ExprGen::E:
    case ExprGen::V:
      throw std::invalid_argument("module basis symbols are not operators");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

EnvElement eval_operator(const Expr& e, const EvalContext& ctx, bool* central_flagged) {
  const Flavor f = operator_flavor(ctx);
  const bool module_ctx = std::holds_alternative<ModuleContext>(ctx);
  switch (e.kind) {
    case Expr::Kind::Number: return Scalar(e.number) * EnvElement::unit(f);
    case Expr::Kind::Parameter: return Scalar::param(e.parameter) * EnvElement::unit(f);
    case Expr::Kind::Gen: return gen_to_env(e, f, module_ctx, central_flagged);
    case Expr::Kind::Sum:
      return eval_operator(e.children[0], ctx, central_flagged) +
             eval_operator(e.children[1], ctx, central_flagged);
    case Expr::Kind::Diff:
      return eval_operator(e.children[0], ctx, central_flagged) -
             eval_operator(e.children[1], ctx, central_flagged);
    case Expr::Kind::Product:
      return env_mul(eval_operator(e.children[0], ctx, central_flagged),
                     eval_operator(e.children[1], ctx, central_flagged));
    case Expr::Kind::Bracket:
      return supercommutator(eval_operator(e.children[0], ctx, central_flagged),
                             eval_operator(e.children[1], ctx, central_flagged));
    case Expr::Kind::Neg:
      return Scalar(-1) * eval_operator(e.children[0], ctx, central_flagged);
  }
  throw std::logic_error("unreachable");
}

namespace {

// A vector expression evaluates to either an operator (still applicable) or
// a module vector; products fold operators onto vectors from the right.
struct VecValue {
  std::optional<EnvElement> op;
  std::optional<GammaVector> gamma;
  std::optional<VermaVector> verma;
};

VecValue eval_vec(const Expr& e, const EvalContext& ctx, bool* central_flagged) {
  if (e.kind == Expr::Kind::Gen && e.gen == ExprGen::E) {
    const auto* m = std::get_if<ModuleContext>(&ctx);
    if (!m) throw std::invalid_argument("e(i,r) needs a module context");
    VecValue v;
    v.gamma = GammaVector::basis(e.index, e.index2, m->lambda, m->b);
    return v;
  }
  if (e.kind == Expr::Kind::Gen && e.gen == ExprGen::V) {
    const auto* m = std::get_if<VermaContext>(&ctx);
    if (!m) throw std::invalid_argument("v needs a verma context");
    VecValue v;
    v.verma = VermaVector::highest_weight(m->h, m->c);
    return v;
  }

  switch (e.kind) {
    case Expr::Kind::Sum:
    case Expr::Kind::Diff: {
      VecValue a = eval_vec(e.children[0], ctx, central_flagged);
      VecValue b = eval_vec(e.children[1], ctx, central_flagged);
      const bool minus = e.kind == Expr::Kind::Diff;
      if (a.op && b.op) {
        VecValue r;
        r.op = minus ? *a.op - *b.op : *a.op + *b.op;
        return r;
      }
      if (a.gamma && b.gamma) {
        VecValue r;
        r.gamma = minus ? *a.gamma - *b.gamma : *a.gamma + *b.gamma;
        return r;
      }
      if (a.verma && b.verma) {
        VecValue r;
        r.verma = minus ? *a.verma - *b.verma : *a.verma + *b.verma;
        return r;
      }
      throw std::invalid_argument("cannot add an operator and a module vector");
    }
    case Expr::Kind::Neg: {
      VecValue a = eval_vec(e.children[0], ctx, central_flagged);
      VecValue r;
      if (a.op) r.op = Scalar(-1) * *a.op;
      if (a.gamma) r.gamma = Scalar(-1) * *a.gamma;
      if (a.verma) r.verma = Scalar(-1) * *a.verma;
      return r;
    }
    case Expr::Kind::Product: {
      VecValue a = eval_vec(e.children[0], ctx, central_flagged);
      VecValue b = eval_vec(e.children[1], ctx, central_flagged);
      if (b.op) {
        if (!a.op) throw std::invalid_argument("vectors multiply operators from the right only");
        VecValue r;
        r.op = env_mul(*a.op, *b.op);
        return r;
      }
      if (!a.op) throw std::invalid_argument("cannot multiply two module vectors");
      VecValue r;
      if (b.gamma) {
        GammaVector out(b.gamma->lambda(), b.gamma->b());
        for (const auto& [w, c] : a.op->terms()) out += c * gamma_act(w, *b.gamma);
        r.gamma = std::move(out);
      } else {
        VermaVector out(b.verma->h(), b.verma->c());
        for (const auto& [w, c] : a.op->terms()) out += c * verma_act(w, *b.verma);
        r.verma = std::move(out);
      }
      return r;
    }
    default: {
      VecValue r;
      r.op = eval_operator(e, ctx, central_flagged);
      return r;
    }
  }
}

}  // namespace

std::string EvalResult::to_string() const {
  if (const auto* e = std::get_if<EnvElement>(&value)) return e->to_string();
  if (const auto* g = std::get_if<GammaVector>(&value)) return g->to_string();
  return std::get<VermaVector>(value).to_string();
}

EvalResult eval_vector(const Expr& e, const EvalContext& ctx) {
  EvalResult result{EnvElement::zero(Flavor::S), false};
  VecValue v = eval_vec(e, ctx, &result.central_flagged);
  if (v.gamma)
    result.value = std::move(*v.gamma);
  else if (v.verma)
    result.value = std::move(*v.verma);
  else
    result.value = std::move(*v.op);
  return result;
}

EvalResult eval_expr(const Expr& e, const EvalContext& ctx,
                     const std::optional<std::string>& vector_text) {
  if (!vector_text) {
    EvalResult result{EnvElement::zero(Flavor::S), false};
    result.value = eval_operator(e, ctx, &result.central_flagged);
    return result;
  }
  Expr vec = parse(*vector_text, /*allow_vectors=*/true);
  EvalResult target = eval_vector(vec, ctx);
  EvalResult result{EnvElement::zero(Flavor::S), false};
  EnvElement op = eval_operator(e, ctx, &result.central_flagged);
  if (const auto* g = std::get_if<GammaVector>(&target.value)) {
    GammaVector out(g->lambda(), g->b());
    for (const auto& [w, c] : op.terms()) out += c * gamma_act(w, *g);
    result.value = std::move(out);
  } else if (const auto* vv = std::get_if<VermaVector>(&target.value)) {
    VermaVector out(vv->h(), vv->c());
    for (const auto& [w, c] : op.terms()) out += c * verma_act(w, *vv);
    result.value = std::move(out);
  } else {
    throw std::invalid_argument("--vector did not evaluate to a module vector");
  }
  result.central_flagged = result.central_flagged || target.central_flagged;
  return result;
}

}  // namespace ramond
