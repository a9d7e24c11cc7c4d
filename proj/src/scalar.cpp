#include "ramond/scalar.hpp"

#include <algorithm>
#include <vector>

namespace ramond {

const char* param_name(Param p) {
  switch (p) {
    case Param::Lambda: return "lambda";
    case Param::B: return "b";
    case Param::C: return "c";
    case Param::H: return "h";
  }
  return "?";
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kNumParams; ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Scalar Scalar::evaluate(const ParamAssignment& assignment) const {
  Scalar r;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    Monomial rest;
    for (int i = 0; i < kNumParams; ++i) {
      auto it = assignment.find(static_cast<Param>(i));
      if (it == assignment.end()) {
        rest.exp[i] = m.exp[i];
      } else {
        for (std::uint32_t e = 0; e < m.exp[i]; ++e) value *= it->second;
      }
    }
    r.add_term(rest, value);
  }
  return r;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  // Presentation order: degree descending, then lambda before b before c
  // before h. Storage order stays graded-lex ascending.
  std::vector<const std::pair<const Monomial, Rational>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    if (x->first.total_degree() != y->first.total_degree())
      return x->first.total_degree() > y->first.total_degree();
    return x->first.exp > y->first.exp;
  });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        out += "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
      if (coeff.sign() < 0) coeff = -coeff;
    }
    std::string vars;
    for (int i = 0; i < kNumParams; ++i) {
      if (m.exp[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += param_name(static_cast<Param>(i));
      if (m.exp[i] > 1) vars += "^" + std::to_string(m.exp[i]);
    }
    if (vars.empty()) {
      out += coeff.to_string();
    } else if (coeff.is_one()) {
      out += vars;
    } else {
      out += coeff.to_string() + "*" + vars;
    }
  }
  return out;
}

}  // namespace ramond
