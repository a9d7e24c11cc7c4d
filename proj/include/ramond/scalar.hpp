#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "ramond/rational.hpp"

namespace ramond {

/// Formal parameters of the coefficient ring, in the fixed variable order
/// lambda < b < c < h used by the monomial order.
enum class Param : int { Lambda = 0, B = 1, C = 2, H = 3 };

constexpr int kNumParams = 4;

const char* param_name(Param p);

/// Exponent vector of a monomial in (lambda, b, c, h).
struct Monomial {
  std::array<std::uint32_t, kNumParams> exp{0, 0, 0, 0};

  std::uint32_t total_degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with lambda < b < c < h: compare total degree
/// first, then exponents from the largest variable (h) down.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    for (int i = kNumParams - 1; i >= 0; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    return false;
  }
};

using ParamAssignment = std::map<Param, Rational>;

/// Multivariate polynomial in the formal parameters lambda, b, c, h with
/// exact rational coefficients. Canonical form: terms sorted by the graded
/// lexicographic order, no zero coefficients stored.
class Scalar {
public:
  Scalar() = default;
  Scalar(long long n) {
    if (n != 0) terms_.emplace(Monomial{}, Rational(n));
  }
  Scalar(const Rational& r) {
    if (!r.is_zero()) terms_.emplace(Monomial{}, r);
  }

  /// The polynomial consisting of the single parameter symbol.
  static Scalar param(Param p) {
    Monomial m;
    m.exp[static_cast<int>(p)] = 1;
    Scalar s;
    s.terms_.emplace(m, Rational(1));
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is a constant (possibly zero).
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("Scalar: not a constant");
    return terms_.begin()->second;
  }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
      if (m.total_degree() > d) d = m.total_degree();
    return d;
  }
  std::uint32_t degree_in(Param p) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
      if (m.exp[static_cast<int>(p)] > d) d = m.exp[static_cast<int>(p)];
    return d;
  }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Substitutes the assigned parameters, leaving the others formal.
  /// A ring homomorphism for any fixed assignment.
  Scalar evaluate(const ParamAssignment& assignment) const;

  /// Renders e.g. "3/2*lambda^2*b", "lambda + 3*b + 3/2", "0".
  std::string to_string() const;

  const std::map<Monomial, Rational, GradedLexLess>& terms() const { return terms_; }

private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational, GradedLexLess> terms_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

}  // namespace ramond
