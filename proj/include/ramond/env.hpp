#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramond/liealg.hpp"

namespace ramond {

/// A word is a product of generators. In normal form the generators are
/// sorted non-decreasingly by the basis order and no odd generator repeats;
/// in Ubar flavor the A-part is at most one leading T(i) (i != 0) or XiT(i).
using GenSeq = std::vector<Generator>;

int word_parity(const GenSeq& w);
int word_weight(const GenSeq& w);
std::string word_text(const GenSeq& w);

/// Reduction strategy for straightening; both reach the same normal form
/// (checked by the confluence tests), the knob exists for exactly that check.
enum class NormStrategy { LeftmostFirst, RightmostFirst };

/// Finite linear combination of normal-form words over one flavor.
class EnvElement {
public:
  explicit EnvElement(Flavor f) : flavor_(f) {}

  static EnvElement zero(Flavor f) { return EnvElement(f); }
  static EnvElement unit(Flavor f) {
    EnvElement e(f);
    e.terms_.emplace(GenSeq{}, Scalar(1));
    return e;
  }
  /// Degree-one embedding of a Lie element; T(0) maps to the unit word in
  /// Ubar flavor.
  static EnvElement from_lie(const LieElement& x, Flavor env_flavor);

  Flavor flavor() const { return flavor_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GenSeq, Scalar>& terms() const { return terms_; }

  void add(const GenSeq& w, const Scalar& c);

  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(const Scalar& s, const EnvElement& x);

  friend bool operator==(const EnvElement&, const EnvElement&) = default;

  std::optional<int> parity() const;
  EnvElement parity_part(int p) const;

  /// Maximum word length (0 for the zero element).
  std::size_t max_word_length() const;

  std::string to_string() const;

private:
  Flavor flavor_;
  std::map<GenSeq, Scalar> terms_;
};

/// Straightens a raw word to PBW normal form: adjacent out-of-order pairs
/// x·y rewrite to (-1)^{|x||y|} y·x + [x,y], odd squares g·g to (1/2)[g,g].
/// In Ubar flavor the result is additionally reduced modulo the ideal I.
EnvElement pbw_normalize(const GenSeq& raw, Flavor f,
                         NormStrategy strategy = NormStrategy::LeftmostFirst);

/// Product (concatenate, then normalize), extended bilinearly.
EnvElement env_mul(const EnvElement& a, const EnvElement& b);

/// a·b - (-1)^{|a||b|} b·a, extended to mixed parities by decomposition.
EnvElement supercommutator(const EnvElement& a, const EnvElement& b);

/// Reduction modulo the left ideal I = (t^i·t^j - t^{i+j}, t^0 - 1,
/// t^i·xi - t^i xi, xi·xi): collapses the A-prefix of each normal word of a
/// U(stilde) element into a single A-monomial. Result lives in Ubar.
EnvElement ubar_reduce(const EnvElement& e);

}  // namespace ramond
