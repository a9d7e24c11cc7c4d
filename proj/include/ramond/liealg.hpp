#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ramond/scalar.hpp"

namespace ramond {

/// Which algebra an element lives in. S carries the central element C,
/// Sbar = S / C·C, Stilde = Sbar ⋉ A with A = C[t,t^-1] ⊗ Λ(ξ) abelian.
/// Ubar is the quotient of U(Stilde) where A multiplies associatively;
/// it is an enveloping-algebra flavor only.
enum class Flavor : std::uint8_t { S, Sbar, Stilde, Ubar };

const char* flavor_name(Flavor f);

enum class GenTag : std::uint8_t { C = 0, T = 1, XiT = 2, L = 3, G = 4 };

/// Basis symbol: L(n), G(n), the central C, and the A-monomials t^i = T(i),
/// t^i·xi = XiT(i). The ordering (C < T < XiT < L < G, then by index) is the
/// PBW basis order used throughout.
struct Generator {
  GenTag tag;
  int index;

  static Generator L(int n) { return {GenTag::L, n}; }
  static Generator G(int n) { return {GenTag::G, n}; }
  static Generator C() { return {GenTag::C, 0}; }
  static Generator T(int i) { return {GenTag::T, i}; }
  static Generator XiT(int i) { return {GenTag::XiT, i}; }
  static Generator Xi() { return {GenTag::XiT, 0}; }

  bool odd() const { return tag == GenTag::G || tag == GenTag::XiT; }
  bool is_a_part() const { return tag == GenTag::T || tag == GenTag::XiT; }
  /// Weight shift under ad L(0).
  int weight() const { return tag == GenTag::C ? 0 : index; }

  bool legal_in(Flavor f) const;

  /// Text form: L(n), G(n), C, t(i), xi, xit(i).
  std::string text() const;

  friend auto operator<=>(const Generator& a, const Generator& b) {
    if (a.tag != b.tag) return a.tag <=> b.tag;
    return a.index <=> b.index;
  }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Finite linear combination of generators with Scalar coefficients.
/// Invariants: no zero coefficients, all generators legal for the flavor.
class LieElement {
public:
  explicit LieElement(Flavor f) : flavor_(f) { check_flavor(f); }

  static LieElement zero(Flavor f) { return LieElement(f); }
  static LieElement single(Flavor f, Generator g, Scalar coeff = Scalar(1));

  Flavor flavor() const { return flavor_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Generator, Scalar>& terms() const { return terms_; }
  Scalar coeff(Generator g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(Generator g, const Scalar& coeff);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& s, const LieElement& x);

  friend bool operator==(const LieElement&, const LieElement&) = default;

  /// Parity of a homogeneous element: 0 even, 1 odd; nullopt when mixed.
  /// The zero element reports even.
  std::optional<int> parity() const;
  LieElement even_part() const;
  LieElement odd_part() const;

  std::string to_string() const;

private:
  static void check_flavor(Flavor f) {
    if (f == Flavor::Ubar) throw std::invalid_argument("LieElement: Ubar is an envelope-only flavor");
  }

  Flavor flavor_;
  std::map<Generator, Scalar> terms_;
};

/// Bracket of two generators, following the defining relations; central
/// terms appear only in flavor S.
LieElement bracket_gens(Flavor f, Generator a, Generator b);

/// Bilinear super-bracket. Throws on flavor mismatch.
LieElement bracket(const LieElement& x, const LieElement& y);

/// The A-module structure on Sbar: t^i L_n = L_{n+i}, t^i G_n = G_{n+i},
/// t^i xi L_n = (1/2) G_{n+i}, t^i xi G_n = 0. `a` must be a T or XiT symbol.
LieElement a_on_sbar(Generator a, const LieElement& x);

/// Super-Jacobi residual [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]],
/// extended to non-homogeneous inputs by parity decomposition. Zero
/// certifies the triple.
LieElement super_jacobi(const LieElement& x, const LieElement& y, const LieElement& z);

/// Residual of the compatibility between the adjoint action of Sbar and the
/// A-action on Sbar inside Stilde:
///   bracket(x, a·z) - (-1)^{|x||a|} a·bracket(x,z) - [x,a]·z
/// where [x,a] is the Stilde bracket landing in A, acting via a_on_sbar.
/// Zero for all (x, a, z) certifies the displayed compatibility identities.
LieElement sbar_module_axiom(Generator x, Generator a, Generator z);

/// (t-1)^k · g realized through the binomial expansion of the A-action:
/// sum_{r=0..k} binom(k,r) (-1)^(k-r) t^r · g.
LieElement tminus1_expand(int k, Generator g);

enum class RelKind { LL, LG, GG };

struct RelSubalgCheck {
  bool equal;
  LieElement lhs;
  LieElement rhs;
  LieElement difference;
};

/// Checks the closed forms for [(t-1)^k *_i, (t-1)^l *_j] against direct
/// expansion, for each of the three generator kinds.
RelSubalgCheck verify_rel_subalg(int k, int l, int i, int j, RelKind kind);

/// Membership in a_k = (t-1)^k Sbar: the L- and G-coefficient sequences both
/// have vanishing power moments sum_n c_n n^j for j < k.
bool in_ak(const LieElement& x, int k);

struct A1Class {
  Scalar x;  ///< coefficient of the even class X
  Scalar y;  ///< coefficient of the odd class Y
};

/// Image of an element of a_1 in the two-dimensional quotient a_1/a_2 with
/// basis X, Y and bracket [X,Y] = (1/2)Y. Throws if x is not in a_1.
A1Class a1_mod_a2_class(const LieElement& x);

/// Bracket in the quotient a_1/a_2: [X,X] = [Y,Y] = 0, [X,Y] = (1/2)Y.
A1Class a1_class_bracket(const A1Class& u, const A1Class& v);

}  // namespace ramond
