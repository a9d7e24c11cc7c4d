#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramond/env.hpp"

namespace ramond {

/// Basis monomial of the Verma module M(h,c) over s: a normal-form word in
/// L(-a) (a >= 1, repeats allowed) followed by distinct G(-a) (a >= 1) and
/// an optional trailing G(0), applied to the cyclic vector. Positive-index
/// generators annihilate the cyclic vector; L(0) and C act as scalars.
/// depth = sum of |indices|; the L(0)-eigenvalue at depth n is h - n.
using VermaMonomial = GenSeq;

bool is_verma_monomial(const VermaMonomial& w);
int verma_depth(const VermaMonomial& w);

/// Element of M(h,c); h and c ride along (symbolic parameters by default).
class VermaVector {
public:
  VermaVector() : h_(Scalar::param(Param::H)), c_(Scalar::param(Param::C)) {}
  VermaVector(Scalar h, Scalar c) : h_(std::move(h)), c_(std::move(c)) {}

  /// The cyclic vector.
  static VermaVector highest_weight(Scalar h = Scalar::param(Param::H),
                                    Scalar c = Scalar::param(Param::C));
  static VermaVector basis(const VermaMonomial& w, Scalar h = Scalar::param(Param::H),
                           Scalar c = Scalar::param(Param::C));

  const Scalar& h() const { return h_; }
  const Scalar& c() const { return c_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<VermaMonomial, Scalar>& terms() const { return terms_; }

  void add(const VermaMonomial& w, const Scalar& coeff);

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(const Scalar& s, const VermaVector& v);
  friend bool operator==(const VermaVector&, const VermaVector&) = default;

  std::string to_string() const;

private:
  Scalar h_, c_;
  std::map<VermaMonomial, Scalar> terms_;
};

/// Action of a single generator, by PBW straightening toward the cyclic
/// vector; extended linearly over Lie elements and words.
VermaVector verma_act(Generator g, const VermaVector& v);
VermaVector verma_act(const LieElement& g, const VermaVector& v);
VermaVector verma_act(const GenSeq& word, const VermaVector& v);

/// All basis monomials of the given depth, in canonical order.
std::vector<VermaMonomial> verma_basis(int depth);

/// Weight-space dimensions for depth 0..N by direct enumeration of the
/// PBW monomials.
std::vector<long long> verma_weight_dims(const Scalar& h, const Scalar& c, int depth);

}  // namespace ramond
