#pragma once

#include <map>
#include <string>
#include <utility>

#include "ramond/env.hpp"

namespace ramond {

/// Basis index of the intermediate-series module: e(i,r) = t^i xi^r ⊗ u,
/// i in Z, r in {0,1}; the parity of e(i,r) is r.
using GammaIndex = std::pair<int, int>;

/// Element of Gamma(lambda,b), a finite combination of e(i,r) with Scalar
/// coefficients. The module parameters ride along (symbolic by default) and
/// must agree when vectors are combined.
class GammaVector {
public:
  GammaVector() : lambda_(Scalar::param(Param::Lambda)), b_(Scalar::param(Param::B)) {}
  GammaVector(Scalar lambda, Scalar b) : lambda_(std::move(lambda)), b_(std::move(b)) {}

  static GammaVector basis(int i, int r, Scalar lambda = Scalar::param(Param::Lambda),
                           Scalar b = Scalar::param(Param::B));

  const Scalar& lambda() const { return lambda_; }
  const Scalar& b() const { return b_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GammaIndex, Scalar>& terms() const { return terms_; }

  void add(GammaIndex idx, const Scalar& c);

  GammaVector& operator+=(const GammaVector& o);
  GammaVector& operator-=(const GammaVector& o);
  friend GammaVector operator+(GammaVector a, const GammaVector& b) { return a += b; }
  friend GammaVector operator-(GammaVector a, const GammaVector& b) { return a -= b; }
  friend GammaVector operator*(const Scalar& s, const GammaVector& v);

  /// Equality of coefficients; parameters must match.
  friend bool operator==(const GammaVector&, const GammaVector&) = default;

  std::string to_string() const;

private:
  Scalar lambda_, b_;
  std::map<GammaIndex, Scalar> terms_;
};

/// Action of a single generator of sbar (or of the A-part of stilde) on
/// Gamma(lambda,b):
///   L(m): e(i,r) -> (lambda + i + m(b + r/2)) e(i+m, r)
///   G(m): e(i,0) -> (lambda + i + 2mb) e(i+m, 1),  e(i,1) -> -e(i+m, 0)
///   t(j): e(i,r) -> e(i+j, r)
///   xit(j): e(i,0) -> e(i+j, 1),  e(i,1) -> 0
/// C acts as zero; if c_seen is non-null it is set when that happens.
GammaVector gamma_act(Generator g, const GammaVector& v, bool* c_seen = nullptr);
GammaVector gamma_act(const LieElement& g, const GammaVector& v, bool* c_seen = nullptr);

/// Word of generators applied right to left, then extended bilinearly over
/// an enveloping element (Ubar words act with their A-prefix included).
GammaVector gamma_act(const GenSeq& word, const GammaVector& v);
GammaVector gamma_act(const EnvElement& e, const GammaVector& v);

/// Same action computed through the factored tensor-module formula
/// (A(lambda) ⊗ one-dimensional (t-1)sbar-module), with (L_m - L_0).u and
/// (G_m - G_0).u evaluated through a1_mod_a2_class. Must agree with
/// gamma_act on every input.
GammaVector gamma_act_factored(Generator g, const GammaVector& v);

/// Residual gamma_act([x,y],v) - x·(y·v) + (-1)^{|x||y|} y·(x·v) for
/// homogeneous x, y; zero certifies the module axiom on v.
GammaVector check_module_axiom(const LieElement& x, const LieElement& y, const GammaVector& v);

/// Generators of the Weyl superalgebra K = A[d_t, d_xi] plus the image of
/// G_0 under tau: G0 -> xi t d_t - d_xi.
enum class WeylGen { T, Xi, Dt, Dxi, G0Image };

/// Element of the Weyl module A(lambda) = K / K(t d_t - lambda, d_xi) with
/// basis e(i,r) = t^i xi^r. Reuses the GammaVector container; the b
/// parameter is unused by the K-action.
using WeylVector = GammaVector;

/// j is the power for WeylGen::T and ignored otherwise.
WeylVector weyl_act(WeylGen k, int j, const WeylVector& v);

}  // namespace ramond
