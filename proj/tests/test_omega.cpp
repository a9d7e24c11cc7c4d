#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramond/omega.hpp"

using namespace ramond;

namespace {
const Scalar la = Scalar::param(Param::Lambda);
const Scalar bb = Scalar::param(Param::B);

GammaVector e(int i, int r) { return GammaVector::basis(i, r); }

// Independent route to the composite coefficient: multiply the two affine
// action coefficients read directly off the module formulas, then take the
// alternating binomial sum. Never goes through gamma_act composition.
Scalar oracle_sum(int k, int s, int m, OmegaVariant variant, int x, int r) {
  Scalar total;
  for (int i = 0; i <= m; ++i) {
    Scalar first_coeff, second_coeff;
    const Scalar beta = bb + Scalar(Rational(r, 2));
    second_coeff = la + Scalar(x) + Scalar(Rational(s + i)) * beta;  // L_{s+i} on e(x,r)
    if (variant == OmegaVariant::LL) {
      first_coeff = la + Scalar(x + s + i) + Scalar(Rational(k - i)) * beta;
    } else {
      first_coeff = (r == 0) ? la + Scalar(x + s + i) + Scalar(Rational(2 * (k - i))) * bb
                             : Scalar(-1);
    }
    Rational c = binomial(m, i);
    if (i % 2 != 0) c = -c;
    total += Scalar(c) * first_coeff * second_coeff;
  }
  return total;
}

}  // namespace

TEST_CASE("single differentiator applications") {
  // L_1 L_0 - L_0 L_1 on e(0,0) = -(lambda + b) e(1,0)
  CHECK(omega_apply(1, 0, 1, OmegaVariant::LL, e(0, 0)) == (-(la + bb)) * e(1, 0));

  // order zero degenerates to the plain product L_k L_s
  EnvElement single = omega_element(2, -1, 0, OmegaVariant::LL);
  CHECK(single == pbw_normalize({Generator::L(2), Generator::L(-1)}, Flavor::Sbar));

  // order three of the GL family annihilates symbolically
  for (int i = -2; i <= 2; ++i)
    for (int r = 0; r < 2; ++r)
      CHECK(omega_apply(0, 0, 3, OmegaVariant::GL, e(i, r)).is_zero());
}

TEST_CASE("composite coefficients match the direct product oracle") {
  for (auto variant : {OmegaVariant::LL, OmegaVariant::GL})
    for (int k = -2; k <= 2; ++k)
      for (int s = -2; s <= 2; ++s)
        for (int x = -2; x <= 2; ++x)
          for (int r = 0; r < 2; ++r)
            for (int m = 0; m <= 4; ++m) {
              GammaVector got = omega_apply(k, s, m, variant, e(x, r));
              Scalar want = oracle_sum(k, s, m, variant, x, r);
              const int target = x + k + s;
              const int target_r = variant == OmegaVariant::LL ? r : 1 - r;
              GammaVector expect(la, bb);
              expect.add({target, target_r}, want);
              CHECK_MESSAGE(got == expect, "variant=", int(variant), " k=", k, " s=", s,
                            " x=", x, " r=", r, " m=", m);
            }
}

TEST_CASE("minimal annihilating order is three for symbolic parameters") {
  // The composite coefficient is quadratic in the summation index, so the
  // third finite difference kills it and the second does not.
  for (auto variant : {OmegaVariant::LL, OmegaVariant::GL}) {
    for (int k = -2; k <= 2; ++k)
      for (int s = -2; s <= 2; ++s)
        for (int x = -2; x <= 2; ++x)
          for (int r = 0; r < 2; ++r) CHECK(oracle_sum(k, s, 3, variant, x, r).is_zero());
    bool order_two_fails = false;
    for (int k = -2; k <= 2 && !order_two_fails; ++k)
      for (int s = -2; s <= 2 && !order_two_fails; ++s)
        for (int x = -2; x <= 2 && !order_two_fails; ++x)
          for (int r = 0; r < 2; ++r)
            if (!oracle_sum(k, s, 2, variant, x, r).is_zero()) order_two_fails = true;
    CHECK(order_two_fails);

    auto m = minimal_annihilating_m(la, bb, variant, 2, 6);
    REQUIRE(m.has_value());
    CHECK(*m == 3);
  }
}

TEST_CASE("specialization can only lower the minimal order") {
  auto generic = minimal_annihilating_m(la, bb, OmegaVariant::LL, 2, 6);
  auto special = minimal_annihilating_m(Scalar(0), Scalar(0), OmegaVariant::LL, 2, 6);
  REQUIRE(generic.has_value());
  REQUIRE(special.has_value());
  CHECK(*special <= *generic);
}

TEST_CASE("annihilation persists above the minimal order") {
  for (auto variant : {OmegaVariant::LL, OmegaVariant::GL}) {
    auto mstar = minimal_annihilating_m(la, bb, variant, 2, 6);
    REQUIRE(mstar.has_value());
    for (int m = *mstar; m <= *mstar + 2; ++m)
      for (int k = -2; k <= 2; ++k)
        for (int s = -2; s <= 2; ++s)
          for (int x = -2; x <= 2; ++x)
            for (int r = 0; r < 2; ++r)
              CHECK(omega_apply(k, s, m, variant, e(x, r)).is_zero());
  }
}

TEST_CASE("bracket identity between differentiator families") {
  const std::vector<std::array<int, 4>> samples = {
      {0, 0, 0, 0}, {1, 1, 0, -1}, {2, 0, 2, 1}};
  for (const auto& [m, j, k, p] : samples) {
    OmegaIdentityRecord rec = omega_bracket_identity(m, j, k, p);
    CHECK_MESSAGE(rec.six_term_equals_three_term, "m=", m);
    CHECK_MESSAGE(rec.six_term_equals_telescoped, "m=", m);
    CHECK(rec.resolved_upper_limit == m + 2);
    // truncating the telescoped sum at m drops two nonzero tail terms
    CHECK(!rec.limit_m_also_matches);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(omega_apply(0, 0, -1, OmegaVariant::LL, e(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(minimal_annihilating_m(la, bb, OmegaVariant::LL, 1, -1), std::invalid_argument);
}
