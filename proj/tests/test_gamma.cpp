#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramond/window.hpp"
#include "testutil.hpp"

using namespace ramond;

namespace {
const Scalar la = Scalar::param(Param::Lambda);
const Scalar bb = Scalar::param(Param::B);

GammaVector e(int i, int r) { return GammaVector::basis(i, r); }
}  // namespace

TEST_CASE("action of single generators") {
  // numeric: lambda = 1, b = 0
  GammaVector v = GammaVector::basis(0, 0, Scalar(1), Scalar(0));
  CHECK(gamma_act(Generator::L(2), v) == GammaVector::basis(2, 0, Scalar(1), Scalar(0)));

  CHECK(gamma_act(Generator::G(1), e(0, 1)) == Scalar(-1) * e(1, 0));

  for (int i = -3; i <= 3; ++i)
    for (int r = 0; r < 2; ++r)
      CHECK(gamma_act(Generator::L(0), e(i, r)) == (la + Scalar(i)) * e(i, r));

  CHECK(gamma_act(Generator::L(3), e(0, 1)) ==
        (la + Scalar(3) * bb + Scalar(Rational::of(3, 2))) * e(3, 1));

  CHECK(gamma_act(Generator::G(2), e(-1, 0)) == (la - Scalar(1) + Scalar(4) * bb) * e(1, 1));

  // A-part
  CHECK(gamma_act(Generator::T(5), e(2, 1)) == e(7, 1));
  CHECK(gamma_act(Generator::XiT(2), e(0, 0)) == e(2, 1));
  CHECK(gamma_act(Generator::XiT(2), e(0, 1)).is_zero());

  bool c_seen = false;
  CHECK(gamma_act(Generator::C(), e(0, 0), &c_seen).is_zero());
  CHECK(c_seen);
}

TEST_CASE("factored formula agrees with the direct action everywhere") {
  for (GenTag tag : {GenTag::L, GenTag::G, GenTag::T, GenTag::XiT})
    for (int m = -4; m <= 4; ++m)
      for (int i = -4; i <= 4; ++i)
        for (int r = 0; r < 2; ++r) {
          GammaVector direct = gamma_act(Generator{tag, m}, e(i, r));
          GammaVector factored = gamma_act_factored(Generator{tag, m}, e(i, r));
          CHECK_MESSAGE(direct == factored, Generator{tag, m}.text(), " on e(", i, ",", r, ")");
        }
}

TEST_CASE("factored formula spot values") {
  CHECK(gamma_act_factored(Generator::L(2), e(3, 0)) == (la + Scalar(3) + Scalar(2) * bb) * e(5, 0));
  CHECK(gamma_act_factored(Generator::L(2), e(3, 1)) ==
        (la + Scalar(3) + Scalar(2) * bb + Scalar(1)) * e(5, 1));
  CHECK(gamma_act_factored(Generator::G(2), e(3, 1)) == Scalar(-1) * e(5, 0));
}

TEST_CASE("module axiom certification") {
  CHECK(check_module_axiom(LieElement::single(Flavor::Sbar, Generator::G(1)),
                           LieElement::single(Flavor::Sbar, Generator::G(-1)), e(0, 0))
            .is_zero());
  for (int m = -4; m <= 4; ++m)
    CHECK(check_module_axiom(LieElement::single(Flavor::Sbar, Generator::L(m)),
                             LieElement::single(Flavor::Sbar, Generator::L(0)), e(0, 0))
              .is_zero());
  for (int i = -2; i <= 2; ++i)
    CHECK(check_module_axiom(LieElement::single(Flavor::Sbar, Generator::G(0)),
                             LieElement::single(Flavor::Sbar, Generator::G(0)), e(i, 1))
              .is_zero());
  CHECK_THROWS_AS(
      check_module_axiom(LieElement::single(Flavor::Sbar, Generator::L(1)) +
                             LieElement::single(Flavor::Sbar, Generator::G(1)),
                         LieElement::single(Flavor::Sbar, Generator::L(0)), e(0, 0)),
      std::invalid_argument);
}

TEST_CASE("module axiom sweep over mixed generator pairs") {
  std::vector<Generator> gens;
  for (int m = -2; m <= 2; ++m)
    for (GenTag t : {GenTag::L, GenTag::G, GenTag::T, GenTag::XiT}) gens.push_back({t, m});
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (int i = -2; i <= 2; ++i)
        for (int r = 0; r < 2; ++r)
          CHECK(check_module_axiom(LieElement::single(Flavor::Stilde, a),
                                   LieElement::single(Flavor::Stilde, b), e(i, r))
                    .is_zero());
}

TEST_CASE("Weyl module actions") {
  CHECK(weyl_act(WeylGen::Dxi, 0, e(0, 0)).is_zero());
  CHECK(weyl_act(WeylGen::Dt, 0, e(2, 0)) == (la + Scalar(2)) * e(1, 0));
  // t d_t fixes the cyclic offset with eigenvalue lambda
  for (int r = 0; r < 2; ++r)
    CHECK(weyl_act(WeylGen::T, 1, weyl_act(WeylGen::Dt, 0, e(0, r))) == la * e(0, r));
  CHECK(weyl_act(WeylGen::Dxi, 0, e(3, 1)) == e(3, 0));
  CHECK(weyl_act(WeylGen::Xi, 0, e(3, 0)) == e(3, 1));
  CHECK(weyl_act(WeylGen::Xi, 0, e(3, 1)).is_zero());
}

TEST_CASE("tau(G_0) matches the G_0 action on Gamma") {
  for (int i = -4; i <= 4; ++i)
    for (int r = 0; r < 2; ++r)
      CHECK(weyl_act(WeylGen::G0Image, 0, e(i, r)) == gamma_act(Generator::G(0), e(i, r)));
}

TEST_CASE("A-action compatibility between Weyl and Gamma") {
  for (int j = -4; j <= 4; ++j)
    for (int i = -4; i <= 4; ++i)
      for (int r = 0; r < 2; ++r) {
        CHECK(weyl_act(WeylGen::T, j, e(i, r)) == gamma_act(Generator::T(j), e(i, r)));
        CHECK(weyl_act(WeylGen::Xi, 0, e(i, r)) == gamma_act(Generator::Xi(), e(i, r)));
      }
}

TEST_CASE("window matrices") {
  // L(0) is diagonal with entries lambda + i
  Window w(-2, 2);
  WindowedOperator d = window_matrix(LieElement::single(Flavor::Sbar, Generator::L(0)), la, bb, w);
  CHECK(d.shift == 0);
  CHECK(d.spill == 0);
  CHECK(d.is_banded());
  for (int i = -2; i <= 2; ++i)
    for (int r = 0; r < 2; ++r)
      CHECK(d.at(w.pos(i, r), w.pos(i, r)) == la + Scalar(i));

  // G(1) on [0,1]: two entries inside, two images spill at i = 1
  Window w01(0, 1);
  WindowedOperator g1 = window_matrix(LieElement::single(Flavor::Sbar, Generator::G(1)), la, bb, w01);
  CHECK(g1.spill == 2);
  CHECK(g1.at(w01.pos(1, 1), w01.pos(0, 0)) == la + Scalar(2) * bb);
  CHECK(g1.at(w01.pos(1, 0), w01.pos(0, 1)) == Scalar(-1));
  int nonzero = 0;
  for (const auto& s : g1.entries)
    if (!s.is_zero()) ++nonzero;
  CHECK(nonzero == 2);

  // the central element gives the zero matrix
  WindowedOperator zc = window_matrix(LieElement::single(Flavor::S, Generator::C()), la, bb, w);
  for (const auto& s : zc.entries) CHECK(s.is_zero());

  LieElement mixed(Flavor::Sbar);
  mixed.add(Generator::L(1), Scalar(1));
  mixed.add(Generator::L(2), Scalar(1));
  CHECK_THROWS_AS(window_matrix(mixed, la, bb, w), std::invalid_argument);
  CHECK_THROWS_AS(Window(3, 1), std::invalid_argument);
}

TEST_CASE("windowed operators stay banded") {
  std::mt19937 rng(2024);
  Window w(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> shift(-2, 2);
    int m = shift(rng);
    LieElement g(Flavor::Sbar);
    g.add(Generator::L(m), testutil::random_scalar(rng));
    g.add(Generator::G(m), testutil::random_scalar(rng));
    if (g.is_zero()) continue;
    WindowedOperator op = window_matrix(g, la, bb, w);
    CHECK(op.shift == m);
    CHECK(op.is_banded());
  }
}

TEST_CASE("products of windowed operators match the enveloping product inside") {
  Window w(-4, 4);
  const std::vector<std::pair<Generator, Generator>> pairs = {
      {Generator::L(1), Generator::L(2)},
      {Generator::G(1), Generator::L(-1)},
      {Generator::G(2), Generator::G(-1)},
      {Generator::L(0), Generator::G(1)},
  };
  for (const auto& [g1, g2] : pairs) {
    WindowedOperator m1 = window_matrix(LieElement::single(Flavor::Sbar, g1), la, bb, w);
    WindowedOperator m2 = window_matrix(LieElement::single(Flavor::Sbar, g2), la, bb, w);
    WindowedOperator prod = m1 * m2;
    EnvElement word(Flavor::Sbar);
    word.add({g1, g2}, Scalar(1));  // apply g2 first, then g1
    WindowedOperator direct = window_matrix(word, la, bb, w);
    const int margin = std::abs(g1.index) + std::abs(g2.index);
    for (int i = w.lo + margin; i <= w.hi - margin; ++i)
      for (int r = 0; r < 2; ++r)
        for (int it = w.lo; it <= w.hi; ++it)
          for (int rt = 0; rt < 2; ++rt)
            CHECK(prod.at(w.pos(it, rt), w.pos(i, r)) == direct.at(w.pos(it, rt), w.pos(i, r)));
  }
}

TEST_CASE("vectors from different modules do not mix") {
  GammaVector a = GammaVector::basis(0, 0, Scalar(1), Scalar(0));
  GammaVector b2 = GammaVector::basis(0, 0, Scalar(2), Scalar(0));
  CHECK_THROWS_AS(a + b2, std::invalid_argument);
}

TEST_CASE("rendering") {
  GammaVector v = (la + Scalar(3) * bb + Scalar(Rational::of(3, 2))) * e(3, 1);
  CHECK(v.to_string() == "(lambda + 3*b + 3/2)*e(3,1)");
  CHECK((Scalar(-1) * e(1, 0)).to_string() == "-e(1,0)");
  CHECK(GammaVector().to_string() == "0");
}
