#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramond/env.hpp"
#include "testutil.hpp"

using namespace ramond;

namespace {

EnvElement env_word(Flavor f, GenSeq w, Rational c = Rational(1)) {
  EnvElement e(f);
  e.add(std::move(w), Scalar(c));
  return e;
}

}  // namespace

TEST_CASE("straightening single swaps and odd squares") {
  // L_1 L_-1 = L_-1 L_1 + [L_1, L_-1] = L_-1 L_1 - 2 L_0
  EnvElement got = pbw_normalize({Generator::L(1), Generator::L(-1)}, Flavor::Sbar);
  EnvElement want = env_word(Flavor::Sbar, {Generator::L(-1), Generator::L(1)});
  want += env_word(Flavor::Sbar, {Generator::L(0)}, Rational(-2));
  CHECK(got == want);

  CHECK(pbw_normalize({Generator::G(0), Generator::G(0)}, Flavor::Sbar) ==
        env_word(Flavor::Sbar, {Generator::L(0)}, Rational(-1)));

  EnvElement g0sq = pbw_normalize({Generator::G(0), Generator::G(0)}, Flavor::S);
  EnvElement g0want = env_word(Flavor::S, {Generator::L(0)}, Rational(-1));
  g0want += env_word(Flavor::S, {Generator::C()}, Rational::of(-1, 24));
  CHECK(g0sq == g0want);

  CHECK(pbw_normalize({Generator::G(1), Generator::G(1)}, Flavor::Sbar) ==
        env_word(Flavor::Sbar, {Generator::L(2)}, Rational(-1)));
}

TEST_CASE("multiplication basics") {
  EnvElement one = EnvElement::unit(Flavor::Sbar);
  EnvElement x = pbw_normalize({Generator::L(-2), Generator::G(3)}, Flavor::Sbar);
  CHECK(env_mul(one, x) == x);
  CHECK(env_mul(x, one) == x);

  // re-association gives the identical normal form
  EnvElement a = env_word(Flavor::Sbar, {Generator::L(-1)});
  EnvElement b = env_word(Flavor::Sbar, {Generator::L(1)});
  EnvElement c = env_word(Flavor::Sbar, {Generator::L(0)});
  CHECK(env_mul(env_mul(a, b), c) == env_mul(a, env_mul(b, c)));

  CHECK_THROWS_AS(env_mul(one, EnvElement::unit(Flavor::S)), std::invalid_argument);
}

TEST_CASE("supercommutators") {
  // [L_0, w] = weight(w) * w
  EnvElement w = pbw_normalize({Generator::L(-2), Generator::G(3)}, Flavor::Sbar);
  EnvElement l0 = env_word(Flavor::Sbar, {Generator::L(0)});
  CHECK(supercommutator(l0, w) == Scalar(1) * w);  // weight -2 + 3 = 1

  EnvElement g0 = env_word(Flavor::Sbar, {Generator::G(0)});
  CHECK(supercommutator(g0, g0) == env_word(Flavor::Sbar, {Generator::L(0)}, Rational(-2)));

  CHECK(supercommutator(w, EnvElement::unit(Flavor::Sbar)).is_zero());
}

TEST_CASE("enveloping property: commutators of generators match brackets") {
  for (Flavor f : {Flavor::S, Flavor::Sbar, Flavor::Stilde}) {
    std::mt19937 rng(31 + static_cast<int>(f));
    for (int trial = 0; trial < 300; ++trial) {
      Generator a = testutil::random_generator(rng, f, 4);
      Generator b = testutil::random_generator(rng, f, 4);
      EnvElement lhs = supercommutator(env_word(f, {a}), env_word(f, {b}));
      EnvElement rhs = EnvElement::from_lie(bracket_gens(f, a, b), f);
      CHECK_MESSAGE(lhs == rhs, a.text(), " ", b.text(), " in ", flavor_name(f));
    }
  }
}

TEST_CASE("reduction modulo the ideal I") {
  CHECK(pbw_normalize({Generator::T(2), Generator::T(-2)}, Flavor::Ubar) ==
        EnvElement::unit(Flavor::Ubar));
  CHECK(pbw_normalize({Generator::T(1), Generator::XiT(0)}, Flavor::Ubar) ==
        env_word(Flavor::Ubar, {Generator::XiT(1)}));
  CHECK(pbw_normalize({Generator::XiT(0), Generator::XiT(3)}, Flavor::Ubar).is_zero());
  // the A-prefix straightens through L/G before collapsing
  EnvElement e = pbw_normalize({Generator::L(1), Generator::T(2)}, Flavor::Ubar);
  EnvElement want = env_word(Flavor::Ubar, {Generator::T(2), Generator::L(1)});
  want += env_word(Flavor::Ubar, {Generator::T(3)}, Rational(2));  // [L(1),T(2)] = 2T(3)
  CHECK(e == want);
}

TEST_CASE("idempotence of normalization and reduction") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Flavor f = (trial % 2) ? Flavor::Stilde : Flavor::S;
    GenSeq raw = testutil::random_word(rng, f, 5, 3);
    EnvElement nf = pbw_normalize(raw, f);
    EnvElement renf(f);
    for (const auto& [w, c] : nf.terms()) renf += c * pbw_normalize(w, f);
    CHECK(renf == nf);
    if (f == Flavor::Stilde) {
      EnvElement reduced = ubar_reduce(nf);
      CHECK(ubar_reduce(reduced) == reduced);
    }
  }
}

TEST_CASE("confluence: both strategies reach the same normal form") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 250; ++trial) {
    Flavor f = (trial % 3 == 0) ? Flavor::S : (trial % 3 == 1 ? Flavor::Sbar : Flavor::Stilde);
    GenSeq raw = testutil::random_word(rng, f, 5, 3);
    CHECK(pbw_normalize(raw, f, NormStrategy::LeftmostFirst) ==
          pbw_normalize(raw, f, NormStrategy::RightmostFirst));
  }
}

TEST_CASE("filtration: straightening never lengthens words") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 200; ++trial) {
    Flavor f = (trial % 2) ? Flavor::Stilde : Flavor::Sbar;
    GenSeq raw = testutil::random_word(rng, f, 6, 3);
    CHECK(pbw_normalize(raw, f).max_word_length() <= raw.size());
  }
}

TEST_CASE("associativity on random elements") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    Flavor f = (trial % 2) ? Flavor::Ubar : Flavor::Sbar;
    EnvElement a = pbw_normalize(testutil::random_word(rng, f, 3, 2), f);
    EnvElement b = pbw_normalize(testutil::random_word(rng, f, 3, 2), f);
    EnvElement c = pbw_normalize(testutil::random_word(rng, f, 3, 2), f);
    CHECK(env_mul(env_mul(a, b), c) == env_mul(a, env_mul(b, c)));
  }
}

TEST_CASE("normal form invariants") {
  std::mt19937 rng(888);
  for (int trial = 0; trial < 200; ++trial) {
    Flavor f = (trial % 2) ? Flavor::Ubar : Flavor::Stilde;
    EnvElement e = pbw_normalize(testutil::random_word(rng, f, 5, 3), f);
    for (const auto& [w, c] : e.terms()) {
      CHECK(!c.is_zero());
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        CHECK(w[i] <= w[i + 1]);
        if (w[i].odd()) CHECK(w[i] != w[i + 1]);
      }
      if (f == Flavor::Ubar) {
        // the A-part is a single leading monomial, never t^0
        int a_syms = 0;
        for (const auto& g : w)
          if (g.is_a_part()) ++a_syms;
        CHECK(a_syms <= 1);
        if (!w.empty() && w[0].is_a_part()) CHECK(w[0] != Generator::T(0));
        for (std::size_t i = 1; i < w.size(); ++i) CHECK(!w[i].is_a_part());
      }
    }
  }
}

TEST_CASE("word and element rendering") {
  CHECK(word_text({Generator::T(2), Generator::XiT(1), Generator::L(-1), Generator::G(3)}) ==
        "t(2)*xit(1)*L(-1)*G(3)");
  CHECK(EnvElement::unit(Flavor::Ubar).to_string() == "1");
  CHECK(pbw_normalize({Generator::G(0), Generator::G(0)}, Flavor::Ubar).to_string() == "-L(0)");
}
