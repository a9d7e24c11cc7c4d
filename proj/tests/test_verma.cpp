#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ramond/verma.hpp"

using namespace ramond;

namespace {
const Scalar h = Scalar::param(Param::H);
const Scalar cc = Scalar::param(Param::C);
}  // namespace

TEST_CASE("weight-space dimensions by direct enumeration") {
  auto dims = verma_weight_dims(h, cc, 8);
  CHECK(dims == std::vector<long long>{2, 4, 8, 16, 28, 48, 80, 128, 200});
}

TEST_CASE("weight-space dimensions match the partition convolution") {
  const int N = 10;
  std::vector<long long> p(N + 1, 0), q(N + 1, 0);
  p[0] = q[0] = 1;
  for (int part = 1; part <= N; ++part)
    for (int n = part; n <= N; ++n) p[n] += p[n - part];
  for (int part = 1; part <= N; ++part)
    for (int n = N; n >= part; --n) q[n] += q[n - part];
  auto dims = verma_weight_dims(h, cc, N);
  for (int n = 0; n <= N; ++n) {
    long long expected = 0;
    for (int j = 0; j <= n; ++j) expected += 2 * p[j] * q[n - j];
    CHECK(dims[n] == expected);
  }
}

TEST_CASE("explicit low-depth bases") {
  auto b0 = verma_basis(0);
  CHECK(b0.size() == 2);  // v, G_0 v
  CHECK(std::set<VermaMonomial>(b0.begin(), b0.end()) ==
        std::set<VermaMonomial>{{}, {Generator::G(0)}});

  auto b1 = verma_basis(1);
  CHECK(std::set<VermaMonomial>(b1.begin(), b1.end()) ==
        std::set<VermaMonomial>{{Generator::L(-1)},
                                {Generator::L(-1), Generator::G(0)},
                                {Generator::G(-1)},
                                {Generator::G(-1), Generator::G(0)}});

  auto b2 = verma_basis(2);
  CHECK(std::set<VermaMonomial>(b2.begin(), b2.end()) ==
        std::set<VermaMonomial>{{Generator::L(-2)},
                                {Generator::L(-2), Generator::G(0)},
                                {Generator::L(-1), Generator::L(-1)},
                                {Generator::L(-1), Generator::L(-1), Generator::G(0)},
                                {Generator::G(-2)},
                                {Generator::G(-2), Generator::G(0)},
                                {Generator::L(-1), Generator::G(-1)},
                                {Generator::L(-1), Generator::G(-1), Generator::G(0)}});
}

TEST_CASE("monomial validation") {
  CHECK(is_verma_monomial({Generator::L(-3), Generator::L(-1), Generator::G(-2), Generator::G(0)}));
  CHECK(!is_verma_monomial({Generator::L(-1), Generator::L(-2)}));       // out of order
  CHECK(!is_verma_monomial({Generator::G(-1), Generator::G(-1)}));       // repeated odd
  CHECK(!is_verma_monomial({Generator::L(0)}));                          // L(0) acts as a scalar
  CHECK(!is_verma_monomial({Generator::G(0), Generator::L(-1)}));        // G after L only
  CHECK(!is_verma_monomial({Generator::L(1)}));                          // positive index
  CHECK(verma_depth({Generator::L(-3), Generator::G(-2), Generator::G(0)}) == 5);
}

TEST_CASE("highest-weight conditions") {
  VermaVector v = VermaVector::highest_weight();
  for (int i = 1; i <= 6; ++i) {
    CHECK(verma_act(Generator::L(i), v).is_zero());
    CHECK(verma_act(Generator::G(i), v).is_zero());
  }
  CHECK(verma_act(Generator::L(0), v) == h * v);
  CHECK(verma_act(Generator::C(), v) == cc * v);
}

TEST_CASE("straightening values on the cyclic vector") {
  VermaVector v = VermaVector::highest_weight();

  // L_1 L_-1 v = [L_1, L_-1] v = -2 L_0 v = -2h v under the bracket
  // convention [L_m, L_n] = (n-m) L_{m+n}
  VermaVector lm1v = verma_act(Generator::L(-1), v);
  CHECK(verma_act(Generator::L(1), lm1v) == Scalar(-2) * (h * v));

  // G_0^2 v = (-h - c/24) v
  VermaVector g0g0 = verma_act(Generator::G(0), verma_act(Generator::G(0), v));
  CHECK(g0g0 == (-h - Scalar(Rational::of(1, 24)) * cc) * v);

  // depth bookkeeping: L_0 eigenvalue is h - n on depth n
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : verma_basis(n)) {
      VermaVector bw = VermaVector::basis(w);
      CHECK(verma_act(Generator::L(0), bw) == (h - Scalar(n)) * bw);
    }
}

TEST_CASE("the action satisfies the super module axiom") {
  std::vector<Generator> gens;
  for (int i = 1; i <= 3; ++i) {
    gens.push_back(Generator::L(i));
    gens.push_back(Generator::L(-i));
    gens.push_back(Generator::G(i));
    gens.push_back(Generator::G(-i));
  }
  gens.push_back(Generator::G(0));
  gens.push_back(Generator::C());
  for (int depth = 0; depth <= 2; ++depth) {
    for (const auto& w : verma_basis(depth)) {
      VermaVector bw = VermaVector::basis(w);
      for (const auto& x : gens)
        for (const auto& y : gens) {
          VermaVector lhs = verma_act(bracket_gens(Flavor::S, x, y), bw);
          VermaVector rhs = verma_act(x, verma_act(y, bw));
          Scalar sign((x.odd() && y.odd()) ? -1 : 1);
          rhs -= sign * verma_act(y, verma_act(x, bw));
          CHECK_MESSAGE(lhs == rhs, x.text(), " ", y.text(), " on ", word_text(w));
        }
    }
  }
}

TEST_CASE("actions stay inside the weight grading") {
  // L_{-2} on a depth-1 monomial lands in depth 3
  VermaVector x = verma_act(Generator::L(-2), VermaVector::basis({Generator::G(-1)}));
  for (const auto& [w, c] : x.terms()) CHECK(verma_depth(w) == 3);

  // a positive generator lowers depth by its index
  VermaVector y = verma_act(Generator::G(2),
                            VermaVector::basis({Generator::L(-3), Generator::G(-1)}));
  for (const auto& [w, c] : y.terms()) CHECK(verma_depth(w) == 2);
}

TEST_CASE("rendering and module hygiene") {
  VermaVector v = VermaVector::highest_weight();
  CHECK(v.to_string() == "v");
  CHECK(verma_act(Generator::G(0), v).to_string() == "G(0)*v");
  VermaVector other(Scalar(1), Scalar(0));
  other.add({}, Scalar(1));
  CHECK_THROWS_AS(v + other, std::invalid_argument);
  CHECK_THROWS_AS(VermaVector::basis({Generator::L(2)}), std::invalid_argument);
}
