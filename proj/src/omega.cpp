#include "ramond/omega.hpp"

namespace ramond {

EnvElement omega_element(int k, int s, int m, OmegaVariant variant) {
  if (m < 0) throw std::invalid_argument("omega_element: order m must be non-negative");
  EnvElement out(Flavor::Sbar);
  for (int i = 0; i <= m; ++i) {
    Rational c = binomial(m, i);
    if (i % 2 != 0) c = -c;
    Generator first =
        variant == OmegaVariant::LL ? Generator::L(k - i) : Generator::G(k - i);
    out += Scalar(c) * pbw_normalize({first, Generator::L(s + i)}, Flavor::Sbar);
  }
  return out;
}

GammaVector omega_apply(int k, int s, int m, OmegaVariant variant, const GammaVector& v) {
  if (m < 0) throw std::invalid_argument("omega_apply: order m must be non-negative");
  GammaVector out(v.lambda(), v.b());
  for (int i = 0; i <= m; ++i) {
    Rational c = binomial(m, i);
    if (i % 2 != 0) c = -c;
    Generator first =
        variant == OmegaVariant::LL ? Generator::L(k - i) : Generator::G(k - i);
    out += Scalar(c) * gamma_act(first, gamma_act(Generator::L(s + i), v));
  }
  return out;
}

std::optional<int> minimal_annihilating_m(const Scalar& lambda, const Scalar& b,
                                          OmegaVariant variant, int range, int max_m) {
  if (max_m < 0) throw std::invalid_argument("minimal_annihilating_m: max_m must be non-negative");
  for (int m = 0; m <= max_m; ++m) {
    bool all_zero = true;
    for (int k = -range; k <= range && all_zero; ++k)
      for (int s = -range; s <= range && all_zero; ++s)
        for (int i = -range; i <= range && all_zero; ++i)
          for (int r = 0; r < 2 && all_zero; ++r)
            if (!omega_apply(k, s, m, variant, GammaVector::basis(i, r, lambda, b)).is_zero())
              all_zero = false;
    if (all_zero) return m;
  }
  return std::nullopt;
}

namespace {

EnvElement gl_word(int a, int b, const Rational& c) {
  return Scalar(c) * pbw_normalize({Generator::G(a), Generator::L(b)}, Flavor::Sbar);
}

}  // namespace

OmegaIdentityRecord omega_bracket_identity(int m, int j, int k, int p) {
  if (m < 0) throw std::invalid_argument("omega_bracket_identity: order m must be non-negative");

  auto g = [](int a) {
    return EnvElement::from_lie(LieElement::single(Flavor::Sbar, Generator::G(a)), Flavor::Sbar);
  };
  auto comm = [&](int kk, int pp, int jj) {
    return supercommutator(omega_element(kk, pp, m, OmegaVariant::LL), g(jj));
  };

  EnvElement lhs = comm(k, p - 1, j + 1);
  lhs -= Scalar(2) * comm(k, p, j);
  lhs += comm(k, p + 1, j - 1);
  lhs -= comm(k + 1, p - 1, j);
  lhs += Scalar(2) * comm(k + 1, p, j - 1);
  lhs -= comm(k + 1, p + 1, j - 2);

  EnvElement three_term(Flavor::Sbar);
  for (int i = 0; i <= m; ++i) {
    Rational c = Rational(3, 2) * binomial(m, i);
    if (i % 2 != 0) c = -c;
    three_term += gl_word(k - i + j + 1, p + i - 1, c);
    three_term += gl_word(k - i + j, p + i, Rational(-2) * c);
    three_term += gl_word(k - i + j - 1, p + i + 1, c);
  }

  auto telescoped = [&](int upper) {
    EnvElement e(Flavor::Sbar);
    for (int i = 0; i <= upper; ++i) {
      Rational c = Rational(3, 2) * binomial(m + 2, i);
      if (i % 2 != 0) c = -c;
      e += gl_word(k - i + j + 1, p + i - 1, c);
    }
    return e;
  };

  OmegaIdentityRecord rec;
  EnvElement d3 = lhs - three_term;
  rec.six_term_equals_three_term = d3.is_zero();
  EnvElement dfull = lhs - telescoped(m + 2);
  rec.six_term_equals_telescoped = dfull.is_zero();
  if (rec.six_term_equals_telescoped) rec.resolved_upper_limit = m + 2;
  rec.limit_m_also_matches = (lhs - telescoped(m)).is_zero();
  if (!rec.six_term_equals_three_term)
    rec.residue = d3.to_string();
  else if (!rec.six_term_equals_telescoped)
    rec.residue = dfull.to_string();
  return rec;
}

}  // namespace ramond
