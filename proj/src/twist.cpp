#include "ramond/twist.hpp"

namespace ramond {

namespace {

EnvElement raw_word(std::initializer_list<Generator> gens, const Scalar& c) {
  return c * pbw_normalize(GenSeq(gens), Flavor::Ubar);
}

// t^-m G_m - 2 t^-m xi L_m, the part of Y_m appearing in the intermediate
// bracket form of the closure proof. P_0 = G_0 - 2 xi L_0.
EnvElement partial_y(int m) {
  EnvElement e(Flavor::Ubar);
  if (m == 0)
    e += raw_word({Generator::G(0)}, Scalar(1));
  else
    e += raw_word({Generator::T(-m), Generator::G(m)}, Scalar(1));
  e += raw_word({Generator::XiT(-m), Generator::L(m)}, Scalar(-2));
  return e;
}

}  // namespace

TwistElement make_twist(TwistKind kind, int m) {
  if (m == 0) throw std::invalid_argument("make_twist: index m must be nonzero");
  EnvElement e(Flavor::Ubar);
  if (kind == TwistKind::X) {
    e += raw_word({Generator::T(-m), Generator::L(m)}, Scalar(1));
    e += raw_word({Generator::XiT(-m), Generator::G(m)}, Scalar(Rational(m, 2)));
    e += raw_word({Generator::L(0)}, Scalar(-1));
  } else {
    e += raw_word({Generator::T(-m), Generator::G(m)}, Scalar(1));
    e += raw_word({Generator::XiT(-m), Generator::L(m)}, Scalar(-2));
    e += raw_word({Generator::G(0)}, Scalar(-1));
    e += raw_word({Generator::Xi(), Generator::L(0)}, Scalar(2));
  }
  return {kind, m, std::move(e)};
}

EnvElement twist_or_zero(TwistKind kind, int m) {
  if (m == 0) return EnvElement::zero(Flavor::Ubar);
  return make_twist(kind, m).realization;
}

TwistRecord verify_centralizer(int m, const std::vector<Generator>& probes) {
  TwistRecord rec;
  const EnvElement xm = make_twist(TwistKind::X, m).realization;
  const EnvElement ym = make_twist(TwistKind::Y, m).realization;
  for (const auto& p : probes) {
    EnvElement probe =
        EnvElement::from_lie(LieElement::single(Flavor::Stilde, p), Flavor::Ubar);
    rec.record("[" + p.text() + ",X(" + std::to_string(m) + ")]", supercommutator(probe, xm));
    rec.record("[" + p.text() + ",Y(" + std::to_string(m) + ")]", supercommutator(probe, ym));
  }
  return rec;
}

TwistRecord verify_twist_brackets(int m, int n) {
  TwistRecord rec;
  const EnvElement xm = twist_or_zero(TwistKind::X, m);
  const EnvElement xn = twist_or_zero(TwistKind::X, n);
  const EnvElement ym = twist_or_zero(TwistKind::Y, m);
  const EnvElement yn = twist_or_zero(TwistKind::Y, n);
  const std::string sm = std::to_string(m), sn = std::to_string(n);

  {
    EnvElement want = Scalar(Rational(-n)) * xn;
    want += Scalar(Rational(m)) * xm;
    want += Scalar(Rational(n - m)) * twist_or_zero(TwistKind::X, m + n);
    rec.record("[X(" + sm + "),X(" + sn + ")]", supercommutator(xm, xn) - want);
  }
  {
    EnvElement want = Scalar(Rational(-n)) * yn;
    want += Scalar(Rational(m, 2)) * ym;
    want += Scalar(Rational(n) - Rational(m, 2)) * twist_or_zero(TwistKind::Y, m + n);
    rec.record("[X(" + sm + "),Y(" + sn + ")]", supercommutator(xm, yn) - want);
  }
  {
    EnvElement want = xn + xm - twist_or_zero(TwistKind::X, m + n);
    rec.record("[Y(" + sm + "),Y(" + sn + ")]",
               supercommutator(ym, yn) - Scalar(2) * want);
  }
  {
    // Intermediate form from the closure proof, with the extra L_0 term.
    EnvElement want = xn + xm - twist_or_zero(TwistKind::X, m + n);
    want += EnvElement::from_lie(LieElement::single(Flavor::Stilde, Generator::L(0)), Flavor::Ubar);
    rec.record("[P(" + sm + "),P(" + sn + ")] (partial form, +L(0))",
               supercommutator(partial_y(m), partial_y(n)) - Scalar(2) * want);
  }
  return rec;
}

TwistRecord verify_iota_witness(int m) {
  TwistRecord rec;
  const std::string sm = std::to_string(m);
  auto t_m = EnvElement::from_lie(LieElement::single(Flavor::Stilde, Generator::T(m)), Flavor::Ubar);
  auto xit_m = EnvElement::from_lie(LieElement::single(Flavor::Stilde, Generator::XiT(m)), Flavor::Ubar);
  auto l0 = EnvElement::from_lie(LieElement::single(Flavor::Stilde, Generator::L(0)), Flavor::Ubar);
  auto g0 = EnvElement::from_lie(LieElement::single(Flavor::Stilde, Generator::G(0)), Flavor::Ubar);

  EnvElement lhs_l = env_mul(t_m, twist_or_zero(TwistKind::X, m));
  lhs_l += Scalar(Rational(-m, 2)) * env_mul(xit_m, twist_or_zero(TwistKind::Y, m));
  lhs_l += env_mul(t_m, l0);
  lhs_l += Scalar(Rational(-m, 2)) * env_mul(xit_m, g0);
  EnvElement want_l =
      EnvElement::from_lie(LieElement::single(Flavor::Stilde, Generator::L(m)), Flavor::Ubar);
  rec.record("iota preimage of L(" + sm + ")", lhs_l - want_l);

  EnvElement lhs_g = env_mul(t_m, twist_or_zero(TwistKind::Y, m));
  lhs_g += Scalar(2) * env_mul(xit_m, twist_or_zero(TwistKind::X, m));
  lhs_g += env_mul(t_m, g0);
  EnvElement want_g =
      EnvElement::from_lie(LieElement::single(Flavor::Stilde, Generator::G(m)), Flavor::Ubar);
  rec.record("iota preimage of G(" + sm + ")", lhs_g - want_g);
  return rec;
}

LieElement phi_image(const TwistElement& e) {
  LieElement out(Flavor::Sbar);
  const GenTag tag = e.kind == TwistKind::X ? GenTag::L : GenTag::G;
  out.add({tag, e.m}, Scalar(1));
  out.add({tag, 0}, Scalar(-1));
  return out;
}

}  // namespace ramond
