#include "ramond/gamma.hpp"

namespace ramond {

GammaVector GammaVector::basis(int i, int r, Scalar lambda, Scalar b) {
  GammaVector v(std::move(lambda), std::move(b));
  v.add({i, r}, Scalar(1));
  return v;
}

void GammaVector::add(GammaIndex idx, const Scalar& c) {
  if (idx.second != 0 && idx.second != 1)
    throw std::invalid_argument("GammaVector: xi-degree must be 0 or 1");
  if (c.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void check_same_module(const GammaVector& a, const GammaVector& b) {
  if (a.lambda() != b.lambda() || b.b() != a.b())
    throw std::invalid_argument("GammaVector: module parameters disagree");
}

}  // namespace

GammaVector& GammaVector::operator+=(const GammaVector& o) {
  check_same_module(*this, o);
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

GammaVector& GammaVector::operator-=(const GammaVector& o) {
  check_same_module(*this, o);
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

GammaVector operator*(const Scalar& s, const GammaVector& v) {
  GammaVector r(v.lambda(), v.b());
  if (s.is_zero()) return r;
  for (const auto& [i, c] : v.terms_) r.add(i, s * c);
  return r;
}

std::string GammaVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    std::string basis = "e(" + std::to_string(idx.first) + "," + std::to_string(idx.second) + ")";
    std::string cs = c.to_string();
    bool negated = false;
    if (c.terms().size() == 1 && !cs.empty() && cs[0] == '-') {
      negated = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (negated) out += "-";
      first = false;
    } else {
      out += negated ? " - " : " + ";
    }
    if (c.terms().size() > 1)
      out += "(" + c.to_string() + ")*" + basis;
    else if (cs == "1")
      out += basis;
    else
      out += cs + "*" + basis;
  }
  return out;
}

GammaVector gamma_act(Generator g, const GammaVector& v, bool* c_seen) {
  GammaVector out(v.lambda(), v.b());
  const Scalar& la = v.lambda();
  const Scalar& b = v.b();
  const int m = g.index;
  switch (g.tag) {
    case GenTag::C:
      if (c_seen) *c_seen = true;  // central element acts as zero on Gamma
      return out;
    case GenTag::L:
      for (const auto& [idx, c] : v.terms()) {
        Scalar coeff = la + Scalar(idx.first) +
                       Scalar(Rational(m)) * (b + Scalar(Rational(idx.second, 2)));
        out.add({idx.first + m, idx.second}, coeff * c);
      }
      return out;
    case GenTag::G:
      for (const auto& [idx, c] : v.terms()) {
        if (idx.second == 0) {
          Scalar coeff = la + Scalar(idx.first) + Scalar(Rational(2 * m)) * b;
          out.add({idx.first + m, 1}, coeff * c);
        } else {
          out.add({idx.first + m, 0}, -c);
        }
      }
      return out;
    case GenTag::T:
      for (const auto& [idx, c] : v.terms()) out.add({idx.first + m, idx.second}, c);
      return out;
    case GenTag::XiT:
      for (const auto& [idx, c] : v.terms())
        if (idx.second == 0) out.add({idx.first + m, 1}, c);
      return out;
  }
  return out;
}

GammaVector gamma_act(const LieElement& g, const GammaVector& v, bool* c_seen) {
  GammaVector out(v.lambda(), v.b());
  for (const auto& [gen, c] : g.terms()) out += c * gamma_act(gen, v, c_seen);
  return out;
}

GammaVector gamma_act(const GenSeq& word, const GammaVector& v) {
  GammaVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = gamma_act(*it, cur);
  return cur;
}

GammaVector gamma_act(const EnvElement& e, const GammaVector& v) {
  GammaVector out(v.lambda(), v.b());
  for (const auto& [w, c] : e.terms()) out += c * gamma_act(w, v);
  return out;
}

GammaVector gamma_act_factored(Generator g, const GammaVector& v) {
  const Scalar& la = v.lambda();
  const Scalar& b = v.b();
  GammaVector out(la, b);

  // (L_m - L_0).u = m b u and (G_m - G_0).u = 0 on the one-dimensional
  // module, read off through the class map on a_1/a_2.
  auto x_class_action = [&](GenTag tag, int m) -> Scalar {
    LieElement diff(Flavor::Sbar);
    diff.add({tag, m}, Scalar(1));
    diff.add({tag, 0}, Scalar(-1));
    A1Class cls = a1_mod_a2_class(diff);
    return cls.x * b;  // X.u = b u, Y.u = 0
  };

  const int m = g.index;
  for (const auto& [idx, c] : v.terms()) {
    const int i = idx.first;
    const int r = idx.second;
    // The (-1)^{|y|}-signed summands carry (G_m - G_0).u and vanish on the
    // one-dimensional module, so the sign never surfaces below.
    if (g.tag == GenTag::L) {
      // t^m y ⊗ (L_m - L_0).u
      out.add({i + m, r}, c * x_class_action(GenTag::L, m));
      // t^m (lambda y + t d_t y) ⊗ u
      out.add({i + m, r}, c * (la + Scalar(i)));
      // (m/2) t^m xi d_xi(y) ⊗ u
      if (r == 1) out.add({i + m, 1}, c * Scalar(Rational(m, 2)));
    } else if (g.tag == GenTag::G) {
      // 2 t^m xi y ⊗ (L_m - L_0).u
      if (r == 0) out.add({i + m, 1}, Scalar(2) * c * x_class_action(GenTag::L, m));
      // t^m xi (lambda y + t d_t y) ⊗ u
      if (r == 0) out.add({i + m, 1}, c * (la + Scalar(i)));
      // -t^m d_xi(y) ⊗ u
      if (r == 1) out.add({i + m, 0}, -c);
    } else if (g.tag == GenTag::T) {
      out.add({i + m, r}, c);
    } else if (g.tag == GenTag::XiT) {
      if (r == 0) out.add({i + m, 1}, c);
    } else {
      throw std::invalid_argument("gamma_act_factored: unsupported generator " + g.text());
    }
  }
  return out;
}

GammaVector check_module_axiom(const LieElement& x, const LieElement& y, const GammaVector& v) {
  auto px = x.parity(), py = y.parity();
  if (!px || !py) throw std::invalid_argument("check_module_axiom: inputs must be homogeneous");
  GammaVector r = gamma_act(bracket(x, y), v);
  r -= gamma_act(x, gamma_act(y, v));
  Scalar sign((*px && *py) ? -1 : 1);
  r += sign * gamma_act(y, gamma_act(x, v));
  return r;
}

WeylVector weyl_act(WeylGen k, int j, const WeylVector& v) {
  WeylVector out(v.lambda(), v.b());
  const Scalar& la = v.lambda();
  switch (k) {
    case WeylGen::T:
      for (const auto& [idx, c] : v.terms()) out.add({idx.first + j, idx.second}, c);
      return out;
    case WeylGen::Xi:
      for (const auto& [idx, c] : v.terms())
        if (idx.second == 0) out.add({idx.first, 1}, c);
      return out;
    case WeylGen::Dt:
      for (const auto& [idx, c] : v.terms())
        out.add({idx.first - 1, idx.second}, (la + Scalar(idx.first)) * c);
      return out;
    case WeylGen::Dxi:
      for (const auto& [idx, c] : v.terms())
        if (idx.second == 1) out.add({idx.first, 0}, c);
      return out;
    case WeylGen::G0Image: {
      // tau(G_0) = xi t d_t - d_xi
      for (const auto& [idx, c] : v.terms()) {
        if (idx.second == 0)
          out.add({idx.first, 1}, (la + Scalar(idx.first)) * c);
        else
          out.add({idx.first, 0}, -c);
      }
      return out;
    }
  }
  return out;
}

}  // namespace ramond
