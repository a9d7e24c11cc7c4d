#include "ramond/env.hpp"

#include <algorithm>
#include <utility>

namespace ramond {

int word_parity(const GenSeq& w) {
  int p = 0;
  for (const auto& g : w)
    if (g.odd()) p ^= 1;
  return p;
}

int word_weight(const GenSeq& w) {
  int s = 0;
  for (const auto& g : w) s += g.weight();
  return s;
}

std::string word_text(const GenSeq& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += w[i].text();
  }
  return out;
}

EnvElement EnvElement::from_lie(const LieElement& x, Flavor env_flavor) {
  EnvElement e(env_flavor);
  for (const auto& [g, c] : x.terms()) {
    if (!g.legal_in(env_flavor))
      throw std::invalid_argument("EnvElement: generator " + g.text() + " not legal in " +
                                  flavor_name(env_flavor));
    if (env_flavor == Flavor::Ubar && g == Generator::T(0))
      e.add(GenSeq{}, c);  // t^0 is the unit of Ubar
    else
      e.add(GenSeq{g}, c);
  }
  return e;
}

void EnvElement::add(const GenSeq& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  if (flavor_ != o.flavor_) throw std::invalid_argument("EnvElement: flavor mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  if (flavor_ != o.flavor_) throw std::invalid_argument("EnvElement: flavor mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

EnvElement operator*(const Scalar& s, const EnvElement& x) {
  EnvElement r(x.flavor_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : x.terms_) r.add(w, s * c);
  return r;
}

std::optional<int> EnvElement::parity() const {
  if (terms_.empty()) return 0;
  int p = word_parity(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_parity(w) != p) return std::nullopt;
  return p;
}

EnvElement EnvElement::parity_part(int p) const {
  EnvElement r(flavor_);
  for (const auto& [w, c] : terms_)
    if (word_parity(w) == p) r.add(w, c);
  return r;
}

std::size_t EnvElement::max_word_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

std::string EnvElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
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
    if (c.terms().size() > 1) {
      out += "(" + c.to_string() + ")*" + word_text(w);
    } else if (cs == "1") {
      out += word_text(w);
    } else {
      out += cs + (w.empty() ? "" : "*" + word_text(w));
    }
  }
  return out;
}

namespace {

// Flavor of the straightening arena: Ubar words straighten with stilde
// brackets and are reduced modulo I afterwards.
Flavor bracket_flavor(Flavor f) { return f == Flavor::Ubar ? Flavor::Stilde : f; }

// Collapse the A-prefix of one normal stilde word into the Ubar basis:
// several t's merge, t^0 vanishes into the unit, two xi-type symbols kill
// the word.
void reduce_word_mod_ideal(const GenSeq& w, const Scalar& c, EnvElement& out) {
  int t_offset = 0;
  int xi_count = 0;
  int xi_index = 0;
  GenSeq tail;
  tail.reserve(w.size());
  for (const auto& g : w) {
    if (g.tag == GenTag::T) {
      t_offset += g.index;
    } else if (g.tag == GenTag::XiT) {
      ++xi_count;
      xi_index = g.index;
    } else {
      tail.push_back(g);
    }
  }
  if (xi_count >= 2) return;  // xi·xi = 0
  GenSeq word;
  if (xi_count == 1) {
    word.push_back(Generator::XiT(t_offset + xi_index));
  } else if (t_offset != 0) {
    word.push_back(Generator::T(t_offset));
  }
  word.insert(word.end(), tail.begin(), tail.end());
  out.add(word, c);
}

}  // namespace

EnvElement pbw_normalize(const GenSeq& raw, Flavor f, NormStrategy strategy) {
  const Flavor bf = bracket_flavor(f);
  for (const auto& g : raw)
    if (!g.legal_in(f))
      throw std::invalid_argument("pbw_normalize: generator " + g.text() + " not legal in " +
                                  flavor_name(f));

  EnvElement result(bf);
  std::vector<std::pair<GenSeq, Scalar>> work;
  work.emplace_back(raw, Scalar(1));

  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    // Find the first violation under the chosen strategy.
    std::size_t pos = w.size();
    bool found = false;
    if (w.size() >= 2) {
      if (strategy == NormStrategy::LeftmostFirst) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i].odd())) {
            pos = i;
            found = true;
            break;
          }
        }
      } else {
        for (std::size_t i = w.size() - 1; i-- > 0;) {
          if (w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i].odd())) {
            pos = i;
            found = true;
            break;
          }
        }
      }
    }

    if (!found) {
      result.add(w, c);
      continue;
    }

    const Generator a = w[pos], b = w[pos + 1];
    LieElement br = bracket_gens(bf, a, b);
    if (a == b) {
      // odd square: g·g = (1/2)[g,g]
      for (const auto& [g, bc] : br.terms()) {
        GenSeq nw;
        nw.reserve(w.size() - 1);
        nw.insert(nw.end(), w.begin(), w.begin() + pos);
        nw.push_back(g);
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        work.emplace_back(std::move(nw), Scalar(Rational(1, 2)) * bc * c);
      }
      continue;
    }
    // swap: a·b = (-1)^{|a||b|} b·a + [a,b]
    {
      GenSeq nw = w;
      std::swap(nw[pos], nw[pos + 1]);
      Scalar sc = (a.odd() && b.odd()) ? Scalar(-1) * c : c;
      work.emplace_back(std::move(nw), std::move(sc));
    }
    for (const auto& [g, bc] : br.terms()) {
      GenSeq nw;
      nw.reserve(w.size() - 1);
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.push_back(g);
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(nw), bc * c);
    }
  }

  if (f == Flavor::Ubar) return ubar_reduce(result);
  return result;
}

EnvElement env_mul(const EnvElement& a, const EnvElement& b) {
  if (a.flavor() != b.flavor()) throw std::invalid_argument("env_mul: flavor mismatch");
  EnvElement out(a.flavor());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      GenSeq w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += (ca * cb) * pbw_normalize(w, a.flavor());
    }
  }
  return out;
}

EnvElement supercommutator(const EnvElement& a, const EnvElement& b) {
  if (a.flavor() != b.flavor()) throw std::invalid_argument("supercommutator: flavor mismatch");
  EnvElement out(a.flavor());
  for (int pa = 0; pa <= 1; ++pa) {
    EnvElement ap = a.parity_part(pa);
    if (ap.is_zero()) continue;
    for (int pb = 0; pb <= 1; ++pb) {
      EnvElement bp = b.parity_part(pb);
      if (bp.is_zero()) continue;
      EnvElement term = env_mul(ap, bp);
      Scalar sign((pa && pb) ? -1 : 1);
      term -= sign * env_mul(bp, ap);
      out += term;
    }
  }
  return out;
}

EnvElement ubar_reduce(const EnvElement& e) {
  if (e.flavor() != Flavor::Stilde && e.flavor() != Flavor::Ubar)
    throw std::invalid_argument("ubar_reduce: expects a U(stilde) or Ubar element");
  EnvElement out(Flavor::Ubar);
  for (const auto& [w, c] : e.terms()) reduce_word_mod_ideal(w, c, out);
  return out;
}

}  // namespace ramond
