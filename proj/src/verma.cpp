#include "ramond/verma.hpp"

#include <algorithm>
#include <limits>

namespace ramond {

bool is_verma_monomial(const VermaMonomial& w) {
  // L-block of indices <= -1 (non-decreasing), then G-block of strictly
  // increasing indices <= 0.
  std::size_t i = 0;
  int prev = std::numeric_limits<int>::min();
  while (i < w.size() && w[i].tag == GenTag::L) {
    if (w[i].index > -1 || w[i].index < prev) return false;
    prev = w[i].index;
    ++i;
  }
  prev = std::numeric_limits<int>::min();
  while (i < w.size() && w[i].tag == GenTag::G) {
    if (w[i].index > 0 || w[i].index <= prev) return false;
    prev = w[i].index;
    ++i;
  }
  return i == w.size();
}

int verma_depth(const VermaMonomial& w) {
  int d = 0;
  for (const auto& g : w) d -= g.index;
  return d;
}

VermaVector VermaVector::highest_weight(Scalar h, Scalar c) {
  return basis({}, std::move(h), std::move(c));
}

VermaVector VermaVector::basis(const VermaMonomial& w, Scalar h, Scalar c) {
  VermaVector v(std::move(h), std::move(c));
  v.add(w, Scalar(1));
  return v;
}

void VermaVector::add(const VermaMonomial& w, const Scalar& coeff) {
  if (!is_verma_monomial(w))
    throw std::invalid_argument("VermaVector: not a basis monomial: " + word_text(w));
  if (coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void check_same_module(const VermaVector& a, const VermaVector& b) {
  if (a.h() != b.h() || a.c() != b.c())
    throw std::invalid_argument("VermaVector: module parameters disagree");
}

}  // namespace

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  check_same_module(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  check_same_module(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

VermaVector operator*(const Scalar& s, const VermaVector& v) {
  VermaVector r(v.h(), v.c());
  if (s.is_zero()) return r;
  for (const auto& [w, c] : v.terms_) r.add(w, s * c);
  return r;
}

std::string VermaVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string basis = w.empty() ? "v" : word_text(w) + "*v";
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

namespace {

// Evaluates one normal-form U(s) word with all indices <= 0 on the cyclic
// vector: C^a maps to c^a, each L(0) (sitting between the negative L-block
// and the G-block) commutes through the G-block picking up h + sum of the
// G-indices, and the rest is a basis monomial.
void eval_nonpositive_word(const GenSeq& w, const Scalar& coeff, const Scalar& h, const Scalar& c,
                           VermaVector& out) {
  Scalar value = coeff;
  VermaMonomial mono;
  mono.reserve(w.size());
  int l0_count = 0;
  int g_index_sum = 0;
  for (const auto& g : w) {
    if (g.tag == GenTag::C) {
      value *= c;
    } else if (g.tag == GenTag::L && g.index == 0) {
      ++l0_count;
    } else {
      if (g.index > 0)
        throw std::logic_error("eval_nonpositive_word: positive index in " + word_text(w));
      if (g.tag == GenTag::G) g_index_sum += g.index;
      mono.push_back(g);
    }
  }
  Scalar weight = h + Scalar(g_index_sum);
  for (int e = 0; e < l0_count; ++e) value *= weight;
  out.add(mono, value);
}

VermaVector act_gen(Generator g, const VermaMonomial& mono, const Scalar& h, const Scalar& c);

VermaVector act_lie(const LieElement& x, const VermaMonomial& mono, const Scalar& h,
                    const Scalar& c) {
  VermaVector out(h, c);
  for (const auto& [g, s] : x.terms()) out += s * act_gen(g, mono, h, c);
  return out;
}

VermaVector act_gen(Generator g, const VermaMonomial& mono, const Scalar& h, const Scalar& c) {
  VermaVector out(h, c);
  if (!g.legal_in(Flavor::S))
    throw std::invalid_argument("verma_act: generator " + g.text() + " is not in s");

  if (g.tag == GenTag::C) {
    out.add(mono, c);
    return out;
  }
  if (g.tag == GenTag::L && g.index == 0) {
    out.add(mono, h - Scalar(verma_depth(mono)));
    return out;
  }
  if (g.index <= 0) {
    // Insert among the non-positive generators by straightening; every
    // resulting normal word still has non-positive indices.
    GenSeq raw;
    raw.reserve(mono.size() + 1);
    raw.push_back(g);
    raw.insert(raw.end(), mono.begin(), mono.end());
    const EnvElement nf = pbw_normalize(raw, Flavor::S);
    for (const auto& [w, s] : nf.terms()) eval_nonpositive_word(w, s, h, c, out);
    return out;
  }
  // Positive index: commute toward the cyclic vector one step at a time.
  if (mono.empty()) return out;  // annihilates the cyclic vector
  const Generator head = mono.front();
  const VermaMonomial rest(mono.begin() + 1, mono.end());
  VermaVector tail = act_gen(g, rest, h, c);
  Scalar sign((g.odd() && head.odd()) ? -1 : 1);
  for (const auto& [w, s] : tail.terms()) out += (sign * s) * act_gen(head, w, h, c);
  out += act_lie(bracket_gens(Flavor::S, g, head), rest, h, c);
  return out;
}

}  // namespace

VermaVector verma_act(Generator g, const VermaVector& v) {
  VermaVector out(v.h(), v.c());
  for (const auto& [w, c] : v.terms()) out += c * act_gen(g, w, v.h(), v.c());
  return out;
}

VermaVector verma_act(const LieElement& g, const VermaVector& v) {
  VermaVector out(v.h(), v.c());
  for (const auto& [gen, c] : g.terms()) out += c * verma_act(gen, v);
  return out;
}

VermaVector verma_act(const GenSeq& word, const VermaVector& v) {
  VermaVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = verma_act(*it, cur);
  return cur;
}

namespace {

// Multisets of parts >= 1 summing to n, as L(-part) blocks, non-increasing
// parts emitted as non-decreasing index sequences.
void enum_partitions(int n, int max_part, GenSeq& prefix, std::vector<GenSeq>& out) {
  if (n == 0) {
    out.push_back(prefix);  // parts descend, so the indices already ascend
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(Generator::L(-part));
    enum_partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Strictly decreasing parts >= 1 summing to n, as G(-part) blocks emitted
// with strictly increasing indices.
void enum_distinct(int n, int max_part, GenSeq& prefix, std::vector<GenSeq>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(Generator::G(-part));
    enum_distinct(n - part, part - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<VermaMonomial> verma_basis(int depth) {
  if (depth < 0) throw std::invalid_argument("verma_basis: depth must be non-negative");
  std::vector<VermaMonomial> out;
  for (int lpart = 0; lpart <= depth; ++lpart) {
    std::vector<GenSeq> ls, gs;
    GenSeq buf;
    enum_partitions(lpart, lpart, buf, ls);
    enum_distinct(depth - lpart, depth - lpart, buf, gs);
    for (const auto& l : ls)
      for (const auto& g : gs)
        for (int eps = 0; eps <= 1; ++eps) {
          VermaMonomial w = l;
          w.insert(w.end(), g.begin(), g.end());
          if (eps) w.push_back(Generator::G(0));
          out.push_back(std::move(w));
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> verma_weight_dims(const Scalar& h, const Scalar& c, int depth) {
  (void)h;
  (void)c;  // the counts do not depend on the highest weight
  std::vector<long long> dims;
  dims.reserve(depth + 1);
  for (int n = 0; n <= depth; ++n) dims.push_back(static_cast<long long>(verma_basis(n).size()));
  return dims;
}

}  // namespace ramond
