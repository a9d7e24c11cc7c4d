#include "ramond/window.hpp"

#include <functional>
#include <optional>

namespace ramond {

bool WindowedOperator::is_banded() const {
  const int n = window.offsets();
  for (int is = 0; is < n; ++is)
    for (int rs = 0; rs < 2; ++rs)
      for (int it = 0; it < n; ++it)
        for (int rt = 0; rt < 2; ++rt)
          if (!at(window.pos(window.lo + it, rt), window.pos(window.lo + is, rs)).is_zero() &&
              it - is != shift)
            return false;
  return true;
}

WindowedOperator operator*(const WindowedOperator& a, const WindowedOperator& b) {
  if (a.window.lo != b.window.lo || a.window.hi != b.window.hi)
    throw std::invalid_argument("WindowedOperator: window mismatch");
  const int n = a.window.dim();
  WindowedOperator r{a.window, a.shift + b.shift, a.spill + b.spill,
                     std::vector<Scalar>(static_cast<std::size_t>(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

namespace {

WindowedOperator tabulate(int shift, const Window& w, const Scalar& lambda, const Scalar& b,
                          const std::function<GammaVector(const GammaVector&)>& apply) {
  const int n = w.dim();
  WindowedOperator op{w, shift, 0, std::vector<Scalar>(static_cast<std::size_t>(n) * n)};
  for (int i = w.lo; i <= w.hi; ++i) {
    for (int r = 0; r < 2; ++r) {
      GammaVector image = apply(GammaVector::basis(i, r, lambda, b));
      for (const auto& [idx, c] : image.terms()) {
        if (w.contains(idx.first))
          op.at(w.pos(idx.first, idx.second), w.pos(i, r)) += c;
        else
          ++op.spill;
      }
    }
  }
  return op;
}

}  // namespace

WindowedOperator window_matrix(const LieElement& g, const Scalar& lambda, const Scalar& b,
                               const Window& w) {
  std::optional<int> shift;
  for (const auto& [gen, c] : g.terms()) {
    if (shift && *shift != gen.weight())
      throw std::invalid_argument("window_matrix: element mixes weight shifts");
    shift = gen.weight();
  }
  return tabulate(shift.value_or(0), w, lambda, b,
                  [&](const GammaVector& v) { return gamma_act(g, v); });
}

WindowedOperator window_matrix(const EnvElement& g, const Scalar& lambda, const Scalar& b,
                               const Window& w) {
  std::optional<int> shift;
  for (const auto& [word, c] : g.terms()) {
    if (shift && *shift != word_weight(word))
      throw std::invalid_argument("window_matrix: element mixes weight shifts");
    shift = word_weight(word);
  }
  return tabulate(shift.value_or(0), w, lambda, b,
                  [&](const GammaVector& v) { return gamma_act(g, v); });
}

}  // namespace ramond
