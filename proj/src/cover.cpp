#include "ramond/cover.hpp"

#include <optional>

namespace ramond {

namespace {

Rational scalar_value(const Scalar& s) {
  if (!s.is_constant()) throw std::logic_error("expected a numeric coefficient");
  return s.constant_value();
}

// Closure of one seed vector under the generators {L_m, G_m : |m| <= d},
// restricted to the interior of the window. Returns the RREF basis.
RowSpace seed_closure(const GammaVector& seed, const Scalar& lambda, const Scalar& b, int lo,
                      int hi, int depth) {
  const int width = 2 * (hi - lo + 1);
  auto pack = [&](const GammaVector& v) {
    std::vector<Rational> row(width);
    for (const auto& [idx, c] : v.terms()) {
      if (idx.first < lo || idx.first > hi) continue;  // restrict to interior
      row[2 * (idx.first - lo) + idx.second] = scalar_value(c);
    }
    return row;
  };
  auto unpack = [&](const std::vector<Rational>& row) {
    GammaVector v(lambda, b);
    for (int i = lo; i <= hi; ++i)
      for (int r = 0; r < 2; ++r) {
        const Rational& c = row[2 * (i - lo) + r];
        if (!c.is_zero()) v.add({i, r}, Scalar(c));
      }
    return v;
  };

  RowSpace space(width);
  space.insert(pack(seed));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Rational>> snapshot = space.rows();
    for (const auto& row : snapshot) {
      GammaVector v = unpack(row);
      for (int m = -depth; m <= depth; ++m) {
        if (space.insert(pack(gamma_act(Generator::L(m), v)))) grew = true;
        if (space.insert(pack(gamma_act(Generator::G(m), v)))) grew = true;
      }
    }
  }
  return space;
}

}  // namespace

SubmoduleReport submodule_search(const Rational& lambda, const Rational& b, const Window& w,
                                 int depth) {
  const int ilo = w.lo + depth, ihi = w.hi - depth;
  if (ilo > ihi) throw std::invalid_argument("submodule_search: window too narrow for the depth");
  const Scalar sl(lambda), sb(b);

  SubmoduleReport report{lambda, b, w, depth, ilo, ihi, 2 * (ihi - ilo + 1), {}, false};

  for (int i = ilo; i <= ihi; ++i) {
    for (int r = 0; r < 2; ++r) {
      RowSpace closure = seed_closure(GammaVector::basis(i, r, sl, sb), sl, sb, ilo, ihi, depth);
      SubmoduleSeed seed{i, r, static_cast<int>(closure.rank()),
                        static_cast<int>(closure.rank()) < report.interior_dim,
                        {}};
      if (seed.proper) {
        for (const auto& row : closure.rows()) {
          GammaVector v(sl, sb);
          for (int ii = ilo; ii <= ihi; ++ii)
            for (int rr = 0; rr < 2; ++rr) {
              const Rational& c = row[2 * (ii - ilo) + rr];
              if (!c.is_zero()) v.add({ii, rr}, Scalar(c));
            }
          seed.spanning.push_back(v.to_string());
        }
      }
      report.seeds.push_back(std::move(seed));
    }
  }

  // Stability: redo the search on the window grown by `depth`; the closure
  // of each original seed, projected back to the original interior, must
  // have the same dimension.
  const Window grown(w.lo - depth, w.hi + depth);
  const int glo = grown.lo + depth, ghi = grown.hi - depth;
  bool stable = true;
  for (const auto& seed : report.seeds) {
    RowSpace closure = seed_closure(GammaVector::basis(seed.offset, seed.xi_degree, sl, sb), sl,
                                    sb, glo, ghi, depth);
    RowSpace projected(2 * (ihi - ilo + 1));
    for (const auto& row : closure.rows()) {
      std::vector<Rational> proj(2 * (ihi - ilo + 1));
      for (int i = ilo; i <= ihi; ++i)
        for (int r = 0; r < 2; ++r) proj[2 * (i - ilo) + r] = row[2 * (i - glo) + r];
      projected.insert(std::move(proj));
    }
    if (static_cast<int>(projected.rank()) != seed.closure_dim) {
      stable = false;
      break;
    }
  }
  report.stable = stable;
  return report;
}

CoverResult cover_weight_dim(const Rational& lambda, const Rational& b, int offset,
                             int truncation) {
  if (truncation < 1) throw std::invalid_argument("cover_weight_dim: truncation must be >= 1");
  const Scalar sl(lambda), sb(b);

  auto rank_at = [&](int K) {
    // Spanning set {L_{p-k} ⊗ e(k,r), G_{p-k} ⊗ e(k,r) : |k| <= K}; the
    // evaluation map sends x ⊗ v to ((a·x)·v)_a over the A-monomials
    // a in {t^j, t^j xi : |j| <= 2K}. Each a-block lands in the
    // two-dimensional weight space at offset p + j.
    const int jcount = 4 * K + 1;
    const int width = 2 * jcount * 2;  // (t vs t xi) x j x (r-coordinate)
    RowSpace space(width);
    for (int k = -K; k <= K; ++k) {
      for (int r = 0; r < 2; ++r) {
        for (GenTag tag : {GenTag::L, GenTag::G}) {
          std::vector<Rational> row(width);
          const GammaVector basis = GammaVector::basis(k, r, sl, sb);
          for (int j = -2 * K; j <= 2 * K; ++j) {
            for (int xi = 0; xi <= 1; ++xi) {
              Generator a = xi ? Generator::XiT(j) : Generator::T(j);
              LieElement ax =
                  a_on_sbar(a, LieElement::single(Flavor::Sbar, {tag, offset - k}));
              GammaVector image = gamma_act(ax, basis);
              for (const auto& [idx, c] : image.terms()) {
                if (idx.first != offset + j)
                  throw std::logic_error("cover_weight_dim: image off the expected weight");
                int col = (xi * jcount + (j + 2 * K)) * 2 + idx.second;
                row[col] += scalar_value(c);
              }
            }
          }
          space.insert(std::move(row));
        }
      }
    }
    return static_cast<int>(space.rank());
  };

  CoverResult res;
  res.truncation = truncation;
  res.dimension = rank_at(truncation);
  res.dimension_next = rank_at(truncation + 2);
  res.stabilized = (res.dimension == res.dimension_next);
  return res;
}

}  // namespace ramond
