#pragma once

#include <string>
#include <vector>

#include "ramond/linalg.hpp"
#include "ramond/window.hpp"

namespace ramond {

struct SubmoduleSeed {
  int offset;
  int xi_degree;
  /// Dimension of the closure of the seed under the restricted action.
  int closure_dim;
  bool proper;
  /// Spanning vectors of the closure, rendered, when proper.
  std::vector<std::string> spanning;
};

struct SubmoduleReport {
  Rational lambda, b;
  Window window;
  int depth;
  int interior_lo, interior_hi;
  int interior_dim;
  std::vector<SubmoduleSeed> seeds;
  /// True when re-running on the window grown by `depth` reproduces the
  /// closure dimensions of every interior seed (projected to the original
  /// interior). A window heuristic, not a proof of simplicity.
  bool stable;
  bool any_proper() const {
    for (const auto& s : seeds)
      if (s.proper) return true;
    return false;
  }
};

/// For each basis vector seeded in the interior [lo+d, hi-d], computes the
/// span of its images under words in {L_m, G_m : |m| <= d} restricted to the
/// interior, iterating to a fixpoint by exact row reduction, and reports
/// every proper invariant interior subspace found.
SubmoduleReport submodule_search(const Rational& lambda, const Rational& b, const Window& w,
                                 int depth);

struct CoverResult {
  int truncation;
  int dimension;        ///< quotient dimension at this truncation
  int dimension_next;   ///< at truncation K+2
  bool stabilized;      ///< dimension == dimension_next
};

/// Truncated weight-space dimension of the A-cover of Gamma(lambda,b) at
/// the given support offset: the spanning set {L_{p-k} ⊗ e(k,r),
/// G_{p-k} ⊗ e(k,r) : |k| <= K} modulo the truncated K(M) computed as the
/// kernel of the A-evaluation map over {t^j, t^j xi : |j| <= 2K}.
CoverResult cover_weight_dim(const Rational& lambda, const Rational& b, int offset,
                             int truncation);

}  // namespace ramond
