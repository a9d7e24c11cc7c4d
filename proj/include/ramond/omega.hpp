#pragma once

#include <optional>
#include <string>

#include "ramond/gamma.hpp"

namespace ramond {

/// The two differentiator families:
///   LL: Omega_{k,s}^{(m)}  = sum_i (-1)^i binom(m,i) L_{k-i} L_{s+i}
///   GL: Obar_{k,s}^{(m)}   = sum_i (-1)^i binom(m,i) G_{k-i} L_{s+i}
enum class OmegaVariant { LL, GL };

/// The composite operator as an element of U(sbar).
EnvElement omega_element(int k, int s, int m, OmegaVariant variant);

/// Applies the differentiator to a Gamma vector; the image sits at offset
/// shift k+s from each source term.
GammaVector omega_apply(int k, int s, int m, OmegaVariant variant, const GammaVector& v);

/// Smallest m <= max_m such that the order-m differentiators annihilate
/// Gamma(lambda,b) identically for all k, s, i in [-range, range] and both
/// parities; nullopt when none is found. lambda and b may be symbolic.
std::optional<int> minimal_annihilating_m(const Scalar& lambda, const Scalar& b,
                                          OmegaVariant variant, int range, int max_m);

struct OmegaIdentityRecord {
  bool six_term_equals_three_term = false;
  bool six_term_equals_telescoped = false;
  /// Upper summation limit of the telescoped binom(m+2,·) sum that matches
  /// (m+2 when the identity holds as telescoping predicts).
  int resolved_upper_limit = -1;
  /// Whether truncating the telescoped sum at m instead also matches.
  bool limit_m_also_matches = false;
  std::string residue;  // first nonzero residue, when any check fails
};

/// Verifies, as an identity in U(sbar), that
///   [O_{k,p-1},G_{j+1}] - 2[O_{k,p},G_j] + [O_{k,p+1},G_{j-1}]
///   - [O_{k+1,p-1},G_j] + 2[O_{k+1,p},G_{j-1}] - [O_{k+1,p+1},G_{j-2}]
/// (O = Omega^{(m)}) equals the three-term combination
///   (3/2) sum_i (-1)^i binom(m,i) (G_{k-i+j+1}L_{p+i-1} - 2G_{k-i+j}L_{p+i}
///                                   + G_{k-i+j-1}L_{p+i+1})
/// and the telescoped form (3/2) sum_{i<=limit} (-1)^i binom(m+2,i)
/// G_{k-i+j+1} L_{p+i-1}, recording which upper limit works.
OmegaIdentityRecord omega_bracket_identity(int m, int j, int k, int p);

}  // namespace ramond
