#pragma once

#include <string>
#include <vector>

#include "ramond/env.hpp"

namespace ramond {

enum class TwistKind { X, Y };

/// One of the elements X_m = t^-m·L_m + (m/2) t^-m xi·G_m - L_0 or
/// Y_m = t^-m·G_m - 2 t^-m xi·L_m - G_0 + 2 xi·L_0 of Ubar, m != 0.
struct TwistElement {
  TwistKind kind;
  int m;
  EnvElement realization;
};

TwistElement make_twist(TwistKind kind, int m);

/// Formal X_m / Y_m with the convention X_0 = Y_0 = 0 used by the closed
/// bracket forms.
EnvElement twist_or_zero(TwistKind kind, int m);

/// One verification step: name, pass flag, and the residue that should have
/// been zero (kept whole for debugging straightening failures).
struct TwistCheck {
  std::string name;
  bool pass;
  EnvElement residue;
};

struct TwistRecord {
  bool all_pass = true;
  std::vector<TwistCheck> checks;

  void record(std::string name, const EnvElement& residue) {
    bool ok = residue.is_zero();
    all_pass = all_pass && ok;
    checks.push_back({std::move(name), ok, residue});
  }
};

/// Supercommutators of X_m and Y_m with each probe (A-generators and G(0))
/// must vanish in Ubar.
TwistRecord verify_centralizer(int m, const std::vector<Generator>& probes);

/// The closed forms
///   [X_m,X_n] = -n X_n + m X_m + (n-m) X_{m+n}
///   [X_m,Y_n] = -n Y_n + (m/2) Y_m + (n - m/2) Y_{m+n}
///   [Y_m,Y_n] = 2 (X_n + X_m - X_{n+m})
/// checked in Ubar, with X_0 = Y_0 = 0 when m + n = 0. Also checks the
/// partial-bracket form [P_m,P_n] = 2(X_n + X_m - X_{m+n} + L_0) with
/// P_m = t^-m·G_m - 2 t^-m xi·L_m, recording which variant holds.
TwistRecord verify_twist_brackets(int m, int n);

/// The preimage witnesses
///   t^m·X_m - (m/2) t^m xi·Y_m + t^m·L_0 - (m/2) t^m xi·G_0 = L_m
///   t^m·Y_m + 2 t^m xi·X_m + t^m·G_0 = G_m
/// in Ubar; for m = 0 both degenerate to tautologies.
TwistRecord verify_iota_witness(int m);

/// X_m -> L_m - L_0, Y_m -> G_m - G_0 into (t-1)sbar.
LieElement phi_image(const TwistElement& e);

}  // namespace ramond
