#include "ramond/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "ramond/cover.hpp"
#include "ramond/omega.hpp"
#include "ramond/twist.hpp"
#include "ramond/verma.hpp"

namespace ramond {

namespace {

struct Check {
  std::string id;
  Json inputs;
  std::function<std::pair<bool, std::string>()> fn;
};

// Accumulates sweep failures; keeps the first few residues readable.
struct Failures {
  long long total = 0;
  std::string detail;

  void note(const std::string& what, const std::string& residue) {
    ++total;
    if (total <= 3) {
      if (!detail.empty()) detail += "; ";
      detail += what + " -> " + residue;
    }
  }
  std::pair<bool, std::string> result() const {
    if (total == 0) return {true, ""};
    return {false, std::to_string(total) + " failure(s): " + detail};
  }
};

std::vector<Generator> flavor_generators(Flavor f, int bound) {
  std::vector<Generator> gens;
  if (f == Flavor::S) gens.push_back(Generator::C());
  for (int n = -bound; n <= bound; ++n) {
    if (f == Flavor::Stilde) {
      gens.push_back(Generator::T(n));
      gens.push_back(Generator::XiT(n));
    }
    gens.push_back(Generator::L(n));
    gens.push_back(Generator::G(n));
  }
  return gens;
}

// --- jacobi ---------------------------------------------------------------

void build_jacobi(std::vector<Check>& checks, int bound) {
  for (Flavor f : {Flavor::S, Flavor::Sbar, Flavor::Stilde}) {
    checks.push_back(
        {std::string("jacobi.skew.") + flavor_name(f),
         Json{{"flavor", flavor_name(f)}, {"index_bound", bound}}, [f, bound] {
           Failures fails;
           auto gens = flavor_generators(f, bound);
           for (const auto& a : gens)
             for (const auto& b : gens) {
               LieElement x = LieElement::single(f, a), y = LieElement::single(f, b);
               LieElement r = bracket(x, y);
               Scalar sign((a.odd() && b.odd()) ? -1 : 1);
               r += sign * bracket(y, x);
               if (!r.is_zero())
                 fails.note("[" + a.text() + "," + b.text() + "]", r.to_string());
             }
           return fails.result();
         }});
    checks.push_back(
        {std::string("jacobi.triples.") + flavor_name(f),
         Json{{"flavor", flavor_name(f)}, {"index_bound", bound}}, [f, bound] {
           Failures fails;
           auto gens = flavor_generators(f, bound);
           for (const auto& a : gens)
             for (const auto& b : gens)
               for (const auto& c : gens) {
                 LieElement r = super_jacobi(LieElement::single(f, a), LieElement::single(f, b),
                                             LieElement::single(f, c));
                 if (!r.is_zero())
                   fails.note("(" + a.text() + "," + b.text() + "," + c.text() + ")",
                              r.to_string());
               }
           return fails.result();
         }});
  }
  checks.push_back(
      {"jacobi.stilde_compatibility", Json{{"index_bound", bound}}, [bound] {
         // The displayed identities: the adjoint action of sbar and the
         // A-action on sbar assemble into an stilde-module structure.
         Failures fails;
         for (GenTag xt : {GenTag::L, GenTag::G})
           for (int m = -bound; m <= bound; ++m)
             for (GenTag at : {GenTag::T, GenTag::XiT})
               for (int i = -bound; i <= bound; ++i)
                 for (GenTag zt : {GenTag::L, GenTag::G})
                   for (int n = -bound; n <= bound; ++n) {
                     LieElement r = sbar_module_axiom({xt, m}, {at, i}, {zt, n});
                     if (!r.is_zero())
                       fails.note("(" + Generator{xt, m}.text() + "," + Generator{at, i}.text() +
                                      "," + Generator{zt, n}.text() + ")",
                                  r.to_string());
                   }
         return fails.result();
       }});
}

// --- subalg ----------------------------------------------------------------

void build_subalg(std::vector<Check>& checks, int bound) {
  const int kl_max = 3;
  for (auto [kind, name] : {std::pair{RelKind::LL, "LL"}, {RelKind::LG, "LG"},
                            {RelKind::GG, "GG"}}) {
    checks.push_back(
        {std::string("subalg.rel.") + name,
         Json{{"kind", name}, {"kl_max", kl_max}, {"index_bound", bound}},
         [kind, bound, kl_max] {
           Failures fails;
           for (int k = 0; k <= kl_max; ++k)
             for (int l = 0; l <= kl_max; ++l)
               for (int i = -bound; i <= bound; ++i)
                 for (int j = -bound; j <= bound; ++j) {
                   RelSubalgCheck r = verify_rel_subalg(k, l, i, j, kind);
                   if (!r.equal)
                     fails.note("k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                                    ",i=" + std::to_string(i) + ",j=" + std::to_string(j),
                                r.difference.to_string());
                 }
           return fails.result();
         }});
  }
  checks.push_back({"subalg.ideal_closure", Json{{"k_max", 3}, {"index_bound", bound}}, [bound] {
                      Failures fails;
                      for (int k = 1; k <= 3; ++k)
                        for (GenTag ta : {GenTag::L, GenTag::G})
                          for (GenTag tb : {GenTag::L, GenTag::G})
                            for (int i = -bound; i <= bound; ++i)
                              for (int j = -bound; j <= bound; ++j) {
                                LieElement x = tminus1_expand(1, {ta, i});
                                LieElement y = tminus1_expand(k, {tb, j});
                                if (!in_ak(bracket(x, y), k))
                                  fails.note("[(t-1)" + Generator{ta, i}.text() + ",(t-1)^" +
                                                 std::to_string(k) + Generator{tb, j}.text() + "]",
                                             "escapes a_" + std::to_string(k));
                              }
                      return fails.result();
                    }});
  checks.push_back(
      {"subalg.class_homomorphism", Json{{"index_bound", bound}}, [bound] {
         Failures fails;
         for (GenTag ta : {GenTag::L, GenTag::G})
           for (GenTag tb : {GenTag::L, GenTag::G})
             for (int i = -bound; i <= bound; ++i)
               for (int j = -bound; j <= bound; ++j) {
                 LieElement x = tminus1_expand(1, {ta, i});
                 LieElement y = tminus1_expand(1, {tb, j});
                 A1Class lhs = a1_mod_a2_class(bracket(x, y));
                 A1Class rhs = a1_class_bracket(a1_mod_a2_class(x), a1_mod_a2_class(y));
                 if (!(lhs.x == rhs.x && lhs.y == rhs.y))
                   fails.note("class[(t-1)" + Generator{ta, i}.text() + ",(t-1)" +
                                  Generator{tb, j}.text() + "]",
                              "(" + (lhs.x - rhs.x).to_string() + "," +
                                  (lhs.y - rhs.y).to_string() + ")");
               }
         return fails.result();
       }});
}

// --- twist -----------------------------------------------------------------

std::pair<bool, std::string> record_to_result(const TwistRecord& rec) {
  if (rec.all_pass) return {true, ""};
  Failures fails;
  for (const auto& c : rec.checks)
    if (!c.pass) fails.note(c.name, c.residue.to_string());
  return fails.result();
}

void build_twist(std::vector<Check>& checks, int bound) {
  checks.push_back({"twist.centralizer", Json{{"index_bound", bound}}, [bound] {
                      Failures fails;
                      std::vector<Generator> probes;
                      for (int n = -bound; n <= bound; ++n) {
                        probes.push_back(Generator::T(n));
                        probes.push_back(Generator::XiT(n));
                      }
                      probes.push_back(Generator::G(0));
                      for (int m = -bound; m <= bound; ++m) {
                        if (m == 0) continue;
                        TwistRecord rec = verify_centralizer(m, probes);
                        for (const auto& c : rec.checks)
                          if (!c.pass) fails.note(c.name, c.residue.to_string());
                      }
                      return fails.result();
                    }});
  checks.push_back({"twist.brackets", Json{{"index_bound", bound}}, [bound] {
                      Failures fails;
                      for (int m = -bound; m <= bound; ++m)
                        for (int n = -bound; n <= bound; ++n) {
                          if (m == 0 || n == 0) continue;
                          TwistRecord rec = verify_twist_brackets(m, n);
                          for (const auto& c : rec.checks)
                            if (!c.pass) fails.note(c.name, c.residue.to_string());
                        }
                      return fails.result();
                    }});
  checks.push_back(
      {"twist.phi_homomorphism", Json{{"index_bound", bound}}, [bound] {
         Failures fails;
         auto phi_x = [](int m) {
           LieElement e(Flavor::Sbar);
           if (m != 0) {
             e.add(Generator::L(m), Scalar(1));
             e.add(Generator::L(0), Scalar(-1));
           }
           return e;
         };
         auto phi_y = [](int m) {
           LieElement e(Flavor::Sbar);
           if (m != 0) {
             e.add(Generator::G(m), Scalar(1));
             e.add(Generator::G(0), Scalar(-1));
           }
           return e;
         };
         for (int m = -bound; m <= bound; ++m)
           for (int n = -bound; n <= bound; ++n) {
             if (m == 0 || n == 0) continue;
             {
               LieElement want = Scalar(Rational(-n)) * phi_x(n) + Scalar(Rational(m)) * phi_x(m) +
                                 Scalar(Rational(n - m)) * phi_x(m + n);
               LieElement got = bracket(phi_x(m), phi_x(n));
               if (!(got == want))
                 fails.note("phi[X,X] m=" + std::to_string(m) + ",n=" + std::to_string(n),
                            (got - want).to_string());
             }
             {
               LieElement want = Scalar(Rational(-n)) * phi_y(n) +
                                 Scalar(Rational(m, 2)) * phi_y(m) +
                                 (Scalar(Rational(n)) - Scalar(Rational(m, 2))) * phi_y(m + n);
               LieElement got = bracket(phi_x(m), phi_y(n));
               if (!(got == want))
                 fails.note("phi[X,Y] m=" + std::to_string(m) + ",n=" + std::to_string(n),
                            (got - want).to_string());
             }
             {
               LieElement want =
                   Scalar(2) * (phi_x(n) + phi_x(m) - phi_x(m + n));
               LieElement got = bracket(phi_y(m), phi_y(n));
               if (!(got == want))
                 fails.note("phi[Y,Y] m=" + std::to_string(m) + ",n=" + std::to_string(n),
                            (got - want).to_string());
             }
           }
         return fails.result();
       }});
}

// --- iota ------------------------------------------------------------------

void build_iota(std::vector<Check>& checks, int bound) {
  checks.push_back({"iota.preimages", Json{{"index_bound", bound}}, [bound] {
                      Failures fails;
                      for (int m = -bound; m <= bound; ++m) {
                        TwistRecord rec = verify_iota_witness(m);
                        for (const auto& c : rec.checks)
                          if (!c.pass) fails.note(c.name, c.residue.to_string());
                      }
                      return fails.result();
                    }});
}

// --- gamma -----------------------------------------------------------------

void build_gamma(std::vector<Check>& checks, int bound) {
  checks.push_back(
      {"gamma.module_axiom", Json{{"index_bound", bound}, {"parameters", "symbolic"}}, [bound] {
         Failures fails;
         auto gens = flavor_generators(Flavor::Stilde, bound);
         for (const auto& a : gens)
           for (const auto& b : gens)
             for (int i = -bound; i <= bound; ++i)
               for (int r = 0; r < 2; ++r) {
                 GammaVector res =
                     check_module_axiom(LieElement::single(Flavor::Stilde, a),
                                        LieElement::single(Flavor::Stilde, b),
                                        GammaVector::basis(i, r));
                 if (!res.is_zero())
                   fails.note("(" + a.text() + "," + b.text() + ") on e(" + std::to_string(i) +
                                  "," + std::to_string(r) + ")",
                              res.to_string());
               }
         return fails.result();
       }});
  checks.push_back(
      {"gamma.a_associativity", Json{{"index_bound", bound}}, [bound] {
         // A acts associatively: t^i (t^j v) = t^{i+j} v and xi-type
         // products collapse accordingly.
         Failures fails;
         for (int i = -bound; i <= bound; ++i)
           for (int j = -bound; j <= bound; ++j)
             for (int off = -bound; off <= bound; ++off)
               for (int r = 0; r < 2; ++r) {
                 GammaVector v = GammaVector::basis(off, r);
                 GammaVector tt = gamma_act(Generator::T(i), gamma_act(Generator::T(j), v)) -
                                  gamma_act(Generator::T(i + j), v);
                 if (!tt.is_zero()) fails.note("t*t assoc", tt.to_string());
                 GammaVector tx = gamma_act(Generator::T(i), gamma_act(Generator::XiT(j), v)) -
                                  gamma_act(Generator::XiT(i + j), v);
                 if (!tx.is_zero()) fails.note("t*xit assoc", tx.to_string());
                 GammaVector xx = gamma_act(Generator::XiT(i), gamma_act(Generator::XiT(j), v));
                 if (!xx.is_zero()) fails.note("xit*xit", xx.to_string());
               }
         return fails.result();
       }});
  checks.push_back(
      {"gamma.factored_consistency", Json{{"index_bound", bound}, {"parameters", "symbolic"}},
       [bound] {
         Failures fails;
         for (GenTag tag : {GenTag::L, GenTag::G, GenTag::T, GenTag::XiT})
           for (int m = -bound; m <= bound; ++m)
             for (int i = -bound; i <= bound; ++i)
               for (int r = 0; r < 2; ++r) {
                 GammaVector v = GammaVector::basis(i, r);
                 GammaVector diff = gamma_act(Generator{tag, m}, v) -
                                    gamma_act_factored(Generator{tag, m}, v);
                 if (!diff.is_zero())
                   fails.note(Generator{tag, m}.text() + " on e(" + std::to_string(i) + "," +
                                  std::to_string(r) + ")",
                              diff.to_string());
               }
         return fails.result();
       }});
  checks.push_back(
      {"gamma.weyl_compatibility", Json{{"index_bound", bound}}, [bound] {
         Failures fails;
         for (int j = -bound; j <= bound; ++j)
           for (int i = -bound; i <= bound; ++i)
             for (int r = 0; r < 2; ++r) {
               GammaVector v = GammaVector::basis(i, r);
               GammaVector dt = weyl_act(WeylGen::T, j, v) - gamma_act(Generator::T(j), v);
               if (!dt.is_zero()) fails.note("t(" + std::to_string(j) + ")", dt.to_string());
               GammaVector dx = weyl_act(WeylGen::Xi, 0, v) - gamma_act(Generator::Xi(), v);
               if (!dx.is_zero()) fails.note("xi", dx.to_string());
             }
         return fails.result();
       }});
}

// --- omega -----------------------------------------------------------------

void build_omega(std::vector<Check>& checks, int max_m) {
  const int range = 2;
  for (auto [variant, name] : {std::pair{OmegaVariant::LL, "LL"}, {OmegaVariant::GL, "GL"}}) {
    checks.push_back(
        {std::string("omega.min_m.") + name,
         Json{{"variant", name}, {"max_m", max_m}, {"range", range}, {"parameters", "symbolic"}},
         [variant, max_m, range] {
           auto m = minimal_annihilating_m(Scalar::param(Param::Lambda), Scalar::param(Param::B),
                                           variant, range, max_m);
           if (!m) return std::pair<bool, std::string>{false, "no m <= " + std::to_string(max_m)};
           return std::pair<bool, std::string>{true, "m* = " + std::to_string(*m)};
         }});
    checks.push_back(
        {std::string("omega.annihilation.") + name,
         Json{{"variant", name}, {"range", range}, {"orders", "m*..m*+2"}},
         [variant, max_m, range] {
           auto mstar = minimal_annihilating_m(Scalar::param(Param::Lambda),
                                               Scalar::param(Param::B), variant, range, max_m);
           if (!mstar)
             return std::pair<bool, std::string>{false, "no m <= " + std::to_string(max_m)};
           Failures fails;
           for (int m = *mstar; m <= *mstar + 2; ++m)
             for (int k = -range; k <= range; ++k)
               for (int s = -range; s <= range; ++s)
                 for (int i = -range; i <= range; ++i)
                   for (int r = 0; r < 2; ++r) {
                     GammaVector res =
                         omega_apply(k, s, m, variant, GammaVector::basis(i, r));
                     if (!res.is_zero())
                       fails.note("m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                      ",s=" + std::to_string(s),
                                  res.to_string());
                   }
           return fails.result();
         }});
  }
}

// --- identity ---------------------------------------------------------------

void build_identity(std::vector<Check>& checks, int max_m) {
  const std::vector<std::array<int, 3>> samples = {{0, 0, 0}, {1, 0, -1}, {0, 2, 1}};
  for (int m = 0; m <= max_m; ++m) {
    for (const auto& [j, k, p] : samples) {
      checks.push_back(
          {"identity.omega_bracket.m=" + std::to_string(m) + ".j=" + std::to_string(j) +
               ".k=" + std::to_string(k) + ".p=" + std::to_string(p),
           Json{{"m", m}, {"j", j}, {"k", k}, {"p", p}},
           [m, j = j, k = k, p = p]() -> std::pair<bool, std::string> {
             OmegaIdentityRecord rec = omega_bracket_identity(m, j, k, p);
             if (!rec.six_term_equals_three_term || !rec.six_term_equals_telescoped)
               return {false, rec.residue};
             std::string note = "resolved upper limit = " + std::to_string(rec.resolved_upper_limit);
             note += rec.limit_m_also_matches ? " (limit m also matches)"
                                              : " (limit m does not match)";
             return {true, note};
           }});
    }
  }
}

// --- verma -------------------------------------------------------------------

void build_verma(std::vector<Check>& checks, int depth) {
  checks.push_back(
      {"verma.weight_dims", Json{{"depth", depth}}, [depth]() -> std::pair<bool, std::string> {
         // Partition-convolution oracle, independent of the monomial
         // enumeration: dim(n) = 2 * sum_j p(j) q(n-j).
         std::vector<long long> p(depth + 1, 0), q(depth + 1, 0);
         p[0] = q[0] = 1;
         for (int part = 1; part <= depth; ++part)
           for (int n = part; n <= depth; ++n) p[n] += p[n - part];
         for (int part = 1; part <= depth; ++part)
           for (int n = depth; n >= part; --n) q[n] += q[n - part];
         std::vector<long long> expected(depth + 1, 0);
         for (int n = 0; n <= depth; ++n)
           for (int j = 0; j <= n; ++j) expected[n] += 2 * p[j] * q[n - j];
         auto got = verma_weight_dims(Scalar::param(Param::H), Scalar::param(Param::C), depth);
         if (got != expected) {
           std::string detail;
           for (int n = 0; n <= depth; ++n)
             detail += std::to_string(got[n]) + (n < depth ? "," : "");
           return {false, "enumerated dims [" + detail + "] disagree with the convolution oracle"};
         }
         return {true, ""};
       }});
  checks.push_back({"verma.highest_weight_annihilation", Json{{"index_bound", 4}}, [] {
                      Failures fails;
                      VermaVector v = VermaVector::highest_weight();
                      for (int i = 1; i <= 4; ++i) {
                        if (!verma_act(Generator::L(i), v).is_zero())
                          fails.note("L(" + std::to_string(i) + ")v", "nonzero");
                        if (!verma_act(Generator::G(i), v).is_zero())
                          fails.note("G(" + std::to_string(i) + ")v", "nonzero");
                      }
                      return fails.result();
                    }});
  checks.push_back(
      {"verma.g0_squared", Json{{"parameters", "symbolic"}}, []() -> std::pair<bool, std::string> {
         VermaVector v = VermaVector::highest_weight();
         VermaVector got = verma_act(Generator::G(0), verma_act(Generator::G(0), v));
         Scalar want = -Scalar::param(Param::H) - Scalar(Rational(1, 24)) * Scalar::param(Param::C);
         VermaVector diff = got - want * v;
         if (diff.is_zero()) return {true, ""};
         return {false, diff.to_string()};
       }});
  checks.push_back(
      {"verma.l0_eigenvalue", Json{{"depth", std::min(depth, 6)}, {"convention", "h - n"}},
       [depth] {
         Failures fails;
         for (int n = 0; n <= std::min(depth, 6); ++n) {
           Scalar want = Scalar::param(Param::H) - Scalar(n);
           for (const auto& w : verma_basis(n)) {
             VermaVector v = VermaVector::basis(w);
             VermaVector diff = verma_act(Generator::L(0), v) - want * v;
             if (!diff.is_zero()) fails.note(word_text(w), diff.to_string());
           }
         }
         return fails.result();
       }});
}

// --- cover --------------------------------------------------------------------

void build_cover(std::vector<Check>& checks, int max_truncation) {
  const std::vector<std::tuple<Rational, Rational, int>> samples = {
      {Rational::of(1, 2), Rational::of(1, 3), 0},
      {Rational::of(1, 3), Rational(0), 1},
      {Rational::of(-1, 2), Rational(2), 0},
      {Rational::of(1, 5), Rational::of(1, 7), -1},
  };
  for (const auto& [lambda, b, offset] : samples) {
    checks.push_back(
        {"cover.stabilization.lambda=" + lambda.to_string() + ".b=" + b.to_string() +
             ".p=" + std::to_string(offset),
         Json{{"lambda", lambda.to_string()},
              {"b", b.to_string()},
              {"offset", offset},
              {"max_truncation", max_truncation}},
         [lambda = lambda, b = b, offset = offset,
          max_truncation]() -> std::pair<bool, std::string> {
           for (int K = 4; K <= max_truncation; K += 2) {
             CoverResult res = cover_weight_dim(lambda, b, offset, K);
             if (res.stabilized)
               return {true, "dimension " + std::to_string(res.dimension) + " stable at K=" +
                                 std::to_string(K)};
           }
           return {false, "no stabilization up to K=" + std::to_string(max_truncation)};
         }});
  }
}

std::vector<Check> build_suite(const std::string& name, int bound) {
  std::vector<Check> checks;
  auto with_default = [&](int dflt) { return bound > 0 ? bound : dflt; };
  if (name == "jacobi" || name == "all") build_jacobi(checks, with_default(4));
  if (name == "subalg" || name == "all") build_subalg(checks, with_default(4));
  if (name == "twist" || name == "all") build_twist(checks, with_default(4));
  if (name == "iota" || name == "all") build_iota(checks, with_default(4));
  if (name == "gamma" || name == "all") build_gamma(checks, with_default(4));
  if (name == "omega" || name == "all") build_omega(checks, name == "omega" ? with_default(6) : 6);
  if (name == "identity" || name == "all")
    build_identity(checks, name == "identity" ? with_default(2) : 2);
  if (name == "verma" || name == "all") build_verma(checks, name == "verma" ? with_default(8) : 8);
  if (name == "cover" || name == "all")
    build_cover(checks, name == "cover" ? with_default(12) : 12);
  return checks;
}

CheckResult run_check(const Check& check) {
  try {
    auto [pass, detail] = check.fn();
    return {check.id, check.inputs, pass, pass ? "" : detail, pass ? detail : ""};
  } catch (const std::exception& e) {
    return {check.id, check.inputs, false, std::string("exception: ") + e.what(), ""};
  }
}

unsigned thread_cap(unsigned requested) {
  unsigned n = requested == 0 ? 1 : requested;
  if (const char* env = std::getenv("RAMOND_CAS_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    if (requested == 0 && cap >= 1) n = static_cast<unsigned>(cap);
  }
  return n;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"jacobi", "subalg", "twist", "iota", "gamma", "omega", "identity", "verma", "cover",
          "all"};
}

bool is_suite_name(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

Report run_suite(const std::string& name, int bound, unsigned threads) {
  if (!is_suite_name(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  if (bound < 0) throw std::invalid_argument("suite bound must be positive");
  const auto start = std::chrono::steady_clock::now();

  std::vector<Check> checks = build_suite(name, bound);
  std::vector<CheckResult> results(checks.size());

  const unsigned workers = std::min<unsigned>(thread_cap(threads),
                                              static_cast<unsigned>(checks.size()) + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_check(checks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= checks.size()) return;
        results[i] = run_check(checks[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Report report;
  report.suite = name;
  report.bound = bound;
  report.checks = std::move(results);
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ramond
