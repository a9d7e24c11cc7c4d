// Acceptance suite: runs every gate criterion at its stated bound and prints
// one pass/fail line per criterion. Exit status is the number of failures.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ramond/cover.hpp"
#include "ramond/eval.hpp"
#include "ramond/omega.hpp"
#include "ramond/suites.hpp"
#include "ramond/verma.hpp"

using namespace ramond;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

bool suite_passes(const std::string& name, int bound, std::string* detail = nullptr) {
  Report r = run_suite(name, bound);
  if (detail) {
    std::ostringstream os;
    os << r.checks.size() << " checks";
    for (const auto& c : r.checks)
      if (!c.pass) os << "; FAILED " << c.id << ": " << c.residue;
    *detail = os.str();
  }
  return r.all_pass();
}

// -- criterion 10 helpers -----------------------------------------------------

Expr random_expr(std::mt19937& rng, int depth, bool allow_neg = true) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
  std::uniform_int_distribution<int> idx(-9, 9);
  std::uniform_int_distribution<int> small(1, 12);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> den(1, 7);
      return Expr::num(Rational::of(idx(rng), den(rng)));
    }
    case 1: {
      Expr e{Expr::Kind::Parameter};
      e.parameter = static_cast<Param>(small(rng) % 4);
      return e;
    }
    case 2: {
      Expr e{Expr::Kind::Gen};
      switch (small(rng) % 8) {
        case 0: e.gen = ExprGen::L; e.index = idx(rng); break;
        case 1: e.gen = ExprGen::G; e.index = idx(rng); break;
        case 2: e.gen = ExprGen::C; break;
        case 3: e.gen = ExprGen::T; e.index = idx(rng); break;
        case 4: e.gen = ExprGen::Xi; break;
        case 5: e.gen = ExprGen::XiT; e.index = idx(rng); break;
        case 6: {
          int n = idx(rng);
          e.gen = ExprGen::X;
          e.index = n == 0 ? 1 : n;
          break;
        }
        default: {
          int n = idx(rng);
          e.gen = ExprGen::Y;
          e.index = n == 0 ? -2 : n;
          break;
        }
      }
      return e;
    }
    case 3:
    case 4: {
      Expr e{pick(rng) % 2 ? Expr::Kind::Sum : Expr::Kind::Diff};
      e.children.push_back(random_expr(rng, depth - 1));
      e.children.push_back(random_expr(rng, depth - 1, false));
      return e;
    }
    case 5: {
      Expr e{Expr::Kind::Product};
      e.children.push_back(random_expr(rng, depth - 1, false));
      e.children.push_back(random_expr(rng, depth - 1, false));
      return e;
    }
    default: {
      if (allow_neg && small(rng) % 3 == 0) {
        Expr e{Expr::Kind::Neg};
        e.children.push_back(random_expr(rng, depth - 1, false));
        return e;
      }
      Expr e{Expr::Kind::Bracket};
      e.children.push_back(random_expr(rng, depth - 1));
      e.children.push_back(random_expr(rng, depth - 1));
      return e;
    }
  }
}

int run_cli(const std::string& cli, const std::string& args, const std::string& out_file) {
  std::string cmd = cli + " " + args + " > " + out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string canonical_file(const std::string& path) {
  std::ifstream in(path);
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return "<unparseable>";
  j.erase("timing_ms");
  return j.dump(2);
}

}  // namespace

int main() {
  report(1, "super-Jacobi suite (s, sbar, stilde; indices in [-4,4]; exact zero residues)",
         suite_passes("jacobi", 4));

  report(2, "(t-1)-filtration closed forms (k,l <= 3; |i|,|j| <= 4; all three kinds)",
         suite_passes("subalg", 4));

  {
    bool twist_ok = suite_passes("twist", 4);
    bool iota_ok = suite_passes("iota", 4);
    report(3, "twist centralizer, closed brackets, and preimage witnesses (|m|,|n| <= 4)",
           twist_ok && iota_ok);
  }

  report(4, "Gamma module axiom and factored action, fully symbolic (|m|,|n|,|i| <= 4)",
         suite_passes("gamma", 4));

  {
    auto ll = minimal_annihilating_m(Scalar::param(Param::Lambda), Scalar::param(Param::B),
                                     OmegaVariant::LL, 2, 6);
    auto gl = minimal_annihilating_m(Scalar::param(Param::Lambda), Scalar::param(Param::B),
                                     OmegaVariant::GL, 2, 6);
    bool finite = ll.has_value() && gl.has_value();
    bool annihilate = suite_passes("omega", 6);
    std::string detail = finite ? "m* = " + std::to_string(*ll) + " (LL), " +
                                      std::to_string(*gl) + " (GL); orders m*..m*+2 annihilate"
                                : "no finite order found";
    report(5, "differentiators: finite minimal order <= 6, symbolic parameters", finite && annihilate,
           detail);
  }

  {
    bool ok = suite_passes("identity", 2);
    bool limits_ok = true;
    for (int m = 0; m <= 2; ++m)
      for (const auto& [j, k, p] : {std::array<int, 3>{0, 0, 0}, {1, 0, -1}, {0, 2, 1}}) {
        OmegaIdentityRecord rec = omega_bracket_identity(m, j, k, p);
        if (rec.resolved_upper_limit != m + 2 || rec.limit_m_also_matches) limits_ok = false;
      }
    report(6, "differentiator bracket identity, m <= 2 at three sample points", ok && limits_ok,
           "upper summation limit resolves to m+2, never m");
  }

  {
    SubmoduleReport zero = submodule_search(Rational(0), Rational(0), Window(-8, 8), 2);
    bool zero_ok = zero.stable && zero.any_proper();
    bool line_ok = false;
    for (const auto& s : zero.seeds)
      if (s.offset == 0 && s.xi_degree == 0 && s.proper && s.closure_dim == 1 &&
          s.spanning.size() == 1 && s.spanning[0] == "e(0,0)")
        line_ok = true;
    SubmoduleReport generic =
        submodule_search(Rational::of(1, 2), Rational::of(1, 3), Window(-8, 8), 2);
    bool generic_ok = !generic.any_proper() && generic.stable;
    report(7, "submodule search: e(0,0) line at lambda=b=0; none at (1/2,1/3) on [-8,8]",
           zero_ok && line_ok && generic_ok);
  }

  {
    // Independent oracle: dim(n) = 2 sum_j p(j) q(n-j) with p, q computed by
    // partition recurrences, against the library's direct PBW enumeration.
    const int N = 8;
    std::vector<long long> p(N + 1, 0), q(N + 1, 0);
    p[0] = q[0] = 1;
    for (int part = 1; part <= N; ++part)
      for (int n = part; n <= N; ++n) p[n] += p[n - part];
    for (int part = 1; part <= N; ++part)
      for (int n = N; n >= part; --n) q[n] += q[n - part];
    std::vector<long long> expected;
    for (int n = 0; n <= N; ++n) {
      long long d = 0;
      for (int j = 0; j <= n; ++j) d += 2 * p[j] * q[n - j];
      expected.push_back(d);
    }
    auto dims = verma_weight_dims(Scalar::param(Param::H), Scalar::param(Param::C), N);
    bool dims_ok = dims == expected &&
                   dims == std::vector<long long>{2, 4, 8, 16, 28, 48, 80, 128, 200};

    VermaVector v = VermaVector::highest_weight();
    bool ann_ok = true;
    for (int i = 1; i <= 6; ++i)
      ann_ok = ann_ok && verma_act(Generator::L(i), v).is_zero() &&
               verma_act(Generator::G(i), v).is_zero();
    VermaVector g0sq = verma_act(Generator::G(0), verma_act(Generator::G(0), v));
    Scalar want = -Scalar::param(Param::H) - Scalar(Rational::of(1, 24)) * Scalar::param(Param::C);
    bool g0_ok = g0sq == want * v;
    report(8, "Verma: dims(depth<=8) match the enumeration oracle; s^+ v = 0; G0^2 = -h - c/24",
           dims_ok && ann_ok && g0_ok);
  }

  report(9, "A-cover weight dimensions stabilize at truncation K <= 12 (four sample points)",
         suite_passes("cover", 12));

  {
    // parser round-trip over a 200-expression corpus
    std::mt19937 rng(20250809);
    bool roundtrip = true;
    for (int i = 0; i < 200; ++i) {
      Expr ast = random_expr(rng, 3);
      std::string first = render(ast);
      if (render(parse(first)) != first) roundtrip = false;
    }

    // deterministic JSON, in-process
    bool deterministic =
        run_suite("identity", 2).canonical_json().dump() ==
        run_suite("identity", 2).canonical_json().dump();

    // end-to-end: byte-identical canonical reports and the exit-code contract
    bool cli_ok = true;
    std::string detail;
    const char* cli_env = std::getenv("RAMOND_CLI");
    if (!cli_env) {
      cli_ok = false;
      detail = "RAMOND_CLI not set";
    } else {
      std::string cli(cli_env);
      int rc1 = run_cli(cli, "verify --suite identity --bound 2", "/tmp/ramond_acc_1.json");
      int rc2 = run_cli(cli, "verify --suite identity --bound 2", "/tmp/ramond_acc_2.json");
      cli_ok = rc1 == 0 && rc2 == 0 &&
               canonical_file("/tmp/ramond_acc_1.json") == canonical_file("/tmp/ramond_acc_2.json") &&
               canonical_file("/tmp/ramond_acc_1.json") != "<unparseable>";
      int rc_bad = run_cli(cli, "verify --suite no-such-suite", "/tmp/ramond_acc_3.json");
      if (rc_bad == 0) cli_ok = false;
      if (!cli_ok) detail = "cli exit codes or reports diverged";
    }
    report(10, "CLI: 200-expression parser round-trip, deterministic JSON, exit-code contract",
           roundtrip && deterministic && cli_ok, detail);
  }

  std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures);
  return failures;
}
