#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ramond/cover.hpp"
#include "ramond/eval.hpp"
#include "ramond/omega.hpp"
#include "ramond/suites.hpp"

namespace {

using ramond::Json;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << j.dump(2) << "\n";
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = ramond::kSchema;
  j["tool"] = Json{{"name", ramond::kToolName}, {"version", ramond::kToolVersion}};
  j["command"] = command;
  return j;
}

ramond::Rational rat(const std::string& text) { return ramond::Rational::from_string(text); }

std::pair<int, int> parse_window(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--window", "expected LO..HI, e.g. -8..8");
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic computation for the N=1 Ramond superalgebra"};
  app.require_subcommand(1);
  // --h is a real option (the highest weight), so help is --help only.
  app.set_help_flag("--help", "Print this help message and exit");

  // verify
  std::string suite = "all", verify_out;
  int bound = 0;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember(ramond::suite_names()))
      ->capture_default_str();
  verify->add_option("--bound", bound, "Index bound (0 = suite default)");
  verify->add_option("--threads", threads, "Worker threads (capped by RAMOND_CAS_THREADS)");
  verify->add_option("--out", verify_out, "Write the report to a file instead of stdout");

  // act
  std::string expr_text, context = "sbar", vector_text, act_out;
  std::string lambda_text = "", b_text = "", h_text = "", c_text = "";
  auto* act = app.add_subcommand("act", "Evaluate an expression, optionally on a module vector");
  act->set_help_flag("--help", "Print this help message and exit");
  act->add_option("--expr", expr_text, "Expression, e.g. \"[L(2),L(-2)]\"")->required();
  act->add_option("--context", context, "s|sbar|stilde|ubar|module|verma")->capture_default_str();
  act->add_option("--vector", vector_text, "Module vector, e.g. \"e(0,1)\" or \"G(0)*v\"");
  act->add_option("--lambda", lambda_text, "Rational value for lambda (module context)");
  act->add_option("--b", b_text, "Rational value for b (module context)");
  act->add_option("--h", h_text, "Rational value for h (verma context)");
  act->add_option("--c", c_text, "Rational value for c (verma context)");
  act->add_option("--out", act_out, "Write the result to a file instead of stdout");

  // simplicity
  std::string s_lambda, s_b, s_window = "-8..8", s_out;
  int s_depth = 2;
  auto* simplicity =
      app.add_subcommand("simplicity", "Search a support window of Gamma(lambda,b) for proper "
                                       "invariant interior subspaces");
  simplicity->set_help_flag("--help", "Print this help message and exit");
  simplicity->add_option("--lambda", s_lambda, "Rational lambda")->required();
  simplicity->add_option("--b", s_b, "Rational b")->required();
  simplicity->add_option("--window", s_window, "Support window LO..HI")->capture_default_str();
  simplicity->add_option("--depth", s_depth, "Generator index depth")->capture_default_str();
  simplicity->add_option("--out", s_out, "Write the report to a file instead of stdout");

  // omega
  std::string o_variant = "LL", o_lambda, o_b, o_out;
  int o_max_m = 6;
  bool o_find_min = false;
  auto* omega = app.add_subcommand("omega", "Differentiator operators on Gamma(lambda,b)");
  omega->set_help_flag("--help", "Print this help message and exit");
  omega->add_option("--variant", o_variant, "LL or GL")
      ->check(CLI::IsMember({"LL", "GL"}))
      ->capture_default_str();
  omega->add_flag("--find-min-m", o_find_min, "Find the minimal annihilating order");
  omega->add_option("--max-m", o_max_m, "Search bound for m")->capture_default_str();
  omega->add_option("--lambda", o_lambda, "Rational lambda (default: symbolic)");
  omega->add_option("--b", o_b, "Rational b (default: symbolic)");
  omega->add_option("--out", o_out, "Write the result to a file instead of stdout");

  // verma
  std::string v_h = "0", v_c = "0", v_out;
  int v_depth = 8;
  auto* verma = app.add_subcommand("verma", "Verma-module weight-space dimensions");
  verma->set_help_flag("--help", "Print this help message and exit");
  verma->add_option("--h", v_h, "Rational highest weight h")->capture_default_str();
  verma->add_option("--c", v_c, "Rational central charge c")->capture_default_str();
  verma->add_option("--depth", v_depth, "Maximum depth")->capture_default_str();
  verma->add_option("--out", v_out, "Write the result to a file instead of stdout");

  // cover
  std::string cv_lambda, cv_b, cv_out;
  int cv_offset = 0, cv_truncation = 8;
  auto* cover = app.add_subcommand("cover", "Truncated A-cover weight-space dimension");
  cover->set_help_flag("--help", "Print this help message and exit");
  cover->add_option("--lambda", cv_lambda, "Rational lambda")->required();
  cover->add_option("--b", cv_b, "Rational b")->required();
  cover->add_option("--offset", cv_offset, "Support offset p")->capture_default_str();
  cover->add_option("--truncation", cv_truncation, "Truncation K")->capture_default_str();
  cover->add_option("--out", cv_out, "Write the result to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      ramond::Report report = ramond::run_suite(suite, bound, threads);
      emit(report.to_json(), verify_out);
      return report.all_pass() ? 0 : 1;
    }

    if (act->parsed()) {
      ramond::EvalContext ctx = ramond::AlgebraContext{ramond::Flavor::Sbar};
      if (context == "s")
        ctx = ramond::AlgebraContext{ramond::Flavor::S};
      else if (context == "sbar")
        ctx = ramond::AlgebraContext{ramond::Flavor::Sbar};
      else if (context == "stilde")
        ctx = ramond::AlgebraContext{ramond::Flavor::Stilde};
      else if (context == "ubar")
        ctx = ramond::AlgebraContext{ramond::Flavor::Ubar};
      else if (context == "module") {
        ramond::ModuleContext m;
        if (!lambda_text.empty()) m.lambda = ramond::Scalar(rat(lambda_text));
        if (!b_text.empty()) m.b = ramond::Scalar(rat(b_text));
        ctx = m;
      } else if (context == "verma") {
        ramond::VermaContext m;
        if (!h_text.empty()) m.h = ramond::Scalar(rat(h_text));
        if (!c_text.empty()) m.c = ramond::Scalar(rat(c_text));
        ctx = m;
      } else {
        throw CLI::ValidationError("--context", "unknown context '" + context + "'");
      }

      ramond::Expr e = ramond::parse(expr_text);
      std::optional<std::string> vec;
      if (!vector_text.empty()) vec = vector_text;
      ramond::EvalResult result = ramond::eval_expr(e, ctx, vec);

      Json j = header("act");
      j["expr"] = expr_text;
      j["context"] = context;
      if (!vector_text.empty()) j["vector"] = vector_text;
      j["result"] = result.to_string();
      if (result.central_flagged)
        j["flags"] = Json::array({"C acts as zero on Gamma(lambda,b)"});
      emit(j, act_out);
      return 0;
    }

    if (simplicity->parsed()) {
      auto [lo, hi] = parse_window(s_window);
      ramond::SubmoduleReport rep =
          ramond::submodule_search(rat(s_lambda), rat(s_b), ramond::Window(lo, hi), s_depth);
      Json j = header("simplicity");
      j["lambda"] = rat(s_lambda).to_string();
      j["b"] = rat(s_b).to_string();
      j["window"] = Json{{"lo", lo}, {"hi", hi}};
      j["depth"] = s_depth;
      j["interior"] = Json{{"lo", rep.interior_lo}, {"hi", rep.interior_hi},
                           {"dim", rep.interior_dim}};
      Json seeds = Json::array();
      for (const auto& s : rep.seeds) {
        Json js;
        js["seed"] = "e(" + std::to_string(s.offset) + "," + std::to_string(s.xi_degree) + ")";
        js["closure_dim"] = s.closure_dim;
        js["proper"] = s.proper;
        if (s.proper) js["spanning"] = s.spanning;
        seeds.push_back(std::move(js));
      }
      j["seeds"] = std::move(seeds);
      j["proper_submodule_found"] = rep.any_proper();
      j["stable"] = rep.stable;
      emit(j, s_out);
      return 0;
    }

    if (omega->parsed()) {
      ramond::OmegaVariant variant =
          o_variant == "LL" ? ramond::OmegaVariant::LL : ramond::OmegaVariant::GL;
      ramond::Scalar lambda = ramond::Scalar::param(ramond::Param::Lambda);
      ramond::Scalar b = ramond::Scalar::param(ramond::Param::B);
      if (!o_lambda.empty()) lambda = ramond::Scalar(rat(o_lambda));
      if (!o_b.empty()) b = ramond::Scalar(rat(o_b));
      Json j = header("omega");
      j["variant"] = o_variant;
      j["lambda"] = o_lambda.empty() ? "symbolic" : rat(o_lambda).to_string();
      j["b"] = o_b.empty() ? "symbolic" : rat(o_b).to_string();
      j["max_m"] = o_max_m;
      auto m = ramond::minimal_annihilating_m(lambda, b, variant, 2, o_max_m);
      if (m)
        j["minimal_m"] = *m;
      else
        j["minimal_m"] = nullptr;
      emit(j, o_out);
      return m ? 0 : 1;
    }

    if (verma->parsed()) {
      auto dims = ramond::verma_weight_dims(ramond::Scalar(rat(v_h)), ramond::Scalar(rat(v_c)),
                                            v_depth);
      Json j = header("verma");
      j["h"] = rat(v_h).to_string();
      j["c"] = rat(v_c).to_string();
      j["depth"] = v_depth;
      j["weight_dims"] = dims;
      emit(j, v_out);
      return 0;
    }

    if (cover->parsed()) {
      ramond::CoverResult res =
          ramond::cover_weight_dim(rat(cv_lambda), rat(cv_b), cv_offset, cv_truncation);
      Json j = header("cover");
      j["lambda"] = rat(cv_lambda).to_string();
      j["b"] = rat(cv_b).to_string();
      j["offset"] = cv_offset;
      j["truncation"] = res.truncation;
      j["dimension"] = res.dimension;
      j["dimension_at_K_plus_2"] = res.dimension_next;
      j["stabilized"] = res.stabilized;
      emit(j, cv_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
