#include "ramond/parser.hpp"

#include <cctype>

namespace ramond {

namespace {

class Parser {
public:
  Parser(const std::string& text, bool allow_vectors)
      : text_(text), allow_vectors_(allow_vectors) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr expr() {
    bool negate = eat('-');
    Expr lhs = term();
    if (negate) {
      Expr n{Expr::Kind::Neg};
      n.children.push_back(std::move(lhs));
      lhs = std::move(n);
    }
    for (;;) {
      skip_ws();
      if (eat('+')) {
        Expr node{Expr::Kind::Sum};
        node.children.push_back(std::move(lhs));
        node.children.push_back(term());
        lhs = std::move(node);
      } else if (eat('-')) {
        Expr node{Expr::Kind::Diff};
        node.children.push_back(std::move(lhs));
        node.children.push_back(term());
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (eat('*')) {
      Expr node{Expr::Kind::Product};
      node.children.push_back(std::move(lhs));
      node.children.push_back(factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (eat('^')) {
      long long p = integer(false);
      if (p < 1) fail("exponent must be positive");
      Expr out = base;
      for (long long i = 1; i < p; ++i) {
        Expr node{Expr::Kind::Product};
        node.children.push_back(std::move(out));
        node.children.push_back(base);
        out = std::move(node);
      }
      return out;
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '[') {
      ++pos_;
      Expr node{Expr::Kind::Bracket};
      node.children.push_back(expr());
      if (!eat(',')) fail("expected ',' in bracket");
      node.children.push_back(expr());
      if (!eat(']')) fail("expected ']'");
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr rational() {
    long long n = integer(true);
    if (eat('/')) {
      long long d = integer(false);
      if (d <= 0) fail("denominator must be positive");
      return Expr::num(Rational::of(n, d));
    }
    return Expr::num(Rational(n));
  }

  long long integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000000LL) fail("integer literal too large");
      ++pos_;
    }
    (void)start;
    return neg ? -value : value;
  }

  Expr symbol() {
    std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      word += text_[pos_++];

    auto indexed = [&](ExprGen g) {
      if (!eat('(')) fail("expected '(' after " + word);
      Expr e{Expr::Kind::Gen};
      e.gen = g;
      e.index = static_cast<int>(integer(true));
      if ((g == ExprGen::X || g == ExprGen::Y) && e.index == 0)
        fail(word + "(0) is undefined: the index must be nonzero");
      if (!eat(')')) fail("expected ')'");
      return e;
    };

    if (word == "lambda" || word == "b" || word == "c" || word == "h") {
      Expr e{Expr::Kind::Parameter};
      e.parameter = word == "lambda" ? Param::Lambda
                    : word == "b"    ? Param::B
                    : word == "c"    ? Param::C
                                     : Param::H;
      return e;
    }
    if (word == "L") return indexed(ExprGen::L);
    if (word == "G") return indexed(ExprGen::G);
    if (word == "t") return indexed(ExprGen::T);
    if (word == "xit") return indexed(ExprGen::XiT);
    if (word == "X") return indexed(ExprGen::X);
    if (word == "Y") return indexed(ExprGen::Y);
    if (word == "C") {
      Expr e{Expr::Kind::Gen};
      e.gen = ExprGen::C;
      return e;
    }
    if (word == "xi") {
      Expr e{Expr::Kind::Gen};
      e.gen = ExprGen::Xi;
      return e;
    }
    if (allow_vectors_ && word == "e") {
      if (!eat('(')) fail("expected '(' after e");
      Expr e{Expr::Kind::Gen};
      e.gen = ExprGen::E;
      e.index = static_cast<int>(integer(true));
      if (!eat(',')) fail("expected ',' in e(i,r)");
      e.index2 = static_cast<int>(integer(false));
      if (e.index2 != 0 && e.index2 != 1) fail("xi-degree of e(i,r) must be 0 or 1");
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (allow_vectors_ && word == "v") {
      Expr e{Expr::Kind::Gen};
      e.gen = ExprGen::V;
      return e;
    }
    pos_ = start;
    fail("unknown symbol '" + word + "'");
  }

  const std::string& text_;
  bool allow_vectors_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Sum:
    case Expr::Kind::Diff: return 0;
    case Expr::Kind::Neg: return 1;
    case Expr::Kind::Product: return 2;
    default: return 3;
  }
}

void render_into(const Expr& e, std::string& out, int parent_prec) {
  const int prec = precedence(e.kind);
  const bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (e.kind) {
    case Expr::Kind::Number:
      out += e.number.to_string();
      break;
    case Expr::Kind::Parameter:
      out += param_name(e.parameter);
      break;
    case Expr::Kind::Gen:
      switch (e.gen) {
        case ExprGen::L: out += "L(" + std::to_string(e.index) + ")"; break;
        case ExprGen::G: out += "G(" + std::to_string(e.index) + ")"; break;
        case ExprGen::C: out += "C"; break;
        case ExprGen::T: out += "t(" + std::to_string(e.index) + ")"; break;
        case ExprGen::Xi: out += "xi"; break;
        case ExprGen::XiT: out += "xit(" + std::to_string(e.index) + ")"; break;
        case ExprGen::X: out += "X(" + std::to_string(e.index) + ")"; break;
        case ExprGen::Y: out += "Y(" + std::to_string(e.index) + ")"; break;
        case ExprGen::E:
          out += "e(" + std::to_string(e.index) + "," + std::to_string(e.index2) + ")";
          break;
        case ExprGen::V: out += "v"; break;
      }
      break;
    case Expr::Kind::Sum:
      render_into(e.children[0], out, prec);
      out += " + ";
      render_into(e.children[1], out, 2);  // parenthesizes a trailing negation
      break;
    case Expr::Kind::Diff:
      render_into(e.children[0], out, prec);
      out += " - ";
      render_into(e.children[1], out, 2);
      break;
    case Expr::Kind::Product:
      render_into(e.children[0], out, prec);
      out += "*";
      render_into(e.children[1], out, prec + 1);
      break;
    case Expr::Kind::Bracket:
      out += "[";
      render_into(e.children[0], out, 0);
      out += ",";
      render_into(e.children[1], out, 0);
      out += "]";
      break;
    case Expr::Kind::Neg:
      out += "-";
      render_into(e.children[0], out, prec + 1);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

Expr parse(const std::string& text, bool allow_vectors) {
  return Parser(text, allow_vectors).run();
}

std::string render(const Expr& e) {
  std::string out;
  render_into(e, out, 0);
  return out;
}

}  // namespace ramond
