#include "ramond/rational.hpp"

#include <cctype>

namespace ramond {

Rational Rational::from_string(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + text + "'"); };
  if (text.empty()) bad();
  std::size_t slash = text.find('/');
  auto check_int = [&](std::size_t from, std::size_t to, bool allow_sign) {
    if (from >= to) bad();
    std::size_t i = from;
    if (allow_sign && (text[i] == '-' || text[i] == '+')) ++i;
    if (i >= to) bad();
    for (; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad();
  };
  if (slash == std::string::npos) {
    check_int(0, text.size(), true);
    return Rational(BigInt(text));
  }
  check_int(0, slash, true);
  check_int(slash + 1, text.size(), false);
  BigInt den(text.substr(slash + 1));
  if (den == 0) bad();
  return Rational(BigInt(text.substr(0, slash)), den);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return Rational(r);
}

}  // namespace ramond
