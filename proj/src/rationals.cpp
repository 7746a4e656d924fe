#include "cospectra/rationals.hpp"

#include <cctype>

#include "cospectra/errors.hpp"

namespace cospectra {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // divides exactly: r is C(n, i+1) * remaining factors
  }
  return r;
}

BigInt catalan(unsigned m) { return binomial(2 * m, m) / (m + 1); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto bad = [&] { throw ParseError("bad rational literal: " + text); };
  std::size_t slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) bad();
      return Rational(num, den);
    }
    std::size_t dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) bad();
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(BigInt(digits), den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational(0);  // unreachable
}

}  // namespace cospectra
