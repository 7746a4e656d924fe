#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cospectra {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Walk counts grow like d^n; keep them exact.
using WalkCount = BigInt;

BigInt binomial(unsigned n, unsigned k);
BigInt catalan(unsigned m);

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

// Exact rational from decimal text: "2", "-3/4", "1.25".
Rational parse_rational(const std::string& text);

}  // namespace cospectra
