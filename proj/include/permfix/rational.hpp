#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace permfix {

// Exact scalar domain. BigInt is an arbitrary-precision signed integer,
// Rational a reduced fraction with positive denominator (both canonical by
// construction). No floating-point type appears anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den as a canonical Rational. Throws std::invalid_argument when
// den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Parses the CLI rational grammar `[-]digits[/digits]`. Decimal notation is
// rejected so exactness survives the command line. Throws
// std::invalid_argument on any other input.
Rational parse_rational(std::string_view text);

BigInt factorial(int n);

// n choose m; zero outside 0 <= m <= n.
BigInt binomial(int n, long long m);

// m(m-1)...(m-k+1); 1 for k == 0, 0 for k > m.
BigInt falling_factorial(int m, int k);

inline int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace permfix
