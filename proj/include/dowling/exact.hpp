#pragma once

// Exact scalars and the elementary combinatorial primitives.
//
// Every number in the library is a Rational (GMP mpq, always canonical:
// lowest terms, positive denominator). Indices are plain std::size_t.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dowling {

using Rational = mpq_class;
using Integer = mpz_class;

/// How 0^0 is evaluated. Everything in the library uses `one`; `zero`
/// exists only so the identity suite can run its negative control.
enum class ZeroPow { one, zero };

/// Parses "p/q", "-p/q" or an integer literal. Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders integers bare and everything else as "p/q".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Exact integer power; 0^0 follows `convention`.
Rational power(const Rational& base, std::size_t exponent,
               ZeroPow convention = ZeroPow::one);

Integer factorial(std::size_t k);

/// C(n, k) for nonnegative integers, 0 when k > n.
Integer binomial(std::size_t n, std::size_t k);

/// (x)_k = x(x-1)...(x-k+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, std::size_t k);

/// <a>_k = a(a+1)...(a+k-1), with <a>_0 = 1.
Rational rising_factorial(const Rational& a, std::size_t k);

/// C(x, k) = (x)_k / k! for rational x.
Rational binomial_general(const Rational& x, std::size_t k);

enum class InversionDirection { forward, backward };

/// forward:  f_n = sum_{j<=n} C(n,j) g_j
/// backward: g_n = sum_{j<=n} (-1)^(n-j) C(n,j) f_j
/// The two directions are mutually inverse. Throws on an empty sequence.
std::vector<Rational> binomial_invert(std::span<const Rational> seq,
                                      InversionDirection direction);

}  // namespace dowling
