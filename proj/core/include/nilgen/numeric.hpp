#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nilgen {

// All group orders, lattice entries and probabilities are exact.
// Integer is arbitrary precision; Rational is always kept canonical
// (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "n" or "n/d" with optional sign. Decimal notation is rejected:
// ceiling-log arithmetic downstream is exact only for true rationals.
Rational parse_rational(const std::string& text);

Integer ipow(const Integer& base, unsigned long exponent);

// Smallest c with 2^c >= x. Requires x > 0. May be negative (x < 1).
long ceil_log2(const Rational& x);
long ceil_log2(const Integer& x);

// Smallest n with n*n >= x. Requires x >= 0.
Integer ceil_sqrt(const Integer& x);

// Two-sided 99% normal-approximation confidence half-width for a
// binomial proportion: the least multiple of 2^-64 at or above
//   z * sqrt(p*(1-p)/trials),  p = successes/trials,  z = 2.576.
// Rounding is always upward, so the reported interval never understates
// the nominal one.
Rational normal99_halfwidth(const Integer& successes, const Integer& trials);

}  // namespace nilgen
