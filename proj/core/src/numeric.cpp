#include "nilgen/numeric.hpp"

#include <cctype>
#include <limits>

#include "nilgen/errors.hpp"

namespace nilgen {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw invalid_input_error("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    bool seen_digit = false;
    bool seen_slash = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw invalid_input_error("malformed rational literal '" + text +
                                      "' (use n or n/d; decimals are not accepted)");
        }
    }
    if (!seen_digit) throw invalid_input_error("malformed rational literal '" + text + "'");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw invalid_input_error("malformed rational literal '" + text + "'");
    if (q.get_den() == 0) throw invalid_input_error("rational with zero denominator");
    q.canonicalize();
    return q;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

namespace {

// 2^c compared against num/den without materializing 2^c as a float.
int cmp_pow2(long c, const Integer& num, const Integer& den) {
    Integer lhs;
    if (c >= 0) {
        mpz_mul_2exp(lhs.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(c));
        return cmp(lhs, num);
    }
    mpz_mul_2exp(lhs.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-c));
    return cmp(den, lhs);
}

}  // namespace

long ceil_log2(const Rational& x) {
    if (sgn(x) <= 0) throw invalid_input_error("ceil_log2 requires a positive argument");
    const Integer num = x.get_num();
    const Integer den = x.get_den();
    // Bit sizes give the answer up to +-1; fix up with exact comparisons.
    long guess = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
    while (cmp_pow2(guess, num, den) < 0) ++guess;
    while (guess > std::numeric_limits<long>::min() && cmp_pow2(guess - 1, num, den) >= 0) --guess;
    return guess;
}

long ceil_log2(const Integer& x) {
    return ceil_log2(make_rational(x, 1));
}

Integer ceil_sqrt(const Integer& x) {
    if (sgn(x) < 0) throw invalid_input_error("ceil_sqrt requires a nonnegative argument");
    Integer root = sqrt(x);
    if (root * root < x) ++root;
    return root;
}

Rational normal99_halfwidth(const Integer& successes, const Integer& trials) {
    if (trials <= 0) throw invalid_input_error("halfwidth requires trials >= 1");
    if (successes < 0 || successes > trials)
        throw invalid_input_error("successes out of range");
    // z = 2.576 (99% two-sided quantile rounded up), squared exactly.
    static const Rational z_squared = make_rational(Integer(2576) * 2576, Integer(1000) * 1000);
    const Rational p = make_rational(successes, trials);
    const Rational variance = z_squared * p * (1 - p) / Rational(trials);
    if (sgn(variance) == 0) return Rational(0);
    // ceil(2^64 * sqrt(v)) / 2^64, computed as ceil-sqrt of ceil(2^128 * v).
    Integer scaled_num = variance.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), 128);
    Integer m;
    mpz_cdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), variance.get_den().get_mpz_t());
    Integer s = ceil_sqrt(m);
    Integer two64 = 1;
    mpz_mul_2exp(two64.get_mpz_t(), two64.get_mpz_t(), 64);
    return make_rational(s, two64);
}

}  // namespace nilgen
