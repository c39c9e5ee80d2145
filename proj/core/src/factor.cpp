#include "nilgen/factor.hpp"

#include <algorithm>
#include <map>

#include "nilgen/errors.hpp"

namespace nilgen {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's variant of Pollard rho. n must be odd, composite and not a
// prime power of a small prime; returns a nontrivial factor.
Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, r = 1, q = 1, g = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer limit = r - k;
                if (limit > 128) limit = 128;
                for (Integer i = 0; i < limit; ++i) {
                    y = (y * y + c) % n;
                    Integer d = x - y;
                    if (sgn(d) < 0) d = -d;
                    q = q * d % n;
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            // Batch overshot; replay one squaring at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Integer d = x - ys;
                if (sgn(d) < 0) d = -d;
                g = gcd(d, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned long>& out);

void record_prime_power(const Integer& p, unsigned long e, std::map<Integer, unsigned long>& out) {
    out[p] += e;
}

void factor_into(const Integer& n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        record_prime_power(n, 1, out);
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                std::map<Integer, unsigned long> base;
                factor_into(root, base);
                for (const auto& [p, k] : base) record_prime_power(p, k * e, out);
                return;
            }
        }
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n) {
    if (n < 2) throw invalid_input_error("factorize requires n >= 2");
    std::map<Integer, unsigned long> acc;
    Integer rest = n;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            record_prime_power(Integer(p), 1, acc);
            rest /= static_cast<unsigned long>(p);
        }
    }
    for (unsigned long p = 11; p < 100000 && rest > 1; p += 2) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            record_prime_power(Integer(p), 1, acc);
            rest /= static_cast<unsigned long>(p);
        }
    }
    if (rest > 1) factor_into(rest, acc);
    return {acc.begin(), acc.end()};
}

}  // namespace nilgen
