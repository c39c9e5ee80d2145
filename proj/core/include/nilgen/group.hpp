#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "nilgen/numeric.hpp"
#include "nilgen/random.hpp"

namespace nilgen {

// One Z/(p^a) factor of the elementary-divisor decomposition.
struct CyclicFactor {
    Integer modulus;  // p^exponent
    Integer prime;
    unsigned long exponent = 0;

    bool operator==(const CyclicFactor&) const = default;
};

// A finite abelian group as an ordered list of prime-power cyclic
// factors, sorted by (prime, exponent). The empty list is the trivial
// group. Immutable after construction.
class AbelianGroup {
public:
    AbelianGroup() : order_(1) {}  // trivial group

    const std::vector<CyclicFactor>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    const CyclicFactor& factor(std::size_t i) const { return factors_.at(i); }
    const Integer& order() const { return order_; }
    bool is_trivial() const { return factors_.empty(); }

    bool operator==(const AbelianGroup&) const = default;

private:
    friend AbelianGroup make_group_from_prime_powers(std::vector<CyclicFactor> factors);
    std::vector<CyclicFactor> factors_;
    Integer order_;
};

// An element as one residue per cyclic factor, kept reduced mod N_i.
struct Element {
    std::vector<Integer> coords;

    bool operator==(const Element&) const = default;
    // Lexicographic; gives enumeration order and stable test fixtures.
    std::strong_ordering operator<=>(const Element& other) const;
};

// Normalizes arbitrary divisors (each >= 2) into prime-power form:
// every divisor is split by the CRT into its prime-power parts and the
// resulting factor list is sorted by (prime, exponent).
AbelianGroup parse_group(const std::vector<Integer>& divisors);

// Internal-ish constructor used where factorizations are already known;
// factors need not be sorted but must be genuine prime powers.
AbelianGroup make_group_from_prime_powers(std::vector<CyclicFactor> factors);

Element element_zero(const AbelianGroup& g);
// Reduces the given coordinates into canonical range (any integers accepted).
Element element_from_coords(const AbelianGroup& g, std::vector<Integer> coords);
Element element_add(const AbelianGroup& g, const Element& a, const Element& b);
Element element_neg(const AbelianGroup& g, const Element& a);
Element element_scale(const AbelianGroup& g, const Element& a, const Integer& m);

Element sample_uniform(const AbelianGroup& g, Rng& rng);

inline constexpr long kDefaultEnumerationCap = 1000000;

// Lexicographic enumeration of all elements (first coordinate most
// significant). Throws resource_limit_error when |G| exceeds the cap.
class ElementRange {
public:
    explicit ElementRange(const AbelianGroup& g, long cap = kDefaultEnumerationCap);

    class iterator {
    public:
        using value_type = Element;
        using difference_type = std::ptrdiff_t;

        const Element& operator*() const { return current_; }
        iterator& operator++();
        bool operator==(const iterator& other) const;

    private:
        friend class ElementRange;
        const AbelianGroup* group_ = nullptr;
        Element current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const;

private:
    const AbelianGroup* group_;
};

ElementRange enumerate_elements(const AbelianGroup& g, long cap = kDefaultEnumerationCap);

// Convenience for tests and brute-force oracles.
std::vector<Element> all_elements(const AbelianGroup& g, long cap = kDefaultEnumerationCap);

}  // namespace nilgen
