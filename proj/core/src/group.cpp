#include "nilgen/group.hpp"

#include <algorithm>

#include "nilgen/errors.hpp"
#include "nilgen/factor.hpp"

namespace nilgen {

std::strong_ordering Element::operator<=>(const Element& other) const {
    if (auto c = coords.size() <=> other.coords.size(); c != 0) return c;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        int c = cmp(coords[i], other.coords[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

AbelianGroup make_group_from_prime_powers(std::vector<CyclicFactor> factors) {
    std::sort(factors.begin(), factors.end(), [](const CyclicFactor& a, const CyclicFactor& b) {
        int c = cmp(a.prime, b.prime);
        if (c != 0) return c < 0;
        return a.exponent < b.exponent;
    });
    AbelianGroup g;
    g.factors_ = std::move(factors);
    g.order_ = 1;
    for (const auto& f : g.factors_) g.order_ *= f.modulus;
    return g;
}

AbelianGroup parse_group(const std::vector<Integer>& divisors) {
    std::vector<CyclicFactor> factors;
    for (const Integer& d : divisors) {
        if (d <= 1) throw invalid_input_error("group divisors must be >= 2");
        for (const auto& [p, e] : factorize(d)) {
            factors.push_back({ipow(p, e), p, e});
        }
    }
    return make_group_from_prime_powers(std::move(factors));
}

namespace {

void check_coords(const AbelianGroup& g, const Element& a, const char* what) {
    if (a.coords.size() != g.factor_count())
        throw invalid_input_error(std::string(what) + ": coordinate count mismatch");
}

}  // namespace

Element element_zero(const AbelianGroup& g) {
    return Element{std::vector<Integer>(g.factor_count(), Integer(0))};
}

Element element_from_coords(const AbelianGroup& g, std::vector<Integer> coords) {
    if (coords.size() != g.factor_count())
        throw invalid_input_error("element_from_coords: coordinate count mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        mpz_mod(coords[i].get_mpz_t(), coords[i].get_mpz_t(),
                g.factor(i).modulus.get_mpz_t());
    }
    return Element{std::move(coords)};
}

Element element_add(const AbelianGroup& g, const Element& a, const Element& b) {
    check_coords(g, a, "element_add");
    check_coords(g, b, "element_add");
    Element out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        out.coords[i] += b.coords[i];
        if (out.coords[i] >= g.factor(i).modulus) out.coords[i] -= g.factor(i).modulus;
    }
    return out;
}

Element element_neg(const AbelianGroup& g, const Element& a) {
    check_coords(g, a, "element_neg");
    Element out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        if (sgn(out.coords[i]) != 0) out.coords[i] = g.factor(i).modulus - out.coords[i];
    }
    return out;
}

Element element_scale(const AbelianGroup& g, const Element& a, const Integer& m) {
    check_coords(g, a, "element_scale");
    Element out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        out.coords[i] *= m;
        mpz_mod(out.coords[i].get_mpz_t(), out.coords[i].get_mpz_t(),
                g.factor(i).modulus.get_mpz_t());
    }
    return out;
}

Element sample_uniform(const AbelianGroup& g, Rng& rng) {
    Element out;
    out.coords.reserve(g.factor_count());
    for (const auto& f : g.factors()) out.coords.push_back(rng.uniform_below(f.modulus));
    return out;
}

ElementRange::ElementRange(const AbelianGroup& g, long cap) : group_(&g) {
    if (g.order() > cap)
        throw resource_limit_error("element enumeration cap exceeded: |G| = " +
                                   g.order().get_str() + " > " + std::to_string(cap));
}

ElementRange::iterator& ElementRange::iterator::operator++() {
    // Odometer with the last coordinate fastest.
    for (std::size_t i = current_.coords.size(); i-- > 0;) {
        ++current_.coords[i];
        if (current_.coords[i] < group_->factor(i).modulus) return *this;
        current_.coords[i] = 0;
    }
    done_ = true;
    return *this;
}

bool ElementRange::iterator::operator==(const iterator& other) const {
    if (done_ != other.done_) return false;
    if (done_) return true;
    return current_ == other.current_;
}

ElementRange::iterator ElementRange::begin() const {
    iterator it;
    it.group_ = group_;
    it.current_ = element_zero(*group_);
    it.done_ = false;
    return it;
}

ElementRange::iterator ElementRange::end() const {
    return iterator{};
}

ElementRange enumerate_elements(const AbelianGroup& g, long cap) {
    return ElementRange(g, cap);
}

std::vector<Element> all_elements(const AbelianGroup& g, long cap) {
    std::vector<Element> out;
    for (const Element& e : enumerate_elements(g, cap)) out.push_back(e);
    return out;
}

}  // namespace nilgen
