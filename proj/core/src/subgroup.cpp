#include "nilgen/subgroup.hpp"

#include <map>
#include <set>
#include <utility>

#include "nilgen/errors.hpp"

namespace nilgen {

namespace {

std::vector<Integer> moduli_of(const AbelianGroup& g) {
    std::vector<Integer> diag;
    diag.reserve(g.factor_count());
    for (const auto& f : g.factors()) diag.push_back(f.modulus);
    return diag;
}

void check_same_ambient(const Subgroup& a, const Subgroup& b, const char* what) {
    if (!(a.ambient() == b.ambient()))
        throw invalid_input_error(std::string(what) + ": ambient group mismatch");
}

}  // namespace

Subgroup Subgroup::from_lattice(const AbelianGroup& ambient, detail::TriangularLattice lattice) {
    if (lattice.dimension() != ambient.factor_count())
        throw invalid_input_error("subgroup lattice dimension mismatch");
    lattice.normalize();
    Subgroup s;
    s.ambient_ = ambient;
    s.order_ = ambient.order() / lattice.diagonal_product();
    s.basis_ = lattice.rows();
    return s;
}

Subgroup subgroup_from_generators(const AbelianGroup& g, const std::vector<Element>& generators) {
    detail::TriangularLattice lattice(moduli_of(g));
    for (const Element& gen : generators) {
        if (gen.coords.size() != g.factor_count())
            throw invalid_input_error("subgroup generator: coordinate count mismatch");
        lattice.insert(gen.coords);
    }
    return Subgroup::from_lattice(g, std::move(lattice));
}

Subgroup trivial_subgroup(const AbelianGroup& g) {
    return subgroup_from_generators(g, {});
}

Subgroup full_subgroup(const AbelianGroup& g) {
    std::vector<Element> basis_vectors;
    for (std::size_t i = 0; i < g.factor_count(); ++i) {
        Element e = element_zero(g);
        e.coords[i] = 1;
        basis_vectors.push_back(std::move(e));
    }
    return subgroup_from_generators(g, basis_vectors);
}

Subgroup subgroup_extend(const Subgroup& s, const Element& g) {
    if (g.coords.size() != s.ambient().factor_count())
        throw invalid_input_error("subgroup_extend: coordinate count mismatch");
    detail::TriangularLattice lattice(moduli_of(s.ambient()));
    for (const auto& row : s.basis()) lattice.insert(row);
    lattice.insert(g.coords);
    return Subgroup::from_lattice(s.ambient(), std::move(lattice));
}

bool subgroup_contains(const Subgroup& s, const Element& g) {
    if (g.coords.size() != s.ambient().factor_count())
        throw invalid_input_error("subgroup_contains: coordinate count mismatch");
    detail::TriangularLattice lattice(moduli_of(s.ambient()));
    for (const auto& row : s.basis()) lattice.insert(row);
    return lattice.contains(g.coords);
}

bool subgroups_equal(const Subgroup& a, const Subgroup& b) {
    check_same_ambient(a, b, "subgroups_equal");
    return a.basis() == b.basis();
}

bool subgroup_is_full(const Subgroup& s) {
    return s.order() == s.ambient().order();
}

std::vector<Element> subgroup_generators(const Subgroup& s) {
    std::vector<Element> out;
    for (const auto& row : s.basis()) {
        Element e = element_from_coords(s.ambient(), row);
        if (e != element_zero(s.ambient())) out.push_back(std::move(e));
    }
    return out;
}

std::vector<Integer> subgroup_box_moduli(const Subgroup& s) {
    std::vector<Integer> out;
    const auto& factors = s.ambient().factors();
    for (std::size_t i = 0; i < factors.size(); ++i)
        out.push_back(factors[i].modulus / s.basis()[i][i]);
    return out;
}

Element sample_subgroup_uniform(const Subgroup& s, Rng& rng) {
    const AbelianGroup& g = s.ambient();
    const std::size_t l = g.factor_count();
    std::vector<Integer> acc(l, Integer(0));
    const std::vector<Integer> box = subgroup_box_moduli(s);
    for (std::size_t i = 0; i < l; ++i) {
        const Integer c = rng.uniform_below(box[i]);
        if (sgn(c) == 0) continue;
        for (std::size_t j = i; j < l; ++j) acc[j] += c * s.basis()[i][j];
    }
    return element_from_coords(g, std::move(acc));
}

std::vector<Element> subgroup_elements(const Subgroup& s, long cap) {
    if (s.order() > cap)
        throw resource_limit_error("subgroup enumeration cap exceeded: |S| = " +
                                   s.order().get_str());
    const AbelianGroup& g = s.ambient();
    const std::size_t l = g.factor_count();
    const std::vector<Integer> box = subgroup_box_moduli(s);
    std::vector<Element> out;
    std::vector<Integer> counter(l, Integer(0));
    for (;;) {
        std::vector<Integer> acc(l, Integer(0));
        for (std::size_t i = 0; i < l; ++i) {
            if (sgn(counter[i]) == 0) continue;
            for (std::size_t j = i; j < l; ++j) acc[j] += counter[i] * s.basis()[i][j];
        }
        out.push_back(element_from_coords(g, std::move(acc)));
        std::size_t i = l;
        while (i-- > 0) {
            ++counter[i];
            if (counter[i] < box[i]) break;
            counter[i] = 0;
            if (i == 0) return out;
        }
        if (l == 0) return out;
    }
}

AbelianGroup subgroup_isomorphism_type(const Subgroup& s) {
    const AbelianGroup& g = s.ambient();
    const std::size_t l = g.factor_count();
    if (l == 0) return AbelianGroup{};
    detail::TriangularLattice lattice(moduli_of(g));
    for (const auto& row : s.basis()) lattice.insert(row);

    // Rows of diag(N) in the subgroup-lattice basis; its Smith normal
    // form diagonal is the invariant-factor list of S.
    detail::Mat change(l);
    for (std::size_t i = 0; i < l; ++i) {
        detail::Row target(l, Integer(0));
        target[i] = g.factor(i).modulus;
        change[i] = lattice.solve(std::move(target));
    }
    std::vector<Integer> divisors = detail::smith_diagonal(std::move(change));

    std::vector<CyclicFactor> factors;
    for (Integer d : divisors) {
        if (d <= 1) continue;
        // d divides |G|, so it factors over the ambient primes.
        for (const auto& f : g.factors()) {
            unsigned long e = 0;
            while (mpz_divisible_p(d.get_mpz_t(), f.prime.get_mpz_t())) {
                d /= f.prime;
                ++e;
            }
            if (e > 0) factors.push_back({ipow(f.prime, e), f.prime, e});
            if (d == 1) break;
        }
        if (d != 1) throw std::logic_error("invariant factor not smooth over ambient primes");
    }
    return make_group_from_prime_powers(std::move(factors));
}

std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& g, long cap) {
    if (g.order() > cap)
        throw resource_limit_error("subgroup enumeration cap exceeded: |G| = " +
                                   g.order().get_str());
    const std::vector<Element> elements = all_elements(g, cap);
    std::vector<Subgroup> out;
    std::set<detail::Mat> seen;
    std::vector<std::size_t> frontier;

    out.push_back(trivial_subgroup(g));
    seen.insert(out.back().basis());
    frontier.push_back(0);

    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (const Element& e : elements) {
                Subgroup extended = subgroup_extend(out[idx], e);
                if (seen.insert(extended.basis()).second) {
                    out.push_back(std::move(extended));
                    next.push_back(out.size() - 1);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace nilgen
