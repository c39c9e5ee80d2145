#pragma once

#include <vector>

#include "nilgen/group.hpp"
#include "nilgen/lattice.hpp"

namespace nilgen {

// A subgroup S <= G held as the Hermite normal form basis of the
// integer lattice  L = span(generators) + span(N_i * e_i), together
// with the subgroup order prod(N_i) / det(basis). The basis is
// canonical: two Subgroups of the same ambient describe the same set
// iff their bases are identical.
class Subgroup {
public:
    static Subgroup from_lattice(const AbelianGroup& ambient, detail::TriangularLattice lattice);

    const AbelianGroup& ambient() const { return ambient_; }
    const detail::Mat& basis() const { return basis_; }
    const Integer& order() const { return order_; }

private:
    Subgroup() = default;
    AbelianGroup ambient_;
    detail::Mat basis_;
    Integer order_;
};

Subgroup subgroup_from_generators(const AbelianGroup& g, const std::vector<Element>& generators);
Subgroup trivial_subgroup(const AbelianGroup& g);
Subgroup full_subgroup(const AbelianGroup& g);

// S extended by one more generator.
Subgroup subgroup_extend(const Subgroup& s, const Element& g);

bool subgroup_contains(const Subgroup& s, const Element& g);
bool subgroups_equal(const Subgroup& a, const Subgroup& b);
bool subgroup_is_full(const Subgroup& s);

// Nonzero canonical basis rows reduced into G; they generate S.
std::vector<Element> subgroup_generators(const Subgroup& s);

// Per-coordinate box sizes m_i = N_i / pivot_i. The map
//   (c_1..c_l) -> sum c_i * basisrow_i  (mod N),  0 <= c_i < m_i,
// is a bijection onto S (not a group isomorphism), which gives exact
// uniform sampling and duplicate-free enumeration.
std::vector<Integer> subgroup_box_moduli(const Subgroup& s);

Element sample_subgroup_uniform(const Subgroup& s, Rng& rng);

std::vector<Element> subgroup_elements(const Subgroup& s, long cap = kDefaultEnumerationCap);

// The abstract group S is isomorphic to, in elementary-divisor form,
// read off the Smith normal form of diag(N) expressed in S's basis.
AbelianGroup subgroup_isomorphism_type(const Subgroup& s);

// All subgroups of G, found by closing the span BFS under one-generator
// extensions. Intended for small groups (oracle suites).
std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& g, long cap = 4096);

}  // namespace nilgen
