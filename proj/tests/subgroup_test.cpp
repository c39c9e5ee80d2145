#include <doctest.h>

#include <algorithm>
#include <map>

#include "nilgen/errors.hpp"
#include "nilgen/subgroup.hpp"
#include "oracles.hpp"

using namespace nilgen;

namespace {

AbelianGroup group_of(std::vector<long> divisors) {
    std::vector<Integer> ds(divisors.begin(), divisors.end());
    return parse_group(ds);
}

Element el(const AbelianGroup& g, std::vector<long> coords) {
    return element_from_coords(g, std::vector<Integer>(coords.begin(), coords.end()));
}

std::vector<Element> sorted(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("span of generators: small cases") {
    const AbelianGroup z4 = group_of({4});
    CHECK(subgroup_from_generators(z4, {el(z4, {2})}).order() == 2);

    const AbelianGroup klein = group_of({2, 2});
    CHECK(subgroup_from_generators(klein, {el(klein, {1, 0}), el(klein, {0, 1})}).order() == 4);
    CHECK(subgroup_is_full(subgroup_from_generators(klein, {el(klein, {1, 0}), el(klein, {0, 1})})));

    CHECK(subgroup_from_generators(klein, {}).order() == 1);
    CHECK(trivial_subgroup(klein).order() == 1);
    CHECK(full_subgroup(klein).order() == 4);
}

TEST_CASE("membership matches explicit closure") {
    const AbelianGroup z4 = group_of({4});
    const Subgroup s = subgroup_from_generators(z4, {el(z4, {2})});
    CHECK(subgroup_contains(s, el(z4, {0})));
    CHECK(!subgroup_contains(s, el(z4, {1})));
    CHECK(subgroup_contains(s, el(z4, {2})));

    const AbelianGroup klein = group_of({2, 2});
    const Subgroup diag = subgroup_from_generators(klein, {el(klein, {1, 1})});
    CHECK(diag.order() == 2);
    CHECK(!subgroup_is_full(diag));
    CHECK(subgroup_contains(diag, el(klein, {1, 1})));
    CHECK(!subgroup_contains(diag, el(klein, {1, 0})));
}

TEST_CASE("equality ignores redundant generators") {
    const AbelianGroup g = group_of({4, 2});
    const Subgroup a = subgroup_from_generators(g, {el(g, {1, 0})});
    const Subgroup b = subgroup_from_generators(g, {el(g, {1, 0}), el(g, {2, 0})});
    CHECK(subgroups_equal(a, b));

    const Subgroup c = subgroup_from_generators(g, {el(g, {0, 1})});
    CHECK(!subgroups_equal(a, c));
}

TEST_CASE("operations reject mismatched ambients and coordinates") {
    const AbelianGroup g = group_of({4, 2});
    const AbelianGroup h = group_of({8});
    CHECK_THROWS_AS(subgroups_equal(trivial_subgroup(g), trivial_subgroup(h)),
                    invalid_input_error);
    CHECK_THROWS_AS(subgroup_contains(trivial_subgroup(g), Element{{Integer(0)}}),
                    invalid_input_error);
    CHECK_THROWS_AS(subgroup_from_generators(g, {Element{{Integer(1)}}}), invalid_input_error);
}

TEST_CASE("span order equals closure size across small groups") {
    Rng rng(2024);
    for (const auto& g : {group_of({4, 2}), group_of({2, 2, 2}), group_of({9, 3}),
                          group_of({8, 4}), group_of({5, 25}), group_of({12, 2})}) {
        for (int trial = 0; trial < 12; ++trial) {
            const long n = rng.uniform_below(Integer(3)).get_si();
            std::vector<Element> gens;
            for (long i = 0; i < n; ++i) gens.push_back(sample_uniform(g, rng));
            const Subgroup s = subgroup_from_generators(g, gens);
            const auto closed = oracle::closure(g, gens);
            CHECK(s.order() == Integer(closed.size()));
            // Element enumeration agrees with the closure set.
            CHECK(sorted(subgroup_elements(s)) == closed);
            for (const Element& e : closed) CHECK(subgroup_contains(s, e));
        }
    }
}

TEST_CASE("canonical basis is invariant under generator presentation") {
    Rng rng(77);
    const AbelianGroup g = group_of({8, 4, 3, 3});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Element> gens;
        const long n = 1 + rng.uniform_below(Integer(3)).get_si();
        for (long i = 0; i < n; ++i) gens.push_back(sample_uniform(g, rng));
        const Subgroup reference = subgroup_from_generators(g, gens);

        // permutation
        std::vector<Element> shuffled = gens;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1],
                      shuffled[rng.uniform_below(Integer(i)).get_ui()]);
        CHECK(subgroups_equal(reference, subgroup_from_generators(g, shuffled)));

        // duplication
        std::vector<Element> doubled = gens;
        doubled.insert(doubled.end(), gens.begin(), gens.end());
        CHECK(subgroups_equal(reference, subgroup_from_generators(g, doubled)));

        // adding elements already in the span
        std::vector<Element> padded = gens;
        padded.push_back(sample_subgroup_uniform(reference, rng));
        padded.push_back(element_zero(g));
        CHECK(subgroups_equal(reference, subgroup_from_generators(g, padded)));
    }
}

TEST_CASE("subgroup generators regenerate the subgroup") {
    Rng rng(31);
    const AbelianGroup g = group_of({4, 6});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Element> gens{sample_uniform(g, rng), sample_uniform(g, rng)};
        const Subgroup s = subgroup_from_generators(g, gens);
        CHECK(subgroups_equal(s, subgroup_from_generators(g, subgroup_generators(s))));
    }
}

TEST_CASE("uniform subgroup sampling lands in the subgroup, near-uniformly") {
    const AbelianGroup g = group_of({2, 4});
    const Subgroup s = subgroup_from_generators(g, {el(g, {1, 1})});
    REQUIRE(s.order() == 4);
    const auto members = oracle::closure(g, {el(g, {1, 1})});
    Rng rng(13);
    std::map<Element, long> counts;
    for (int i = 0; i < 8000; ++i) {
        const Element e = sample_subgroup_uniform(s, rng);
        CHECK(std::binary_search(members.begin(), members.end(), e));
        ++counts[e];
    }
    REQUIRE(counts.size() == 4);
    for (const auto& [e, c] : counts) {
        CHECK(c > 1800);
        CHECK(c < 2200);
    }
}

TEST_CASE("isomorphism type via invariant factors") {
    // <(1,1)> in Z2+Z4 is cyclic of order 4, not Z2+Z2.
    const AbelianGroup g = group_of({2, 4});
    const Subgroup s = subgroup_from_generators(g, {el(g, {1, 1})});
    REQUIRE(s.order() == 4);
    CHECK(subgroup_isomorphism_type(s) == group_of({4}));

    CHECK(subgroup_isomorphism_type(full_subgroup(g)) == g);
    CHECK(subgroup_isomorphism_type(trivial_subgroup(g)) == group_of({}));

    const AbelianGroup z4 = group_of({4});
    CHECK(subgroup_isomorphism_type(subgroup_from_generators(z4, {el(z4, {2})})) ==
          group_of({2}));

    const AbelianGroup k2 = group_of({2, 2});
    CHECK(subgroup_isomorphism_type(full_subgroup(k2)) == k2);
}

TEST_CASE("isomorphism type matches element-order statistics") {
    // Orders of elements determine a finite abelian group; compare the
    // claimed type's statistics with the subgroup's actual ones.
    Rng rng(4096);
    for (const auto& g : {group_of({4, 4}), group_of({2, 8}), group_of({9, 3}),
                          group_of({2, 2, 4})}) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Element> gens{sample_uniform(g, rng), sample_uniform(g, rng)};
            const Subgroup s = subgroup_from_generators(g, gens);
            const AbelianGroup type = subgroup_isomorphism_type(s);
            REQUIRE(type.order() == s.order());

            auto order_histogram = [](const AbelianGroup& gg,
                                      const std::vector<Element>& elems) {
                std::map<Integer, long> hist;
                for (const Element& e : elems) {
                    Integer ord = 1;
                    Element acc = e;
                    while (acc != element_zero(gg)) {
                        acc = element_add(gg, acc, e);
                        ++ord;
                    }
                    ++hist[ord];
                }
                return hist;
            };
            CHECK(order_histogram(g, subgroup_elements(s)) ==
                  order_histogram(type, all_elements(type)));
        }
    }
}

TEST_CASE("enumerate_subgroups finds the textbook counts") {
    CHECK(enumerate_subgroups(group_of({4})).size() == 3);
    CHECK(enumerate_subgroups(group_of({2, 2})).size() == 5);
    CHECK(enumerate_subgroups(group_of({6})).size() == 4);
    CHECK(enumerate_subgroups(group_of({3, 3})).size() == 6);
    CHECK(enumerate_subgroups(group_of({2, 2, 2})).size() == 16);
    CHECK(enumerate_subgroups(group_of({12})).size() == 6);
    CHECK(enumerate_subgroups(group_of({})).size() == 1);
}

TEST_CASE("enumeration caps raise resource errors") {
    const AbelianGroup big = group_of({4096, 4096});
    CHECK_THROWS_AS(enumerate_subgroups(big), resource_limit_error);
    CHECK_THROWS_AS(subgroup_elements(full_subgroup(big), 1000), resource_limit_error);
    CHECK_NOTHROW(subgroup_elements(trivial_subgroup(big), 1000));
}

TEST_CASE("enumerate_subgroups agrees with closure enumeration") {
    for (const auto& g : {group_of({4, 2}), group_of({9}), group_of({2, 6})}) {
        auto via_lattice = enumerate_subgroups(g);
        auto via_closure = oracle::all_subgroup_element_sets(g);
        REQUIRE(via_lattice.size() == via_closure.size());
        std::vector<std::vector<Element>> lattice_sets;
        for (const auto& s : via_lattice) lattice_sets.push_back(sorted(subgroup_elements(s)));
        std::sort(lattice_sets.begin(), lattice_sets.end());
        std::sort(via_closure.begin(), via_closure.end());
        CHECK(lattice_sets == via_closure);
    }
}
