#include <doctest.h>

#include <vector>

#include "wsc/complex.hpp"
#include "wsc/errors.hpp"
#include "wsc/monomial.hpp"
#include "wsc/weighted.hpp"

using namespace wsc;

namespace {

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_facets(n, facets);
}

Monomial mono(std::vector<std::uint32_t> exps) { return Monomial{std::move(exps)}; }

}  // namespace

TEST_CASE("weighted Stanley-Reisner ideal of a triangle with an apex point") {
    const auto c = cx(4, {{0, 1}, {0, 2}, {1, 2}, {3}});
    const auto wc = WeightedComplex::make(c, {3, 4, 5, 2});
    const auto a = sr_ideal_weighted(wc);
    CHECK(a.n == 4);
    CHECK(a.gens == std::vector<Monomial>{mono({3, 0, 0, 2}), mono({0, 4, 0, 2}),
                                          mono({0, 0, 5, 2}), mono({3, 4, 5, 0})});
}

TEST_CASE("squarefree correspondence round-trips") {
    const auto c = cx(4, {{0, 1}, {0, 2}, {1, 2}, {3}});
    const auto a = sr_ideal(c);
    CHECK(a.is_squarefree());
    CHECK(complex_from_squarefree(a) == c);

    CHECK(sr_ideal(full_simplex(3)).is_zero());
    CHECK(complex_from_squarefree(MonomialIdeal::make(3, {})) == full_simplex(2));
    CHECK_THROWS_AS((void)complex_from_squarefree(MonomialIdeal::make(2, {mono({2, 0})})), Error);
    CHECK_THROWS_AS((void)sr_ideal(cx(2, {})), Error);

    // the whole boundary: ideal generated by the full vertex product
    CHECK(complex_from_squarefree(MonomialIdeal::make(3, {mono({1, 1, 1})})) ==
          boundary_simplex(2));
}

TEST_CASE("polarizing a fully weighted simplex fills out a larger simplex") {
    const auto w = polarize(WeightedComplex::make(full_simplex(2), {1, 2, 3}));
    CHECK(w.complex == full_simplex(5));
    CHECK(w.map.copies == std::vector<int>{1, 2, 3});
}

TEST_CASE("polarizing weighted points gives a simplex boundary") {
    const auto w = polarize(WeightedComplex::make(cx(2, {{0}, {1}}), {4, 1}));
    CHECK(w.complex == boundary_simplex(4));
    const auto a = sr_ideal(w.complex);
    CHECK(a.gens == std::vector<Monomial>{Monomial{{1, 1, 1, 1, 1}}});
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS((void)WeightedComplex::make(full_simplex(2), {1}), Error);
    CHECK_THROWS_AS((void)WeightedComplex::make(full_simplex(2), {1, 0}), Error);
}

TEST_CASE("copy-pair form aligns different block layouts") {
    // vertex 1 sits in no minimal non-face, so the ideal-side polarization
    // keeps one copy of x2 while the complex side takes all three
    const auto c = cx(3, {{0, 1}, {1, 2}});
    const auto wc = WeightedComplex::make(c, {2, 3, 2});
    const auto pol = polarize(wc);
    const auto pol_ideal = polarize_ideal(sr_ideal_weighted(wc));
    CHECK(pol.map.total == 7);
    CHECK(pol_ideal.map.total == 5);
    const auto lhs = generators_as_copy_pairs(sr_ideal(pol.complex), pol.map);
    const auto rhs = generators_as_copy_pairs(pol_ideal.ideal, pol_ideal.map);
    CHECK(lhs == rhs);
    const std::vector<std::pair<int, int>> gen = {{0, 0}, {0, 1}, {2, 0}, {2, 1}};
    CHECK(lhs == std::vector<std::vector<std::pair<int, int>>>{gen});
}
