#include <doctest.h>

#include <algorithm>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/errors.hpp"
#include "wsc/wreath.hpp"

using namespace wsc;

namespace {

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_facets(n, facets);
}

const std::vector<int> kOctahedronDims = {2, 1, 2, 1, 3, 3};

SimplicialComplex octahedron() {
    return cx(6, {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                  {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("vertex map bookkeeping") {
    const auto m = WreathVertexMap::from_dims({2, 0, 1});
    CHECK(m.total == 6);
    CHECK(m.copies == std::vector<int>{3, 1, 2});
    CHECK(m.offsets == std::vector<int>{0, 3, 4});
    CHECK(m.copy_id(0, 2) == 2);
    CHECK(m.copy_id(2, 1) == 5);
    CHECK(m.source_of(3) == std::pair<int, int>{1, 0});
    CHECK(m.source_of(5) == std::pair<int, int>{2, 1});
    CHECK_THROWS_AS((void)WreathVertexMap::from_dims({-1}), Error);
}

TEST_CASE("suspension of two points gives the triangle boundary") {
    const auto two = cx(2, {{0}, {1}});
    const auto s = one_point_suspension(two, 0);
    CHECK(s.complex.ambient_vertices() == 3);
    CHECK(s.complex.facets() == std::vector<Face>{Face::of({0, 1}, 3), Face::of({0, 2}, 3),
                                                  Face::of({1, 2}, 3)});
    CHECK(s.map.copies == std::vector<int>{2, 1});
}

TEST_CASE("reduced join of two points is a simplex boundary") {
    const auto two = cx(2, {{0}, {1}});
    CHECK(reduced_join(two, 0, 3).complex == boundary_simplex(4));
    CHECK(reduced_join(two, 0, 1).complex == boundary_simplex(2));
    CHECK_THROWS_AS((void)reduced_join(two, 0, 0), Error);
    CHECK_THROWS_AS((void)one_point_suspension(two, 2), Error);
}

TEST_CASE("wreath of the octahedron with mixed dimensions") {
    const auto w = mixed_wreath(octahedron(), kOctahedronDims);
    CHECK(w.complex.dim() == 14);
    CHECK(w.map.total == 18);
    CHECK(w.complex.vertex_support().size() == 18);
    CHECK(w.complex.is_pure());

    const auto counts = wreath_f_formula(octahedron(), kOctahedronDims);
    CHECK(counts.f0 == 18);
    CHECK(counts.f_top == 210);

    // enumeration agrees with the closed formula
    std::uint64_t top = 0;
    for (Face f : w.complex.facets())
        if (f.dim() == w.complex.dim()) ++top;
    CHECK(top == counts.f_top);
    CHECK(w.complex.facets().size() == 210);
}

TEST_CASE("wreath with zero dimensions is the identity") {
    const auto c = cx(4, {{0, 1}, {1, 2}, {3}});
    const auto w = mixed_wreath(c, {0, 0, 0, 0});
    CHECK(w.complex == c);
}

TEST_CASE("wreath argument validation") {
    const auto c = cx(2, {{0}, {1}});
    CHECK_THROWS_AS((void)mixed_wreath(c, {1}), Error);            // arity
    CHECK_THROWS_AS((void)mixed_wreath(c, {-2, 0}), Error);        // negative dimension
    CHECK_THROWS_AS((void)mixed_wreath(c, {40, 40}), Error);       // too many vertices
}

TEST_CASE("suspensions at distinct vertices commute") {
    const auto c = cx(3, {{0, 1}, {1, 2}});
    const auto s0 = one_point_suspension(c, 0);
    const auto s2 = one_point_suspension(c, 2);
    const auto a = one_point_suspension(s0.complex, s0.map.copy_id(2, 0)).complex;
    const auto b = one_point_suspension(s2.complex, s2.map.copy_id(0, 0)).complex;
    CHECK(a == b);
    CHECK(a == mixed_wreath(c, {1, 0, 1}).complex);
}

TEST_CASE("purity transfers in both directions") {
    const auto pure = boundary_simplex(2);
    CHECK(mixed_wreath(pure, {1, 2, 0}).complex.is_pure());
    const auto nonpure = cx(3, {{0, 1}, {2}});
    CHECK(!mixed_wreath(nonpure, {1, 0, 2}).complex.is_pure());
}
