#include <doctest.h>

#include <string>
#include <vector>

#include "wsc/checkers.hpp"
#include "wsc/complex.hpp"
#include "wsc/errors.hpp"

using namespace wsc;

namespace {

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_facets(n, facets);
}

const SimplicialComplex kOctahedron = cx(6, {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                                             {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});

SimplicialComplex projective_plane() {
    return cx(6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                  {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("simplices and their boundaries have every property") {
    for (const auto& c : {full_simplex(3), boundary_simplex(3), kOctahedron}) {
        CAPTURE(c.facets().size());
        CHECK(is_vertex_decomposable(c));
        CHECK(is_shellable(c));
        CHECK(is_constructible_bounded(c) == TriBool::True);
        CHECK(is_cohen_macaulay_reisner(c));
    }
    CHECK(is_vertex_decomposable(cx(1, {{0}})));
    CHECK(is_shellable(cx(1, {{}})));  // irrelevant complex shells trivially
}

TEST_CASE("two disjoint edges fail every property") {
    const auto c = cx(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_vertex_decomposable(c));
    CHECK_FALSE(is_shellable(c));
    CHECK(is_constructible_bounded(c) == TriBool::False);
    CHECK_FALSE(is_cohen_macaulay_reisner(c));
}

TEST_CASE("a path of two edges has every property") {
    const auto c = cx(3, {{0, 1}, {1, 2}});
    CHECK(is_vertex_decomposable(c));
    CHECK(is_shellable(c));
    CHECK(is_constructible_bounded(c) == TriBool::True);
    CHECK(is_cohen_macaulay_reisner(c));
}

TEST_CASE("vertex decomposition witnesses replay") {
    const auto c = cx(3, {{0, 1}, {1, 2}});
    std::vector<int> witness;
    REQUIRE(is_vertex_decomposable(c, {}, &witness));
    CHECK(replay_vertex_decomposition(c, witness));

    std::vector<int> corrupted = witness;
    REQUIRE(!corrupted.empty());
    corrupted[0] = 1;  // 1 is in every facet, so it cannot shed first
    CHECK_FALSE(replay_vertex_decomposition(c, corrupted));
    CHECK_FALSE(replay_vertex_decomposition(cx(4, {{0, 1}, {2, 3}}), {0, 1, 2, 3}));
}

TEST_CASE("nonpure shelling must take the big facet first") {
    const auto c = cx(4, {{0, 1, 2}, {3}});
    std::vector<Face> order;
    CHECK(is_shellable(c, {}, &order));
    REQUIRE(order.size() == 2);
    CHECK(order[0] == Face::of({0, 1, 2}, 4));
    CHECK(is_shelling_order(c, order));
    CHECK_FALSE(is_shelling_order(c, {order[1], order[0]}));
    CHECK_FALSE(is_shelling_order(c, {order[0]}));  // must list every facet
}

TEST_CASE("checker resource bounds") {
    // 13 disjoint edges: over the default 12-facet shelling bound
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 13; ++i) edges.push_back({2 * i, 2 * i + 1});
    CHECK_THROWS_AS((void)is_shellable(cx(26, edges)), Error);

    // 9 facets exceed the default constructibility bound: Unknown, not a guess
    CHECK(is_constructible_bounded(projective_plane()) == TriBool::Unknown);
    CheckerOptions wide;
    wide.constructible_facet_bound = 10;
    wide.shelling_facet_bound = 10;
    CHECK(is_constructible_bounded(projective_plane(), wide) == TriBool::False);

    CheckerOptions tiny;
    tiny.vd_node_bound = 1;
    CHECK_THROWS_AS((void)is_vertex_decomposable(kOctahedron, tiny), Error);
}

TEST_CASE("Reisner criterion sees the characteristic") {
    const auto rp2 = projective_plane();
    CHECK(is_cohen_macaulay_reisner(rp2, FieldSpec::rationals()));
    CHECK_FALSE(is_cohen_macaulay_reisner(rp2, FieldSpec::prime(2)));
}

TEST_CASE("properties transport across the wreath construction") {
    const auto two_points = cx(2, {{0}, {1}});
    const auto r = property_transport(two_points, {1, 2});
    CHECK(r.vd_before);
    CHECK(r.vd_after);
    CHECK(r.shellable_before);
    CHECK(r.shellable_after);
    CHECK(r.constructible_before == TriBool::True);
    CHECK(r.constructible_after == TriBool::True);
    CHECK(r.cm_before);
    CHECK(r.cm_after);

    const auto bad = cx(4, {{0, 1}, {2, 3}});
    const auto rb = property_transport(bad, {1, 0, 0, 1});
    CHECK_FALSE(rb.vd_before);
    CHECK_FALSE(rb.vd_after);
    CHECK_FALSE(rb.shellable_before);
    CHECK_FALSE(rb.shellable_after);
    CHECK(rb.constructible_before == TriBool::False);
    CHECK(rb.constructible_after == TriBool::False);
    CHECK_FALSE(rb.cm_before);
    CHECK_FALSE(rb.cm_after);
}

TEST_CASE("tri-state names") {
    CHECK(std::string(to_string(TriBool::True)) == "true");
    CHECK(std::string(to_string(TriBool::False)) == "false");
    CHECK(std::string(to_string(TriBool::Unknown)) == "unknown");
}
