#include <doctest.h>

#include <algorithm>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/errors.hpp"

using namespace wsc;

namespace {

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_facets(n, facets);
}

std::vector<Face> sorted(std::vector<Face> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("faces order and basic operations") {
    const Face a = Face::of({0, 1}, 3);
    const Face b = Face::of({0, 1, 2}, 3);
    const Face c = Face::of({0, 2}, 3);
    CHECK(a < b);      // shorter prefix first
    CHECK(b < c);      // {0,1,2} before {0,2} in the vertex-sequence order
    CHECK(a.size() == 2);
    CHECK(a.dim() == 1);
    CHECK(a.subset_of(b));
    CHECK(!c.subset_of(a));
    CHECK(a.united(c) == b);
    CHECK(b.minus(a) == Face::of({2}, 3));
    CHECK(a.to_string() == "{0,1}");
    CHECK(Face{0}.dim() == -1);
}

TEST_CASE("construction canonicalizes to a facet antichain") {
    const auto c = cx(3, {{0}, {0, 1}, {1, 0}, {2}});
    CHECK(c.facets().size() == 2);
    CHECK(c.facets() == std::vector<Face>{Face::of({0, 1}, 3), Face::of({2}, 3)});
    CHECK(c.contains(Face::of({0}, 3)));
    CHECK(!c.contains(Face::of({0, 2}, 3)));
    CHECK(c.has_vertex(2));
    CHECK(c.vertex_support() == std::vector<int>{0, 1, 2});
}

TEST_CASE("void and irrelevant complexes are distinct") {
    const auto none = cx(2, {});
    CHECK(none.is_void());
    CHECK(none.dim() == -2);
    CHECK_THROWS_AS((void)f_vector(none), Error);

    const auto irrelevant = cx(2, {{}});
    CHECK(!irrelevant.is_void());
    CHECK(irrelevant.is_irrelevant());
    CHECK(irrelevant.dim() == -1);
    CHECK(f_vector(irrelevant).counts.empty());

    CHECK(cx(0, {{}}).is_irrelevant());
}

TEST_CASE("invalid vertices are rejected") {
    CHECK_THROWS_AS((void)cx(2, {{0, 2}}), Error);
    CHECK_THROWS_AS((void)cx(0, {{0}}), Error);
    CHECK_THROWS_AS((void)cx(-1, {}), Error);
    CHECK_THROWS_AS((void)cx(64, {{63}}), Error);
}

TEST_CASE("f-vectors of the standard complexes") {
    CHECK(f_vector(cx(2, {{0}, {1}})).counts == std::vector<std::uint64_t>{2});
    CHECK(f_vector(boundary_simplex(2)).counts == std::vector<std::uint64_t>{3, 3});
    CHECK(f_vector(full_simplex(3)).counts == std::vector<std::uint64_t>{4, 6, 4, 1});
    CHECK(boundary_simplex(0).is_irrelevant());
    CHECK(full_simplex(0).dim() == 0);
    CHECK(reduced_euler_characteristic(boundary_simplex(2)) == -1);
    CHECK(reduced_euler_characteristic(full_simplex(3)) == 0);
}

TEST_CASE("link star and deletion at faces") {
    // deletion of an edge keeps its endpoints
    const auto c = cx(3, {{0, 1}, {1, 2}});
    const auto del = deletion(c, Face::of({0, 1}, 3));
    CHECK(del.facets() == std::vector<Face>{Face::of({0}, 3), Face::of({1, 2}, 3)});

    const auto lk = link(c, 1);
    CHECK(sorted(lk.facets()) == sorted({Face::of({0}, 3), Face::of({2}, 3)}));
    CHECK(link(c, Face::of({0, 1}, 3)).is_irrelevant());
    CHECK_THROWS_AS((void)link(c, Face::of({0, 2}, 3)), Error);  // non-face

    const auto st = star(c, 0);
    CHECK(st.facets() == std::vector<Face>{Face::of({0, 1}, 3)});
    CHECK_THROWS_AS((void)link(c, 3), Error);
}

TEST_CASE("minimal non-faces of a triangle with an isolated point") {
    const auto c = cx(4, {{0, 1}, {0, 2}, {1, 2}, {3}});
    CHECK(sorted(minimal_nonfaces(c)) ==
          sorted({Face::of({0, 1, 2}, 4), Face::of({0, 3}, 4), Face::of({1, 3}, 4),
                  Face::of({2, 3}, 4)}));
    CHECK(minimal_nonfaces(full_simplex(3)).empty());
    // an ambient vertex outside every facet is itself a minimal non-face
    CHECK(minimal_nonfaces(cx(2, {{0}})) == std::vector<Face>{Face::of({1}, 2)});
}

TEST_CASE("join concatenates vertex sets") {
    const auto a = cx(2, {{0}, {1}});
    const auto j = join(a, a);
    CHECK(j.ambient_vertices() == 4);
    CHECK(j.dim() == 1);
    CHECK(j.facets().size() == 4);
    CHECK(j.contains(Face::of({0, 2}, 4)));
    CHECK(!j.contains(Face::of({0, 1}, 4)));
    CHECK(sorted(minimal_nonfaces(j)) ==
          sorted({Face::of({0, 1}, 4), Face::of({2, 3}, 4)}));

    CHECK(join(a, cx(1, {})).is_void());
    // joining with the irrelevant complex only re-embeds (labels shift past it)
    CHECK(join(cx(1, {{}}), a).facets() ==
          std::vector<Face>{Face::of({1}, 3), Face::of({2}, 3)});
}

TEST_CASE("face closure respects its cap") {
    const auto c = full_simplex(10);
    CHECK(c.all_faces().size() == 2048);  // 2^11, empty face included
    CHECK_THROWS_AS((void)c.all_faces(100), Error);
}
