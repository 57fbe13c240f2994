#include <doctest.h>

#include <vector>

#include "wsc/complex.hpp"
#include "wsc/errors.hpp"
#include "wsc/homology.hpp"
#include "wsc/monomial.hpp"
#include "wsc/oracles.hpp"

using namespace wsc;

namespace {

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_facets(n, facets);
}

Monomial mono(std::vector<std::uint32_t> exps) { return Monomial{std::move(exps)}; }

MonomialIdeal ideal(int n, std::vector<std::vector<std::uint32_t>> rows) {
    std::vector<Monomial> gens;
    for (auto& r : rows) gens.push_back(mono(std::move(r)));
    return MonomialIdeal::make(n, std::move(gens));
}

const FieldSpec kQ = FieldSpec::rationals();

// 0-based minimal 6-vertex triangulation of the real projective plane
SimplicialComplex projective_plane() {
    return cx(6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                  {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("reduced homology of small complexes") {
    using V = std::vector<std::int64_t>;
    CHECK(reduced_homology_dims(cx(1, {{}}), kQ) == V{1});      // irrelevant: only H~_{-1}
    CHECK(reduced_homology_dims(cx(1, {{0}}), kQ) == V{0, 0});  // point
    CHECK(reduced_homology_dims(boundary_simplex(2), kQ) == V{0, 0, 1});
    CHECK(reduced_homology_dims(cx(2, {{0}, {1}}), kQ) == V{0, 1});  // two points
    CHECK(reduced_homology_dims(cx(0, {}), kQ).empty());             // void

    const auto oct = cx(6, {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                            {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
    CHECK(reduced_homology_dims(oct, kQ) == V{0, 0, 0, 1});
}

TEST_CASE("projective plane homology depends on the characteristic") {
    using V = std::vector<std::int64_t>;
    const auto rp2 = projective_plane();
    CHECK(reduced_homology_dims(rp2, kQ) == V{0, 0, 0, 0});
    CHECK(reduced_homology_dims(rp2, FieldSpec::prime(2)) == V{0, 0, 1, 1});
    CHECK(reduced_homology_dims(rp2, FieldSpec::prime(3)) == V{0, 0, 0, 0});
}

TEST_CASE("field validation") {
    CHECK_THROWS_AS((void)FieldSpec::prime(4), Error);
    CHECK_THROWS_AS((void)FieldSpec::prime(1), Error);
    CHECK(FieldSpec::prime(32003).to_string() == "32003");
    CHECK(kQ.to_string() == "0");
}

TEST_CASE("upper Koszul complexes pick out syzygy degrees") {
    const auto a = ideal(2, {{2, 0}, {1, 1}});
    // at x^2 y, both variables can be stripped: two disconnected points
    const auto k = upper_koszul(a, mono({2, 1}));
    CHECK(k.ambient_vertices() == 2);
    CHECK(k.facets() == std::vector<Face>{Face::of({0}, 2), Face::of({1}, 2)});
    // at the generator x^2 nothing can be stripped: the irrelevant complex
    CHECK(upper_koszul(a, mono({2, 0})) == cx(2, {{}}));
    // at a degree outside the ideal the complex is void
    CHECK(upper_koszul(a, mono({0, 1})).is_void());

    const auto lat = lcm_lattice(a);
    CHECK(lat == std::vector<Monomial>{mono({0, 0}), mono({2, 0}), mono({1, 1}), mono({2, 1})});
}

TEST_CASE("Betti tables of edge ideals") {
    // triangle: 3 generators, 2 linear syzygies
    const auto tri = ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    const auto bt = betti_table(tri, kQ);
    CHECK(bt.beta_total(0) == 3);
    CHECK(bt.beta_total(1) == 2);
    CHECK(bt.beta(1, mono({1, 1, 1})) == 2);
    CHECK(bt.projdim_ideal() == 1);
    CHECK(bt.projdim_quotient() == 2);
    CHECK(bt.regularity() == 2);
    CHECK(depth_quotient(tri, kQ) == 1);

    // 4-cycle x1x2, x2x3, x3x4, x4x1
    const auto c4 = ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}});
    const auto b4 = betti_table(c4, kQ);
    const std::map<std::pair<int, std::uint64_t>, std::uint64_t> expected = {
        {{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}};
    CHECK(b4.graded() == expected);
    CHECK(b4.beta(2, mono({1, 1, 1, 1})) == 1);
    CHECK(b4.regularity() == 2);
    CHECK(b4.projdim_quotient() == 3);
    CHECK(depth_quotient(c4, kQ) == 1);
}

TEST_CASE("Betti tables of non-squarefree ideals") {
    const auto a = ideal(2, {{2, 0}, {1, 1}});
    const auto bt = betti_table(a, kQ);
    CHECK(bt.beta_total(0) == 2);
    CHECK(bt.beta_total(1) == 1);
    CHECK(bt.beta(1, mono({2, 1})) == 1);
    CHECK(bt.projdim_ideal() == 1);
    CHECK(bt.regularity() == 2);

    // principal ideals are free modules
    const auto p = betti_table(ideal(3, {{1, 1, 1}}), kQ);
    CHECK(p.multigraded == std::vector<BettiEntry>{BettiEntry{0, mono({1, 1, 1}), 1}});
    CHECK(p.projdim_ideal() == 0);
    CHECK(p.regularity() == 3);
}

TEST_CASE("Betti table rejects degenerate input") {
    CHECK_THROWS_AS((void)betti_table(ideal(2, {}), kQ), Error);
    CHECK_THROWS_AS((void)betti_table(ideal(2, {{0, 0}}), kQ), Error);
}

TEST_CASE("independent strand-by-strand computation agrees") {
    const std::vector<MonomialIdeal> fixtures = {
        ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}),
        ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}),
        ideal(2, {{2, 0}, {1, 1}}),
        ideal(3, {{2, 3, 0}, {0, 3, 4}, {2, 0, 4}}),
        ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}),
    };
    for (const auto& a : fixtures) {
        CAPTURE(a.gens.size());
        CHECK(oracle::taylor_betti(a) == betti_table(a, kQ));
    }
}

TEST_CASE("integer polynomial arithmetic") {
    const auto p = IntPoly{{1, -2, 1}};
    CHECK(IntPoly::one_minus_t_pow(2) == p);
    CHECK(IntPoly::one_minus_t_pow(0) == IntPoly::one());
    CHECK(p.times(IntPoly{{1, 1}}) == IntPoly{{1, -1, -1, 1}});
    CHECK(p.plus(IntPoly{{0, 2}}) == IntPoly{{1, 0, 1}});
    CHECK(p.minus(p) == IntPoly::zero());
    CHECK(IntPoly{{1, 0, -1}}.to_string() == "1 - t^2");
    CHECK(IntPoly::zero().degree() == -1);

    IntPoly q;
    q.add_term(2, 5);
    q.add_term(2, -5);
    q.normalize();
    CHECK(q == IntPoly::zero());
}

TEST_CASE("Hilbert series numerators") {
    CHECK(hilbert_numerator(ideal(1, {{1}})) == IntPoly{{1, -1}});
    CHECK(hilbert_numerator(ideal(2, {{1, 1}})) == IntPoly{{1, 0, -1}});
    CHECK(hilbert_numerator(ideal(2, {{1, 0}, {0, 1}})) == IntPoly{{1, -2, 1}});

    const auto tri = ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(hilbert_numerator(tri) == IntPoly{{1, 0, -3, 2}});
}
