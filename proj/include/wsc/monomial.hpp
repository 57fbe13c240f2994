#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/wreath.hpp"

namespace wsc {

/* *************************************************************************
 * Monomials and monomial ideals in k[x_1..x_n]
 *
 * A monomial is its exponent vector; an ideal is its unique minimal
 * generating set, kept sorted by total degree with ties broken on the
 * exponent vector (earlier variables weigh more). The zero ideal has no
 * generators; the unit ideal is generated by 1 and is only a legal input
 * where explicitly stated.
 * *************************************************************************/

struct Monomial {
    std::vector<std::uint32_t> exps;

    static Monomial one(int n) { return Monomial{std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)}; }
    static Monomial variable(int n, int i, std::uint32_t e = 1);

    int vars() const { return static_cast<int>(exps.size()); }
    std::uint64_t total_degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    Face support() const;

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;
    Monomial gcd(const Monomial& m) const;
    // Componentwise truncated quotient: max(exps - m.exps, 0).
    Monomial quotient_floor(const Monomial& m) const;

    std::string to_string() const;  // e.g. "x1^2*x3", "1"

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Degree first, then exponent vectors compared front to back (higher earlier
// exponent sorts first within a degree).
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;  // minimal generators in grlex order

    // Minimalizes: drops duplicates and any generator divisible by another.
    static MonomialIdeal make(int n, std::vector<Monomial> gens);

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
    bool is_proper() const { return !is_zero() && !is_unit(); }
    bool is_squarefree() const;
    bool contains(const Monomial& m) const;
    Monomial gens_lcm() const;  // 1 for the zero ideal
    Face variable_support() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// --- ideal arithmetic ----------------------------------------------------

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
// a : m^infinity, i.e. generators with the exponents on supp(m) zeroed.
MonomialIdeal saturate(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal power(const MonomialIdeal& a, int s);

// --- weighting and polarization ------------------------------------------

// Exponent map b_i -> w_i * b_i applied to every generator. Weights must be
// >= 1; the generator count is unchanged.
MonomialIdeal weight_ideal(const MonomialIdeal& a, const std::vector<int>& w);

struct PolarizeIdealResult {
    MonomialIdeal ideal;       // squarefree, in the copy ring
    WreathVertexMap map;       // variable i gets max(1, max exponent of x_i) copies
};

// Standard polarization: x_i^b inside a generator becomes the product of the
// first b copies of x_i.
PolarizeIdealResult polarize_ideal(const MonomialIdeal& a);

// --- graphs and edge ideals ----------------------------------------------

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted, deduped

    static Graph make(int n, std::vector<std::pair<int, int>> edges);
    bool is_bipartite() const;
};

MonomialIdeal edge_ideal(const Graph& g);

}  // namespace wsc
