#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/monomial.hpp"

namespace wsc {

/* *************************************************************************
 * Coefficients
 *
 * Homology runs over the rationals (exact, GMP-backed) or a prime field.
 * The rationals are the default everywhere a field is optional.
 * *************************************************************************/

struct FieldSpec {
    long long p = 0;  // 0 = rationals, otherwise a prime < 2^31

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(long long p);  // validates primality

    bool is_rational() const { return p == 0; }
    std::string to_string() const { return p == 0 ? "0" : std::to_string(p); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Reduced homology dimensions: result[k] = dim of reduced H_{k-1}, for k up
// to dim(c)+1; empty for the void complex. The alternating sum is checked
// against the reduced Euler characteristic on every call.
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& f);

/* *************************************************************************
 * Upper Koszul complexes and Betti numbers
 *
 * K^b(I) consists of the subsets W of supp(b) with x^b / x_W in I; the
 * multigraded Betti number beta_{i,b}(I) is the dimension of reduced
 * H_{i-1} of K^b(I). Nonzero entries only occur for b in the lcm lattice
 * of the generators.
 * *************************************************************************/

SimplicialComplex upper_koszul(const MonomialIdeal& a, const Monomial& b);

// All lcms of generator subsets, 1 included, sorted in grlex order.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& a);

struct BettiEntry {
    int i = 0;  // homological degree in the resolution of the ideal (beta_0 counts generators)
    Monomial degree;
    std::uint64_t value = 0;

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct BettiTable {
    int n = 0;
    std::vector<BettiEntry> multigraded;  // nonzero entries, sorted by (i, grlex degree)

    std::uint64_t beta(int i, const Monomial& b) const;
    std::uint64_t beta_total(int i) const;
    // (i, total degree) -> sum of multigraded values
    std::map<std::pair<int, std::uint64_t>, std::uint64_t> graded() const;

    int projdim_ideal() const;                         // max i with a nonzero entry
    int projdim_quotient() const { return projdim_ideal() + 1; }
    std::int64_t regularity() const;                   // max total degree minus i

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Full minimal Betti table of a proper ideal over the chosen field.
BettiTable betti_table(const MonomialIdeal& a, const FieldSpec& f = FieldSpec::rationals());

// depth(R/I) = n - pd(R/I), per Auslander-Buchsbaum.
int depth_quotient(const MonomialIdeal& a, const FieldSpec& f = FieldSpec::rationals());

/* *************************************************************************
 * Hilbert series
 * *************************************************************************/

struct IntPoly {
    std::vector<std::int64_t> c;  // c[k] = coefficient of t^k, trailing zeros trimmed

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return IntPoly{{1}}; }
    // (1 - t)^k expanded
    static IntPoly one_minus_t_pow(int k);

    void add_term(std::size_t k, std::int64_t v);
    void normalize();
    std::int64_t degree() const { return static_cast<std::int64_t>(c.size()) - 1; }  // -1 for zero

    IntPoly plus(const IntPoly& o) const;
    IntPoly minus(const IntPoly& o) const;
    IntPoly times(const IntPoly& o) const;
    std::string to_string() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

// Numerator of the Hilbert series of R/I over (1-t)^n, by inclusion-
// exclusion over generator subsets.
IntPoly hilbert_numerator(const MonomialIdeal& a);

}  // namespace wsc
