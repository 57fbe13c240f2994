#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wsc/homology.hpp"
#include "wsc/monomial.hpp"

namespace wsc {

/* *************************************************************************
 * Primary decomposition of monomial ideals
 *
 * Decomposition runs by splitting on the first generator that is not a pure
 * power, at its lowest-index variable. Leaves are irreducible (pure-power
 * generated); pruning them gives the unique irredundant irreducible
 * decomposition. Merging equal-radical leaves by intersection yields the
 * canonical primary decomposition; merged components can pick up mixed
 * generators, so only leaves are guaranteed pure-power generated.
 * *************************************************************************/

struct PrimeIdeal {
    int n = 0;
    Face vars;

    MonomialIdeal to_ideal() const;
    int height() const { return vars.size(); }

    friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

bool prime_less(const PrimeIdeal& a, const PrimeIdeal& b);  // by height, then vertex order

struct PrimaryComponent {
    MonomialIdeal ideal;
    Face radical_vars;  // support of the radical, a prime

    friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

struct Decomposition {
    std::vector<PrimaryComponent> components;  // canonical order, pairwise distinct radicals

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Canonical order on ideals: generator lists compared entrywise in grlex.
bool ideal_order_less(const MonomialIdeal& a, const MonomialIdeal& b);

// Unique irredundant irreducible decomposition, canonically sorted. The
// intersection is re-checked against the input before returning.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a);

// Irredundant primary decomposition: irreducible pieces merged by radical.
Decomposition primary_decomposition(const MonomialIdeal& a);

// Radicals of the primary components.
std::vector<PrimeIdeal> associated_primes(const MonomialIdeal& a);

// Independent route: primes realized as I : m over divisors m of the
// generator lcm. Agrees with associated_primes; used for cross-checking.
std::vector<PrimeIdeal> associated_primes_witnessed(const MonomialIdeal& a);

// (minimal, embedded) split of the associated primes.
std::pair<std::vector<PrimeIdeal>, std::vector<PrimeIdeal>> minimal_and_embedded(const MonomialIdeal& a);

int height(const MonomialIdeal& a);
int dim_quotient(const MonomialIdeal& a);  // n - height

// depth == dim, computed through the Betti table and the decomposition.
bool is_cm_quotient(const MonomialIdeal& a, const FieldSpec& f = FieldSpec::rationals());

struct WeightedDecompositionReport {
    bool matches = false;
    std::vector<MonomialIdeal> expected;  // weighted components of I, canonically sorted
    std::vector<MonomialIdeal> actual;    // components of the weighted ideal
};

// The primary decomposition of the weighted ideal must be the weighted
// decomposition of I, component by component.
WeightedDecompositionReport weighted_decomposition_check(const MonomialIdeal& a, const std::vector<int>& w);

// s-th symbolic power: intersection over minimal primes P of the saturation
// of I^s at the product of the variables outside P.
MonomialIdeal symbolic_power(const MonomialIdeal& a, int s);

struct TorsionFreeReport {
    int checked_upto = 0;
    bool ass_stable = true;       // Ass(R/I^s) inside Ass(R/I) for all probed s
    bool symbolic_match = true;   // I^(s) == I^s for all probed s
    int first_ass_failure = 0;    // 0 = none
    int first_symbolic_failure = 0;
    std::vector<PrimeIdeal> extra_primes;  // new primes at the first failure
    std::vector<Monomial> symbolic_witnesses;  // in I^(s) but not I^s at the first failure
};

// Bounded probe of normal torsion-freeness.
TorsionFreeReport normally_torsion_free_upto(const MonomialIdeal& a, int upto);

}  // namespace wsc
