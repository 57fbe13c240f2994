#pragma once

#include <cstdint>
#include <vector>

#include "wsc/homology.hpp"
#include "wsc/monomial.hpp"

namespace wsc::oracle {

/* *************************************************************************
 * Cross-check oracles
 *
 * Everything here recomputes a quantity along a different route than the
 * main library: Betti numbers come from the lcm-strands of the Taylor
 * complex with a dense fraction-free elimination, and ideal operations are
 * checked monomial by monomial over a bounded degree box. Slow on purpose;
 * only ever run on small instances.
 * *************************************************************************/

// Multigraded Betti numbers of an ideal from the Taylor complex: the strand
// at multidegree b has one basis element per generator subset with lcm b,
// and beta_{i,b} is the homology of the strand at subsets of size i+1.
// Rationals only. Generator count is capped at 20.
BettiTable taylor_betti(const MonomialIdeal& a);

// All monomials dividing box, in no particular order, 1 included.
std::vector<Monomial> monomials_in_box(const Monomial& box);

// Membership test for a power of an ideal by recursive divisor peeling:
// m lies in a^s iff some generator g divides m with m/g in a^{s-1}.
bool power_member(const MonomialIdeal& a, const Monomial& m, int s);

// Rank of a dense integer matrix over the rationals (fraction-free
// Bareiss elimination on arbitrary-precision integers).
std::size_t integer_rank(std::vector<std::vector<long long>> mat);

}  // namespace wsc::oracle
