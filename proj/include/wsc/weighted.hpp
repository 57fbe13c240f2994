#pragma once

#include <utility>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/monomial.hpp"
#include "wsc/wreath.hpp"

namespace wsc {

/* *************************************************************************
 * Weighted complexes and the Stanley-Reisner correspondence
 *
 * A weighted complex is a complex plus a weight >= 1 per ambient vertex.
 * Its ideal raises each vertex of a minimal non-face to the vertex weight;
 * its polarization replaces vertex i by w_i copies via the wreath
 * construction with copy dimensions w_i - 1.
 * *************************************************************************/

struct WeightedComplex {
    SimplicialComplex complex;
    std::vector<int> weights;

    static WeightedComplex make(SimplicialComplex c, std::vector<int> w);
};

// Squarefree ideal generated by the minimal non-faces.
MonomialIdeal sr_ideal(const SimplicialComplex& c);

// Inverse correspondence: faces are the sets containing no generator support.
// Facets come out as complements of the minimal transversals of the supports.
SimplicialComplex complex_from_squarefree(const MonomialIdeal& a);

// Generators prod_{i in M} x_i^{w_i} over minimal non-faces M.
MonomialIdeal sr_ideal_weighted(const WeightedComplex& wc);

WreathResult polarize(const WeightedComplex& wc);

// Generators rewritten as sorted (source vertex, copy) pair lists, so ideals
// over different copy-block layouts can be compared vertex by vertex.
std::vector<std::vector<std::pair<int, int>>> generators_as_copy_pairs(const MonomialIdeal& a,
                                                                       const WreathVertexMap& map);

}  // namespace wsc
