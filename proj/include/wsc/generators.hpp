#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/monomial.hpp"

namespace wsc::gen {

/* *************************************************************************
 * Seeded random instances for the property batteries
 *
 * Everything is driven by a std::mt19937_64 so a failure can be replayed
 * from its seed alone.
 * *************************************************************************/

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

// Relabel the vertices in use down to 0..k-1, dropping unused ambient ones.
SimplicialComplex compress_to_support(const SimplicialComplex& c);

// Nonvoid complex with at least one nonempty facet and no unused vertices.
SimplicialComplex random_complex(Rng& rng, int max_n);

std::vector<int> random_weights(Rng& rng, int n, int max_w);
std::vector<int> random_dims(Rng& rng, int n, int max_d);

// Proper nonzero ideal; generators are nonconstant with entries <= max_exp.
MonomialIdeal random_ideal(Rng& rng, int max_n, int max_gens, int max_exp);
MonomialIdeal random_ideal_exact(Rng& rng, int n, int max_gens, int max_exp);

struct TransportInstance {
    SimplicialComplex complex;
    std::vector<int> dims;
};

// Complex plus wreath dimensions whose wreath has at most facet_bound facets.
TransportInstance random_transport_instance(Rng& rng, int max_n, int max_d, std::size_t facet_bound);

}  // namespace wsc::gen
