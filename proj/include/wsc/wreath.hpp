#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wsc/complex.hpp"

namespace wsc {

/* *************************************************************************
 * Vertex bookkeeping for suspension / reduced-join / wreath constructions
 *
 * Vertex i of the source complex becomes copies (i,0), ..., (i,d_i); copy
 * (i,j) gets the flattened id offsets[i] + j. Copy order is fixed so the
 * polarized ideal's variables line up with the standard monomial
 * polarization ring.
 * *************************************************************************/

struct WreathVertexMap {
    int original_n = 0;
    std::vector<int> copies;   // d_i + 1 per original vertex
    std::vector<int> offsets;  // offsets[i] = sum of copies[0..i)
    int total = 0;

    static WreathVertexMap from_dims(const std::vector<int>& dims);

    int copy_id(int original, int copy) const { return offsets[static_cast<std::size_t>(original)] + copy; }
    // (original vertex, copy index) of a flattened id.
    std::pair<int, int> source_of(int id) const;
};

struct WreathResult {
    SimplicialComplex complex;
    WreathVertexMap map;
};

// Facets: for each facet F of c, take all copies of every vertex in F and,
// independently per vertex outside F, all copies but one.
WreathResult mixed_wreath(const SimplicialComplex& c, const std::vector<int>& dims);

// Two copies of v; equals mixed_wreath with d = e_v.
WreathResult one_point_suspension(const SimplicialComplex& c, int v);

// d-fold iterated one-point suspension at v; equals mixed_wreath with d.e_v.
WreathResult reduced_join(const SimplicialComplex& c, int v, int d);

struct WreathFCounts {
    std::uint64_t f0 = 0;
    std::uint64_t f_top = 0;

    friend bool operator==(const WreathFCounts&, const WreathFCounts&) = default;
};

// Closed f-vector formulas for the ends of the wreath f-vector:
// f0 = sum(d_i) + f0(c), f_top = sum over top-dimensional facets F of the
// product of (d_j + 1) over the complement of F.
WreathFCounts wreath_f_formula(const SimplicialComplex& c, const std::vector<int>& dims);

}  // namespace wsc
