#pragma once

#include <cstddef>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/homology.hpp"

namespace wsc {

/* *************************************************************************
 * Combinatorial property checkers
 *
 * Vertex decomposability and shellability follow the nonpure definitions,
 * so they apply to every complex; constructibility and Cohen-Macaulayness
 * are pure-complex notions and report false on nonpure input.
 * *************************************************************************/

enum class TriBool { False, True, Unknown };
const char* to_string(TriBool value);

struct CheckerOptions {
    std::size_t shelling_facet_bound = 12;      // hard bound; beyond it the subset DP refuses
    std::size_t constructible_facet_bound = 8;  // soft bound; beyond it the answer is Unknown
    std::size_t vd_node_bound = 200000;         // recursion nodes before giving up
};

// Vertex decomposability. A witness, when requested, is the preorder list of
// shedding vertices: node vertex, then the link subtree, then the deletion
// subtree; leaves (single-facet complexes) contribute nothing.
bool is_vertex_decomposable(const SimplicialComplex& c, const CheckerOptions& opts = {},
                            std::vector<int>* witness = nullptr);
bool replay_vertex_decomposition(const SimplicialComplex& c, const std::vector<int>& witness);

// Shellability over all facets, nonpure definition: each added facet meets
// the earlier ones in a pure complex of one dimension lower.
bool is_shellable(const SimplicialComplex& c, const CheckerOptions& opts = {},
                  std::vector<Face>* order = nullptr);
bool is_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order);

// Recursive splitting into pure subcomplexes meeting in a pure codimension-1
// constructible complex; Unknown when a needed piece exceeds the facet bound.
TriBool is_constructible_bounded(const SimplicialComplex& c, const CheckerOptions& opts = {});

// Reisner criterion: every face link has vanishing reduced homology below
// its dimension.
bool is_cohen_macaulay_reisner(const SimplicialComplex& c, const FieldSpec& f = FieldSpec::rationals());

struct TransportReport {
    bool vd_before = false, vd_after = false;
    bool shellable_before = false, shellable_after = false;
    TriBool constructible_before = TriBool::Unknown, constructible_after = TriBool::Unknown;
    bool cm_before = false, cm_after = false;
};

// All four properties on c and on its mixed wreath with the given copy
// dimensions.
TransportReport property_transport(const SimplicialComplex& c, const std::vector<int>& dims,
                                   const CheckerOptions& opts = {},
                                   const FieldSpec& f = FieldSpec::rationals());

}  // namespace wsc
