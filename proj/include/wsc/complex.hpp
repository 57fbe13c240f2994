#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "wsc/errors.hpp"

namespace wsc {

/* *************************************************************************
 * Faces
 *
 * A face is a subset of the ambient vertex set [0, n), stored as a 64-bit
 * mask; ambient complexes are capped at 63 vertices so every face fits a
 * machine word. The empty face (mask 0) is a valid face and represents the
 * empty simplex.
 * *************************************************************************/

struct Face {
    std::uint64_t bits = 0;

    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t mask) : bits(mask) {}

    static Face of(const std::vector<int>& vertices, int ambient_n);

    int size() const { return std::popcount(bits); }
    int dim() const { return size() - 1; }
    bool empty() const { return bits == 0; }

    bool contains(int v) const { return (bits >> v) & 1u; }
    bool subset_of(Face other) const { return (bits & other.bits) == bits; }

    Face with(int v) const { return Face(bits | (std::uint64_t{1} << v)); }
    Face without(int v) const { return Face(bits & ~(std::uint64_t{1} << v)); }
    Face united(Face other) const { return Face(bits | other.bits); }
    Face intersected(Face other) const { return Face(bits & other.bits); }
    Face minus(Face other) const { return Face(bits & ~other.bits); }

    std::vector<int> vertices() const;
    std::string to_string() const;

    friend constexpr bool operator==(Face a, Face b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(Face a, Face b) { return a.bits != b.bits; }
};

// Lexicographic order on the strictly increasing vertex sequences, so
// {0,1} < {0,1,2} < {0,2}; this is the canonical facet order everywhere.
constexpr bool operator<(Face a, Face b) {
    if (a.bits == b.bits) return false;
    const std::uint64_t diff = a.bits ^ b.bits;
    const std::uint64_t low = diff & (~diff + 1);
    if (a.bits & low) return (b.bits & ~(low - 1)) != 0;
    return (a.bits & ~(low - 1)) == 0;
}

/* *************************************************************************
 * Simplicial complexes
 * *************************************************************************/

struct FVector {
    // counts[i] = number of i-dimensional faces; empty for the irrelevant
    // complex (dimension -1).
    std::vector<std::uint64_t> counts;

    friend bool operator==(const FVector&, const FVector&) = default;
};

// A finite abstract simplicial complex on ambient vertices [0, n), stored by
// its inclusion-maximal faces. The void complex (no facets at all) and the
// irrelevant complex (single empty facet) are distinct values.
class SimplicialComplex {
public:
    static constexpr int kMaxVertices = 63;

    SimplicialComplex() = default;

    // Canonicalizes arbitrary input: drops duplicate vertices inside faces,
    // absorbs non-maximal faces, sorts facets lexicographically.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& raw_faces);

    // Same canonicalization, mask form. Trusted ids (must already be < n).
    static SimplicialComplex from_faces(int n, std::vector<Face> faces);

    int ambient_vertices() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].empty(); }

    // dim of the void complex is reported as -2 (no faces at all); the
    // irrelevant complex has dim -1.
    int dim() const;
    bool is_pure() const;

    bool contains(Face f) const;
    bool has_vertex(int v) const { return contains(Face{}.with(v)); }
    // Vertices that actually appear in some face.
    std::vector<int> vertex_support() const;

    // Downward closure, empty face included (void complex -> no faces).
    // Guarded by a cap on the number of faces produced.
    std::vector<Face> all_faces(std::size_t cap = kDefaultFaceCap) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    static constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 22;

private:
    int n_ = 0;
    std::vector<Face> facets_;
};

/* *************************************************************************
 * Elementary operations
 * *************************************************************************/

FVector f_vector(const SimplicialComplex& c);

// All M with M not a face but every M \ {i} a face, sorted canonically.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

// link_c(v) = { G : v not in G, G + {v} a face }, on the same ambient n.
SimplicialComplex link(const SimplicialComplex& c, int v);

// link_c(f) = { G : G disjoint from f, G + f a face }; link of a vertex is
// the |f| = 1 case, link of the empty face is c itself.
SimplicialComplex link(const SimplicialComplex& c, Face f);

// star_c(v) = {v} * link_c(v).
SimplicialComplex star(const SimplicialComplex& c, int v);

// All faces G with f not a subset of G. Deleting a non-face is the identity;
// deleting the empty face yields the void complex.
SimplicialComplex deletion(const SimplicialComplex& c, Face f);

// Join on disjoint vertex sets; b's vertices are shifted by a's ambient n.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex full_simplex(int d);
SimplicialComplex boundary_simplex(int d);

// Reduced Euler characteristic: sum over all faces (empty included) of
// (-1)^dim.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& c);

}  // namespace wsc
