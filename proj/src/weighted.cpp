#include "wsc/weighted.hpp"

#include <algorithm>

#include "wsc/errors.hpp"

namespace wsc {

WeightedComplex WeightedComplex::make(SimplicialComplex c, std::vector<int> w) {
    if (static_cast<int>(w.size()) != c.ambient_vertices())
        fail(ErrorCode::ArityMismatch,
             "expected " + std::to_string(c.ambient_vertices()) + " weights, got " + std::to_string(w.size()));
    for (int wi : w)
        if (wi < 1) fail(ErrorCode::InvalidWeight, "weights must be >= 1, got " + std::to_string(wi));
    return WeightedComplex{std::move(c), std::move(w)};
}

MonomialIdeal sr_ideal(const SimplicialComplex& c) {
    if (c.is_void()) fail(ErrorCode::VoidComplex, "the void complex has the unit face ideal");
    std::vector<Monomial> gens;
    for (Face m : minimal_nonfaces(c)) {
        Monomial g = Monomial::one(c.ambient_vertices());
        for (int i : m.vertices()) g.exps[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal::make(c.ambient_vertices(), std::move(gens));
}

namespace {

constexpr std::size_t kTransversalCap = std::size_t{1} << 20;

// Minimal transversals of a list of vertex sets, grown one set at a time.
std::vector<Face> minimal_transversals(const std::vector<Face>& sets) {
    std::vector<Face> cur = {Face{0}};
    for (Face s : sets) {
        std::vector<Face> next;
        for (Face t : cur) {
            if (t.bits & s.bits) {
                next.push_back(t);
                continue;
            }
            for (int v : s.vertices()) next.push_back(t.with(v));
        }
        // keep only inclusion-minimal sets
        std::sort(next.begin(), next.end(),
                  [](Face a, Face b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Face> kept;
        for (Face t : next) {
            bool covered = false;
            for (Face k : kept)
                if (k.subset_of(t)) {
                    covered = true;
                    break;
                }
            if (!covered) kept.push_back(t);
        }
        if (kept.size() > kTransversalCap) fail(ErrorCode::ResourceLimit, "transversal count exceeds cap");
        cur = std::move(kept);
    }
    return cur;
}

}  // namespace

SimplicialComplex complex_from_squarefree(const MonomialIdeal& a) {
    if (!a.is_squarefree()) fail(ErrorCode::NotSquarefree, "ideal has a non-squarefree generator");
    if (a.is_unit()) return SimplicialComplex::from_faces(a.n, {});
    std::vector<Face> supports;
    supports.reserve(a.gens.size());
    for (const auto& g : a.gens) supports.push_back(g.support());
    const std::uint64_t full = (a.n == 0) ? 0 : ((std::uint64_t{1} << a.n) - 1);
    std::vector<Face> facets;
    for (Face t : minimal_transversals(supports)) facets.push_back(Face{full & ~t.bits});
    return SimplicialComplex::from_faces(a.n, std::move(facets));
}

MonomialIdeal sr_ideal_weighted(const WeightedComplex& wc) {
    return weight_ideal(sr_ideal(wc.complex), wc.weights);
}

WreathResult polarize(const WeightedComplex& wc) {
    std::vector<int> dims;
    dims.reserve(wc.weights.size());
    for (int w : wc.weights) dims.push_back(w - 1);
    return mixed_wreath(wc.complex, dims);
}

std::vector<std::vector<std::pair<int, int>>> generators_as_copy_pairs(const MonomialIdeal& a,
                                                                       const WreathVertexMap& map) {
    if (a.n != map.total) fail(ErrorCode::ArityMismatch, "ideal does not live in the copy ring");
    std::vector<std::vector<std::pair<int, int>>> out;
    out.reserve(a.gens.size());
    for (const auto& g : a.gens) {
        if (!g.is_squarefree()) fail(ErrorCode::NotSquarefree, "generator " + g.to_string() + " is not squarefree");
        std::vector<std::pair<int, int>> pairs;
        for (int id : g.support().vertices()) pairs.push_back(map.source_of(id));
        std::sort(pairs.begin(), pairs.end());
        out.push_back(std::move(pairs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wsc
