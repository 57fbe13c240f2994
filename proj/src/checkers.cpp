#include "wsc/checkers.hpp"

#include <algorithm>
#include <map>

#include "wsc/errors.hpp"
#include "wsc/wreath.hpp"

namespace wsc {

const char* to_string(TriBool value) {
    switch (value) {
        case TriBool::False: return "false";
        case TriBool::True: return "true";
        case TriBool::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::vector<std::uint64_t> facet_key(const SimplicialComplex& c) {
    std::vector<std::uint64_t> key;
    key.reserve(c.facets().size());
    for (Face f : c.facets()) key.push_back(f.bits);
    return key;
}

// Shedding vertex: no facet of the deletion is a face of the link.
bool is_shedding(const SimplicialComplex& del, const SimplicialComplex& lk) {
    for (Face f : del.facets())
        if (lk.contains(f)) return false;
    return true;
}

struct VdSearch {
    const CheckerOptions& opts;
    std::size_t nodes = 0;
    std::map<std::vector<std::uint64_t>, bool> memo;

    bool run(const SimplicialComplex& c, std::vector<int>* witness) {
        if (++nodes > opts.vd_node_bound)
            fail(ErrorCode::ResourceLimit, "vertex decomposability search exceeds node bound");
        if (c.facets().size() == 1) return true;

        std::vector<std::uint64_t> key;
        if (!witness) {
            key = facet_key(c);
            const auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        bool ok = false;
        for (int v : c.vertex_support()) {
            const SimplicialComplex lk = link(c, v);
            const SimplicialComplex del = deletion(c, Face{}.with(v));
            if (!is_shedding(del, lk)) continue;
            std::vector<int> sub_link, sub_del;
            if (run(lk, witness ? &sub_link : nullptr) && run(del, witness ? &sub_del : nullptr)) {
                if (witness) {
                    witness->push_back(v);
                    witness->insert(witness->end(), sub_link.begin(), sub_link.end());
                    witness->insert(witness->end(), sub_del.begin(), sub_del.end());
                }
                ok = true;
                break;
            }
        }
        if (!witness) memo.emplace(std::move(key), ok);
        return ok;
    }
};

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& c, const CheckerOptions& opts, std::vector<int>* witness) {
    if (c.is_void()) fail(ErrorCode::VoidComplex, "vertex decomposability of the void complex");
    if (witness) witness->clear();
    VdSearch search{opts};
    return search.run(c, witness);
}

namespace {

bool replay_rec(const SimplicialComplex& c, const std::vector<int>& w, std::size_t& at) {
    if (c.facets().size() == 1) return true;
    if (at >= w.size()) return false;
    const int v = w[at++];
    if (!c.has_vertex(v)) return false;
    const SimplicialComplex lk = link(c, v);
    const SimplicialComplex del = deletion(c, Face{}.with(v));
    if (!is_shedding(del, lk)) return false;
    return replay_rec(lk, w, at) && replay_rec(del, w, at);
}

}  // namespace

bool replay_vertex_decomposition(const SimplicialComplex& c, const std::vector<int>& witness) {
    if (c.is_void()) return false;
    std::size_t at = 0;
    return replay_rec(c, witness, at) && at == witness.size();
}

namespace {

// Can facet k extend the shelled set S? Every old intersection with facet k
// must lie inside one of codimension 1.
bool can_extend(const std::vector<Face>& facets, const std::vector<std::vector<Face>>& meet, std::uint32_t s,
                std::size_t k) {
    const int want = facets[k].size() - 1;
    for (std::size_t j = 0; j < facets.size(); ++j) {
        if (!((s >> j) & 1)) continue;
        const Face c = meet[k][j];
        bool inside = false;
        for (std::size_t j2 = 0; j2 < facets.size(); ++j2) {
            if (!((s >> j2) & 1)) continue;
            if (meet[k][j2].size() == want && c.subset_of(meet[k][j2])) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

}  // namespace

bool is_shellable(const SimplicialComplex& c, const CheckerOptions& opts, std::vector<Face>* order) {
    if (c.is_void()) fail(ErrorCode::VoidComplex, "shellability of the void complex");
    const std::vector<Face>& facets = c.facets();
    const std::size_t t = facets.size();
    if (t > opts.shelling_facet_bound)
        fail(ErrorCode::ResourceLimit, "facet count " + std::to_string(t) + " exceeds the shelling bound");
    if (order) order->clear();
    if (t == 1) {
        if (order) *order = facets;
        return true;
    }

    std::vector<std::vector<Face>> meet(t, std::vector<Face>(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) meet[i][j] = facets[i].intersected(facets[j]);

    // forward DP over placed-facet subsets, remembering one predecessor
    const std::uint32_t full = (std::uint32_t{1} << t) - 1;
    std::vector<std::int8_t> last(std::size_t{1} << t, -1);
    for (std::size_t k = 0; k < t; ++k) last[std::uint32_t{1} << k] = static_cast<std::int8_t>(k);
    for (std::uint32_t s = 1; s < full; ++s) {
        if (last[s] < 0) continue;
        for (std::size_t k = 0; k < t; ++k) {
            if ((s >> k) & 1) continue;
            const std::uint32_t ns = s | (std::uint32_t{1} << k);
            if (last[ns] >= 0) continue;
            if (can_extend(facets, meet, s, k)) last[ns] = static_cast<std::int8_t>(k);
        }
    }
    if (last[full] < 0) return false;
    if (order) {
        std::uint32_t s = full;
        while (s) {
            const auto k = static_cast<std::size_t>(last[s]);
            order->push_back(facets[k]);
            s &= ~(std::uint32_t{1} << k);
        }
        std::reverse(order->begin(), order->end());
    }
    return true;
}

bool is_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order) {
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets()) return false;
    const std::size_t t = order.size();
    std::vector<std::vector<Face>> meet(t, std::vector<Face>(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) meet[i][j] = order[i].intersected(order[j]);
    for (std::size_t k = 1; k < t; ++k) {
        const int want = order[k].size() - 1;
        for (std::size_t j = 0; j < k; ++j) {
            bool inside = false;
            for (std::size_t j2 = 0; j2 < k; ++j2)
                if (meet[k][j2].size() == want && meet[k][j].subset_of(meet[k][j2])) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
    }
    return true;
}

namespace {

// Common faces of two subcomplexes given by facet lists.
SimplicialComplex intersection_complex(int n, const std::vector<Face>& a, const std::vector<Face>& b) {
    std::vector<Face> out;
    out.reserve(a.size() * b.size());
    for (Face fa : a)
        for (Face fb : b) out.push_back(fa.intersected(fb));
    return SimplicialComplex::from_faces(n, std::move(out));
}

struct ConstructibleSearch {
    const CheckerOptions& opts;
    std::map<std::vector<std::uint64_t>, TriBool> memo;

    TriBool run(const SimplicialComplex& c) {
        if (c.facets().size() == 1) return TriBool::True;  // simplex
        if (c.is_void() || !c.is_pure()) return TriBool::False;
        if (c.facets().size() > opts.constructible_facet_bound) return TriBool::Unknown;

        std::vector<std::uint64_t> key = facet_key(c);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo.emplace(key, TriBool::Unknown);  // provisional; cycles cannot occur (dimension drops)

        const std::vector<Face>& facets = c.facets();
        const std::size_t t = facets.size();
        const int d = c.dim();
        const std::uint32_t full = (std::uint32_t{1} << t) - 1;
        TriBool best = TriBool::False;
        // facet bipartitions; facet 0 stays on the left, so odd proper masks
        for (std::uint32_t left_mask = 1; left_mask < full && best != TriBool::True; left_mask += 2) {
            std::vector<Face> left, right;
            for (std::size_t k = 0; k < t; ++k) ((left_mask >> k) & 1 ? left : right).push_back(facets[k]);
            const SimplicialComplex inter = intersection_complex(c.ambient_vertices(), left, right);
            if (inter.is_void() || inter.dim() != d - 1 || !inter.is_pure()) continue;

            const TriBool r1 = run(SimplicialComplex::from_faces(c.ambient_vertices(), left));
            if (r1 == TriBool::False) continue;
            const TriBool r2 = run(SimplicialComplex::from_faces(c.ambient_vertices(), right));
            if (r2 == TriBool::False) continue;
            const TriBool ri = run(inter);
            if (ri == TriBool::False) continue;
            if (r1 == TriBool::True && r2 == TriBool::True && ri == TriBool::True)
                best = TriBool::True;
            else
                best = TriBool::Unknown;
        }
        memo[key] = best;
        return best;
    }
};

}  // namespace

TriBool is_constructible_bounded(const SimplicialComplex& c, const CheckerOptions& opts) {
    if (c.is_void()) fail(ErrorCode::VoidComplex, "constructibility of the void complex");
    ConstructibleSearch search{opts};
    return search.run(c);
}

bool is_cohen_macaulay_reisner(const SimplicialComplex& c, const FieldSpec& f) {
    if (c.is_void()) fail(ErrorCode::VoidComplex, "Cohen-Macaulayness of the void complex");
    if (!c.is_pure()) return false;
    for (Face face : c.all_faces()) {
        const SimplicialComplex lk = link(c, face);
        const int d = lk.dim();
        const std::vector<std::int64_t> h = reduced_homology_dims(lk, f);
        for (int k = 0; k <= d && k < static_cast<int>(h.size()); ++k)
            if (h[static_cast<std::size_t>(k)] != 0) return false;
    }
    return true;
}

TransportReport property_transport(const SimplicialComplex& c, const std::vector<int>& dims,
                                   const CheckerOptions& opts, const FieldSpec& f) {
    const SimplicialComplex w = mixed_wreath(c, dims).complex;
    TransportReport r;
    r.vd_before = is_vertex_decomposable(c, opts);
    r.vd_after = is_vertex_decomposable(w, opts);
    r.shellable_before = is_shellable(c, opts);
    r.shellable_after = is_shellable(w, opts);
    r.constructible_before = is_constructible_bounded(c, opts);
    r.constructible_after = is_constructible_bounded(w, opts);
    r.cm_before = is_cohen_macaulay_reisner(c, f);
    r.cm_after = is_cohen_macaulay_reisner(w, f);
    return r;
}

}  // namespace wsc
