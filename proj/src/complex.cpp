#include "wsc/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace wsc {

Face Face::of(const std::vector<int>& vertices, int ambient_n) {
    Face f;
    for (int v : vertices) {
        if (v < 0 || v >= ambient_n)
            fail(ErrorCode::InvalidVertex,
                 "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(ambient_n) + ")");
        f = f.with(v);
    }
    return f;
}

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    std::uint64_t m = bits;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

std::string Face::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

namespace {

// Keep only inclusion-maximal faces, canonically sorted.
std::vector<Face> antichain_reduce(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(),
              [](Face a, Face b) { return a.size() > b.size() || (a.size() == b.size() && a < b); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        bool absorbed = false;
        for (Face g : kept) {
            if (f.subset_of(g)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& raw_faces) {
    if (n < 0) fail(ErrorCode::InvalidVertex, "negative ambient vertex count");
    if (n > kMaxVertices)
        fail(ErrorCode::ResourceLimit,
             "ambient vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));
    std::vector<Face> faces;
    faces.reserve(raw_faces.size());
    for (const auto& raw : raw_faces) faces.push_back(Face::of(raw, n));
    return from_faces(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces) {
    if (n < 0 || n > kMaxVertices)
        fail(ErrorCode::ResourceLimit, "ambient vertex count " + std::to_string(n) + " out of range");
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = antichain_reduce(std::move(faces));
    return c;
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (Face f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (Face f : facets_)
        if (f.dim() != dim()) return false;
    return true;
}

bool SimplicialComplex::contains(Face f) const {
    for (Face g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

std::vector<int> SimplicialComplex::vertex_support() const {
    std::uint64_t used = 0;
    for (Face f : facets_) used |= f.bits;
    return Face(used).vertices();
}

std::vector<Face> SimplicialComplex::all_faces(std::size_t cap) const {
    std::unordered_set<std::uint64_t> seen;
    for (Face f : facets_) {
        std::uint64_t sub = f.bits;
        while (true) {
            seen.insert(sub);
            if (seen.size() > cap)
                fail(ErrorCode::ResourceLimit, "face closure exceeds cap of " + std::to_string(cap));
            if (sub == 0) break;
            sub = (sub - 1) & f.bits;
        }
    }
    std::vector<Face> out;
    out.reserve(seen.size());
    for (std::uint64_t m : seen) out.push_back(Face(m));
    std::sort(out.begin(), out.end());
    return out;
}

FVector f_vector(const SimplicialComplex& c) {
    if (c.is_void()) fail(ErrorCode::VoidComplex, "f-vector of the void complex");
    FVector fv;
    fv.counts.assign(static_cast<std::size_t>(c.dim() + 1), 0);
    for (Face f : c.all_faces())
        if (!f.empty()) ++fv.counts[static_cast<std::size_t>(f.dim())];
    return fv;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    if (c.is_void()) fail(ErrorCode::VoidComplex, "minimal non-faces of the void complex");
    std::unordered_set<std::uint64_t> found;
    for (Face g : c.all_faces()) {
        for (int v = 0; v < c.ambient_vertices(); ++v) {
            if (g.contains(v)) continue;
            Face m = g.with(v);
            if (c.contains(m)) continue;
            bool minimal = true;
            for (int u : m.vertices()) {
                if (!c.contains(m.without(u))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) found.insert(m.bits);
        }
    }
    std::vector<Face> out;
    out.reserve(found.size());
    for (std::uint64_t m : found) out.push_back(Face(m));
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex link(const SimplicialComplex& c, int v) {
    if (v < 0 || v >= c.ambient_vertices() || !c.has_vertex(v))
        fail(ErrorCode::NotAVertex, "vertex " + std::to_string(v) + " is not a face of the complex");
    return link(c, Face{}.with(v));
}

SimplicialComplex link(const SimplicialComplex& c, Face f) {
    if (!c.contains(f)) fail(ErrorCode::NotAVertex, "link of a non-face " + f.to_string());
    std::vector<Face> out;
    for (Face g : c.facets())
        if (f.subset_of(g)) out.push_back(g.minus(f));
    return SimplicialComplex::from_faces(c.ambient_vertices(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& c, int v) {
    if (v < 0 || v >= c.ambient_vertices() || !c.has_vertex(v))
        fail(ErrorCode::NotAVertex, "vertex " + std::to_string(v) + " is not a face of the complex");
    std::vector<Face> out;
    for (Face g : c.facets())
        if (g.contains(v)) out.push_back(g);
    return SimplicialComplex::from_faces(c.ambient_vertices(), std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& c, Face f) {
    std::vector<Face> out;
    for (Face g : c.facets()) {
        if (!f.subset_of(g)) {
            out.push_back(g);
        } else {
            for (int v : f.vertices()) out.push_back(g.without(v));
        }
    }
    return SimplicialComplex::from_faces(c.ambient_vertices(), std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int n = a.ambient_vertices() + b.ambient_vertices();
    if (n > SimplicialComplex::kMaxVertices)
        fail(ErrorCode::ResourceLimit, "join exceeds the vertex cap");
    std::vector<Face> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (Face fa : a.facets())
        for (Face fb : b.facets())
            out.push_back(Face(fa.bits | (fb.bits << a.ambient_vertices())));
    return SimplicialComplex::from_faces(n, std::move(out));
}

SimplicialComplex full_simplex(int d) {
    if (d < 0) fail(ErrorCode::InvalidDimension, "full_simplex requires d >= 0");
    if (d + 1 > SimplicialComplex::kMaxVertices)
        fail(ErrorCode::ResourceLimit, "simplex dimension exceeds the vertex cap");
    Face all((std::uint64_t{1} << (d + 1)) - 1);
    return SimplicialComplex::from_faces(d + 1, {all});
}

SimplicialComplex boundary_simplex(int d) {
    if (d < 0) fail(ErrorCode::InvalidDimension, "boundary_simplex requires d >= 0");
    if (d + 1 > SimplicialComplex::kMaxVertices)
        fail(ErrorCode::ResourceLimit, "simplex dimension exceeds the vertex cap");
    Face all((std::uint64_t{1} << (d + 1)) - 1);
    std::vector<Face> out;
    for (int v = 0; v <= d; ++v) out.push_back(all.without(v));
    return SimplicialComplex::from_faces(d + 1, std::move(out));
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& c) {
    std::int64_t chi = 0;
    for (Face f : c.all_faces()) chi += (f.size() % 2 == 0) ? -1 : 1;
    return chi;
}

}  // namespace wsc
