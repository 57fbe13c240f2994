#include "wsc/wreath.hpp"

#include <limits>

#include "wsc/errors.hpp"

namespace wsc {

WreathVertexMap WreathVertexMap::from_dims(const std::vector<int>& dims) {
    WreathVertexMap m;
    m.original_n = static_cast<int>(dims.size());
    m.copies.reserve(dims.size());
    m.offsets.reserve(dims.size());
    int at = 0;
    for (int d : dims) {
        if (d < 0) fail(ErrorCode::InvalidDimension, "negative copy dimension " + std::to_string(d));
        m.offsets.push_back(at);
        m.copies.push_back(d + 1);
        at += d + 1;
    }
    m.total = at;
    if (m.total > SimplicialComplex::kMaxVertices)
        fail(ErrorCode::ResourceLimit,
             "wreath needs " + std::to_string(m.total) + " vertices, limit is " +
                 std::to_string(SimplicialComplex::kMaxVertices));
    return m;
}

std::pair<int, int> WreathVertexMap::source_of(int id) const {
    if (id < 0 || id >= total) fail(ErrorCode::InvalidVertex, "no copy with id " + std::to_string(id));
    int i = 0;
    while (i + 1 < original_n && offsets[static_cast<std::size_t>(i) + 1] <= id) ++i;
    return {i, id - offsets[static_cast<std::size_t>(i)]};
}

namespace {

constexpr std::size_t kFacetCap = std::size_t{1} << 20;

// Contiguous mask of all copies of one source vertex.
std::uint64_t copy_mask(const WreathVertexMap& m, int i) {
    const int width = m.copies[static_cast<std::size_t>(i)];
    const std::uint64_t block = (std::uint64_t{1} << width) - 1;
    return block << m.offsets[static_cast<std::size_t>(i)];
}

}  // namespace

WreathResult mixed_wreath(const SimplicialComplex& c, const std::vector<int>& dims) {
    const int n = c.ambient_vertices();
    if (static_cast<int>(dims.size()) != n)
        fail(ErrorCode::ArityMismatch,
             "expected " + std::to_string(n) + " copy dimensions, got " + std::to_string(dims.size()));
    WreathVertexMap map = WreathVertexMap::from_dims(dims);

    std::vector<std::uint64_t> blocks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(i)] = copy_mask(map, i);

    std::vector<Face> out;
    for (Face f : c.facets()) {
        std::uint64_t base = 0;
        std::vector<int> outside;
        for (int i = 0; i < n; ++i) {
            if (f.contains(i))
                base |= blocks[static_cast<std::size_t>(i)];
            else
                outside.push_back(i);
        }
        // Mixed-radix walk over which copy to omit for each outside vertex.
        std::vector<int> omit(outside.size(), 0);
        for (;;) {
            std::uint64_t bits = base;
            for (std::size_t k = 0; k < outside.size(); ++k) {
                const int j = outside[k];
                bits |= blocks[static_cast<std::size_t>(j)] &
                        ~(std::uint64_t{1} << (map.offsets[static_cast<std::size_t>(j)] + omit[k]));
            }
            out.push_back(Face{bits});
            if (out.size() > kFacetCap) fail(ErrorCode::ResourceLimit, "wreath facet count exceeds cap");
            std::size_t k = 0;
            while (k < outside.size()) {
                if (++omit[k] < map.copies[static_cast<std::size_t>(outside[k])]) break;
                omit[k] = 0;
                ++k;
            }
            if (k == outside.size()) break;
        }
    }
    return WreathResult{SimplicialComplex::from_faces(map.total, std::move(out)), std::move(map)};
}

WreathResult one_point_suspension(const SimplicialComplex& c, int v) {
    if (!c.has_vertex(v)) fail(ErrorCode::NotAVertex, "suspension point " + std::to_string(v) + " is not a vertex");
    std::vector<int> dims(static_cast<std::size_t>(c.ambient_vertices()), 0);
    dims[static_cast<std::size_t>(v)] = 1;
    return mixed_wreath(c, dims);
}

WreathResult reduced_join(const SimplicialComplex& c, int v, int d) {
    if (d < 1) fail(ErrorCode::InvalidDimension, "reduced join needs d >= 1, got " + std::to_string(d));
    if (!c.has_vertex(v)) fail(ErrorCode::NotAVertex, "join point " + std::to_string(v) + " is not a vertex");
    std::vector<int> dims(static_cast<std::size_t>(c.ambient_vertices()), 0);
    dims[static_cast<std::size_t>(v)] = d;
    return mixed_wreath(c, dims);
}

WreathFCounts wreath_f_formula(const SimplicialComplex& c, const std::vector<int>& dims) {
    const int n = c.ambient_vertices();
    if (static_cast<int>(dims.size()) != n)
        fail(ErrorCode::ArityMismatch,
             "expected " + std::to_string(n) + " copy dimensions, got " + std::to_string(dims.size()));
    WreathFCounts r;
    std::uint64_t dim_sum = 0;
    for (int d : dims) {
        if (d < 0) fail(ErrorCode::InvalidDimension, "negative copy dimension " + std::to_string(d));
        dim_sum += static_cast<std::uint64_t>(d);
    }
    r.f0 = dim_sum + c.vertex_support().size();

    const int top = c.dim();
    for (Face f : c.facets()) {
        if (f.dim() != top) continue;  // non-pure input: only top-dimensional facets count
        std::uint64_t prod = 1;
        for (int j = 0; j < n; ++j) {
            if (f.contains(j)) continue;
            const auto factor = static_cast<std::uint64_t>(dims[static_cast<std::size_t>(j)] + 1);
            if (prod > std::numeric_limits<std::uint64_t>::max() / factor)
                fail(ErrorCode::ResourceLimit, "facet count overflows 64 bits");
            prod *= factor;
        }
        if (r.f_top > std::numeric_limits<std::uint64_t>::max() - prod)
            fail(ErrorCode::ResourceLimit, "facet count overflows 64 bits");
        r.f_top += prod;
    }
    return r;
}

}  // namespace wsc
