#include "wsc/generators.hpp"

#include <algorithm>
#include <cstdint>

namespace wsc::gen {

int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

SimplicialComplex compress_to_support(const SimplicialComplex& c) {
    const std::vector<int> support = c.vertex_support();
    std::vector<int> new_id(static_cast<std::size_t>(c.ambient_vertices()), -1);
    for (std::size_t i = 0; i < support.size(); ++i) new_id[static_cast<std::size_t>(support[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> facets;
    for (Face f : c.facets()) {
        std::vector<int> verts;
        for (int v : f.vertices()) verts.push_back(new_id[static_cast<std::size_t>(v)]);
        facets.push_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(static_cast<int>(support.size()), facets);
}

SimplicialComplex random_complex(Rng& rng, int max_n) {
    const int n = uniform_int(rng, 1, max_n);
    const int count = uniform_int(rng, 1, n + 2);
    const std::uint64_t full = (n == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::vector<Face> facets;
    for (int k = 0; k < count; ++k) {
        const std::uint64_t bits = 1 + rng() % full;
        facets.push_back(Face{bits});
    }
    return compress_to_support(SimplicialComplex::from_faces(n, facets));
}

std::vector<int> random_weights(Rng& rng, int n, int max_w) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int& x : w) x = uniform_int(rng, 1, max_w);
    return w;
}

std::vector<int> random_dims(Rng& rng, int n, int max_d) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int& x : d) x = uniform_int(rng, 0, max_d);
    return d;
}

MonomialIdeal random_ideal(Rng& rng, int max_n, int max_gens, int max_exp) {
    return random_ideal_exact(rng, uniform_int(rng, 1, max_n), max_gens, max_exp);
}

MonomialIdeal random_ideal_exact(Rng& rng, int n, int max_gens, int max_exp) {
    const int count = uniform_int(rng, 1, max_gens);
    std::vector<Monomial> gens;
    for (int k = 0; k < count; ++k) {
        Monomial m = Monomial::one(n);
        do {
            for (auto& e : m.exps) e = static_cast<std::uint32_t>(uniform_int(rng, 0, max_exp));
        } while (m.is_one());
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

TransportInstance random_transport_instance(Rng& rng, int max_n, int max_d, std::size_t facet_bound) {
    while (true) {
        SimplicialComplex c = random_complex(rng, max_n);
        const int n = c.ambient_vertices();
        std::vector<int> dims = random_dims(rng, n, max_d);
        int total = n;
        for (int d : dims) total += d;
        if (total > SimplicialComplex::kMaxVertices) continue;
        std::uint64_t wreath_facets = 0;
        for (Face f : c.facets()) {
            std::uint64_t ways = 1;
            for (int j = 0; j < n; ++j)
                if (!f.contains(j)) ways *= static_cast<std::uint64_t>(dims[static_cast<std::size_t>(j)]) + 1;
            wreath_facets += ways;
        }
        if (wreath_facets >= 1 && wreath_facets <= facet_bound) return {std::move(c), std::move(dims)};
    }
}

}  // namespace wsc::gen
