#include "wsc/monomial.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "wsc/errors.hpp"

namespace wsc {

// --- Monomial -------------------------------------------------------------

Monomial Monomial::variable(int n, int i, std::uint32_t e) {
    if (n < 0 || i < 0 || i >= n) fail(ErrorCode::InvalidVertex, "variable index " + std::to_string(i) + " out of range");
    Monomial m = one(n);
    m.exps[static_cast<std::size_t>(i)] = e;
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (auto e : exps)
        if (e) return false;
    return true;
}

bool Monomial::is_squarefree() const {
    for (auto e : exps)
        if (e > 1) return false;
    return true;
}

Face Monomial::support() const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i]) bits |= std::uint64_t{1} << i;
    return Face{bits};
}

bool Monomial::divides(const Monomial& m) const {
    if (exps.size() != m.exps.size()) fail(ErrorCode::ArityMismatch, "monomials live in different rings");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > m.exps[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    if (exps.size() != m.exps.size()) fail(ErrorCode::ArityMismatch, "monomials live in different rings");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (r.exps[i] > std::numeric_limits<std::uint32_t>::max() - m.exps[i])
            fail(ErrorCode::ResourceLimit, "exponent overflow");
        r.exps[i] += m.exps[i];
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
    if (exps.size() != m.exps.size()) fail(ErrorCode::ArityMismatch, "monomials live in different rings");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::max(r.exps[i], m.exps[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& m) const {
    if (exps.size() != m.exps.size()) fail(ErrorCode::ArityMismatch, "monomials live in different rings");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::min(r.exps[i], m.exps[i]);
    return r;
}

Monomial Monomial::quotient_floor(const Monomial& m) const {
    if (exps.size() != m.exps.size()) fail(ErrorCode::ArityMismatch, "monomials live in different rings");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = (r.exps[i] > m.exps[i]) ? r.exps[i] - m.exps[i] : 0;
    return r;
}

std::string Monomial::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i]) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return b.exps < a.exps;  // higher earlier exponent sorts first
}

// --- MonomialIdeal --------------------------------------------------------

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> gens) {
    if (n < 0 || n > SimplicialComplex::kMaxVertices)
        fail(ErrorCode::ResourceLimit, "variable count " + std::to_string(n) + " out of range");
    for (const auto& g : gens)
        if (g.vars() != n)
            fail(ErrorCode::ArityMismatch, "generator " + g.to_string() + " has wrong variable count");
    std::sort(gens.begin(), gens.end(), grlex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal{n, std::move(kept)};
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens)
        if (!g.is_squarefree()) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

Monomial MonomialIdeal::gens_lcm() const {
    Monomial l = Monomial::one(n);
    for (const auto& g : gens) l = l.lcm(g);
    return l;
}

Face MonomialIdeal::variable_support() const {
    std::uint64_t bits = 0;
    for (const auto& g : gens) bits |= g.support().bits;
    return Face{bits};
}

// --- ideal arithmetic -----------------------------------------------------

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n != b.n) fail(ErrorCode::ArityMismatch, "ideals live in different rings");
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size() * b.gens.size());
    for (const auto& g : a.gens)
        for (const auto& h : b.gens) gens.push_back(g.lcm(h));
    return MonomialIdeal::make(a.n, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    if (m.vars() != a.n) fail(ErrorCode::ArityMismatch, "colon divisor has wrong variable count");
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size());
    for (const auto& g : a.gens) gens.push_back(g.quotient_floor(m));
    return MonomialIdeal::make(a.n, std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& a, const Monomial& m) {
    if (m.vars() != a.n) fail(ErrorCode::ArityMismatch, "saturation divisor has wrong variable count");
    const Face s = m.support();
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size());
    for (const auto& g : a.gens) {
        Monomial h = g;
        for (int i : s.vertices()) h.exps[static_cast<std::size_t>(i)] = 0;
        gens.push_back(std::move(h));
    }
    return MonomialIdeal::make(a.n, std::move(gens));
}

namespace {

constexpr std::size_t kPowerCap = 200000;

void power_rec(const MonomialIdeal& a, int s, std::size_t start, const Monomial& acc,
               std::vector<Monomial>& out) {
    if (s == 0) {
        out.push_back(acc);
        if (out.size() > kPowerCap) fail(ErrorCode::ResourceLimit, "power expansion exceeds cap");
        return;
    }
    for (std::size_t i = start; i < a.gens.size(); ++i) power_rec(a, s - 1, i, acc.times(a.gens[i]), out);
}

}  // namespace

MonomialIdeal power(const MonomialIdeal& a, int s) {
    if (s < 1) fail(ErrorCode::InvalidExponent, "power needs s >= 1, got " + std::to_string(s));
    std::vector<Monomial> gens;
    power_rec(a, s, 0, Monomial::one(a.n), gens);
    return MonomialIdeal::make(a.n, std::move(gens));
}

// --- weighting and polarization -------------------------------------------

MonomialIdeal weight_ideal(const MonomialIdeal& a, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != a.n)
        fail(ErrorCode::ArityMismatch, "expected " + std::to_string(a.n) + " weights, got " + std::to_string(w.size()));
    for (int wi : w)
        if (wi < 1) fail(ErrorCode::InvalidWeight, "weights must be >= 1, got " + std::to_string(wi));
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size());
    for (const auto& g : a.gens) {
        Monomial h = g;
        for (std::size_t i = 0; i < h.exps.size(); ++i) {
            const auto wi = static_cast<std::uint64_t>(w[i]);
            const std::uint64_t e = wi * h.exps[i];
            if (e > std::numeric_limits<std::uint32_t>::max()) fail(ErrorCode::ResourceLimit, "exponent overflow");
            h.exps[i] = static_cast<std::uint32_t>(e);
        }
        gens.push_back(std::move(h));
    }
    return MonomialIdeal::make(a.n, std::move(gens));
}

PolarizeIdealResult polarize_ideal(const MonomialIdeal& a) {
    std::vector<int> dims(static_cast<std::size_t>(a.n), 0);
    for (const auto& g : a.gens)
        for (std::size_t i = 0; i < g.exps.size(); ++i)
            dims[i] = std::max(dims[i], static_cast<int>(g.exps[i]) - 1);
    WreathVertexMap map = WreathVertexMap::from_dims(dims);

    std::vector<Monomial> gens;
    gens.reserve(a.gens.size());
    for (const auto& g : a.gens) {
        Monomial h = Monomial::one(map.total);
        for (int i = 0; i < a.n; ++i)
            for (std::uint32_t j = 0; j < g.exps[static_cast<std::size_t>(i)]; ++j)
                h.exps[static_cast<std::size_t>(map.copy_id(i, static_cast<int>(j)))] = 1;
        gens.push_back(std::move(h));
    }
    return PolarizeIdealResult{MonomialIdeal::make(map.total, std::move(gens)), std::move(map)};
}

// --- graphs ---------------------------------------------------------------

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0 || n > SimplicialComplex::kMaxVertices)
        fail(ErrorCode::ResourceLimit, "vertex count " + std::to_string(n) + " out of range");
    for (auto& [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            fail(ErrorCode::InvalidEdge, "edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        if (i == j) fail(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

bool Graph::is_bipartite() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [i, j] : edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    q.push(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    gens.reserve(g.edges.size());
    for (auto [i, j] : g.edges) {
        Monomial m = Monomial::one(g.n);
        m.exps[static_cast<std::size_t>(i)] = 1;
        m.exps[static_cast<std::size_t>(j)] = 1;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::make(g.n, std::move(gens));
}

}  // namespace wsc
