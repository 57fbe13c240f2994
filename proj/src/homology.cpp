#include "wsc/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wsc/errors.hpp"

namespace wsc {

// --- fields ---------------------------------------------------------------

FieldSpec FieldSpec::prime(long long p) {
    if (p < 2 || p >= (1LL << 31))
        fail(ErrorCode::InvalidCharacteristic, "characteristic must be 0 or a prime below 2^31");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) fail(ErrorCode::InvalidCharacteristic, std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

namespace {

struct RationalField {
    using Elem = mpq_class;
    Elem from_int(int v) const { return Elem(v); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
};

struct PrimeField {
    std::uint64_t p;
    using Elem = std::uint64_t;
    Elem from_int(int v) const {
        const auto r = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
        return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    bool is_zero(Elem a) const { return a == 0; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem add(Elem a, Elem b) const {
        const Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }  // p < 2^31 keeps the product in range
    Elem inv(Elem a) const {
        // Fermat: a^(p-2)
        Elem r = 1, base = a;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
};

template <class F>
using SparseCol = std::vector<std::pair<int, typename F::Elem>>;  // sorted by row

// c += s * d, zeros dropped.
template <class F>
SparseCol<F> axpy(const F& fld, const SparseCol<F>& c, const SparseCol<F>& d, const typename F::Elem& s) {
    SparseCol<F> out;
    out.reserve(c.size() + d.size());
    std::size_t i = 0, j = 0;
    while (i < c.size() || j < d.size()) {
        if (j == d.size() || (i < c.size() && c[i].first < d[j].first)) {
            out.push_back(c[i++]);
        } else if (i == c.size() || d[j].first < c[i].first) {
            auto v = fld.mul(s, d[j].second);
            if (!fld.is_zero(v)) out.emplace_back(d[j].first, std::move(v));
            ++j;
        } else {
            auto v = fld.add(c[i].second, fld.mul(s, d[j].second));
            if (!fld.is_zero(v)) out.emplace_back(c[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

// Column elimination; pivot of a column is its largest remaining row.
template <class F>
std::int64_t sparse_rank(const F& fld, std::vector<SparseCol<F>> cols) {
    std::unordered_map<int, std::size_t> owner;  // pivot row -> reduced column
    std::vector<SparseCol<F>> reduced;
    std::int64_t rank = 0;
    for (auto& col : cols) {
        while (!col.empty()) {
            const int r = col.back().first;
            auto it = owner.find(r);
            if (it == owner.end()) {
                owner.emplace(r, reduced.size());
                reduced.push_back(std::move(col));
                ++rank;
                break;
            }
            const auto& piv = reduced[it->second];
            const auto s = fld.neg(fld.div(col.back().second, piv.back().second));
            col = axpy(fld, col, piv, s);
        }
    }
    return rank;
}

// Reduced homology dimensions from an explicit closed face list (empty face
// included unless the complex is void). result[k] = dim reduced H_{k-1}.
template <class F>
std::vector<std::int64_t> homology_dims_impl(const F& fld, const std::vector<Face>& faces) {
    if (faces.empty()) return {};
    int max_size = 0;
    for (Face f : faces) max_size = std::max(max_size, f.size());

    std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(max_size) + 1);
    for (Face f : faces) by_size[static_cast<std::size_t>(f.size())].push_back(f);
    std::vector<std::unordered_map<std::uint64_t, int>> index(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        std::sort(by_size[s].begin(), by_size[s].end());
        for (std::size_t k = 0; k < by_size[s].size(); ++k) index[s].emplace(by_size[s][k].bits, static_cast<int>(k));
    }

    // ranks[s] = rank of the boundary map from size-s chains to size-(s-1) chains
    std::vector<std::int64_t> ranks(by_size.size() + 1, 0);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        std::vector<SparseCol<F>> cols;
        cols.reserve(by_size[s].size());
        for (Face f : by_size[s]) {
            SparseCol<F> col;
            int j = 0;
            for (int v : f.vertices()) {
                const auto it = index[s - 1].find(f.without(v).bits);
                if (it == index[s - 1].end()) throw std::logic_error("face list is not downward closed");
                col.emplace_back(it->second, fld.from_int(j % 2 == 0 ? 1 : -1));
                ++j;
            }
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            cols.push_back(std::move(col));
        }
        ranks[s] = sparse_rank(fld, std::move(cols));
    }

    std::vector<std::int64_t> h(by_size.size());
    std::int64_t euler_faces = 0, euler_h = 0;
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        h[s] = static_cast<std::int64_t>(by_size[s].size()) - ranks[s] - ranks[s + 1];
        if (h[s] < 0) throw std::logic_error("negative homology dimension; rank computation is broken");
        const std::int64_t sign = (s % 2 == 0) ? -1 : 1;  // (-1)^(s-1)
        euler_faces += sign * static_cast<std::int64_t>(by_size[s].size());
        euler_h += sign * h[s];
    }
    if (euler_faces != euler_h) throw std::logic_error("homology violates the Euler-Poincare identity");
    return h;
}

std::vector<std::int64_t> homology_dims_for(const FieldSpec& f, const std::vector<Face>& faces) {
    if (f.is_rational()) return homology_dims_impl(RationalField{}, faces);
    return homology_dims_impl(PrimeField{static_cast<std::uint64_t>(f.p)}, faces);
}

bool all_zero(const std::vector<std::int64_t>& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& f) {
    std::vector<std::int64_t> h = homology_dims_for(f, c.all_faces());
    const std::int64_t chi = c.is_void() ? 0 : reduced_euler_characteristic(c);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < h.size(); ++k) acc += ((k % 2 == 0) ? -1 : 1) * h[k];
    if (acc != chi) throw std::logic_error("homology violates the Euler-Poincare identity");
    return h;
}

// --- upper Koszul complexes and Betti tables ------------------------------

namespace {

constexpr int kKoszulSupportCap = 20;

// All faces of K^b(I): subsets W of supp(b) with x^(b - tau(W)) in I.
std::vector<Face> koszul_face_masks(const MonomialIdeal& a, const Monomial& b) {
    const std::uint64_t supp = b.support().bits;
    if (std::popcount(supp) > kKoszulSupportCap)
        fail(ErrorCode::ResourceLimit, "Koszul support exceeds " + std::to_string(kKoszulSupportCap) + " variables");
    std::vector<Face> faces;
    std::uint64_t sub = supp;
    for (;;) {
        Monomial q = b;
        std::uint64_t m = sub;
        while (m) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            --q.exps[static_cast<std::size_t>(v)];
        }
        if (a.contains(q)) faces.push_back(Face{sub});
        if (sub == 0) break;
        sub = (sub - 1) & supp;
    }
    return faces;
}

}  // namespace

SimplicialComplex upper_koszul(const MonomialIdeal& a, const Monomial& b) {
    if (b.vars() != a.n) fail(ErrorCode::ArityMismatch, "degree has wrong variable count");
    std::vector<Face> faces = koszul_face_masks(a, b);
    std::unordered_set<std::uint64_t> present;
    for (Face f : faces) present.insert(f.bits);
    const std::uint64_t supp = b.support().bits;
    std::vector<Face> maximal;
    for (Face f : faces) {
        bool is_max = true;
        std::uint64_t rest = supp & ~f.bits;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (present.count(f.with(v).bits)) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(f);
    }
    return SimplicialComplex::from_faces(a.n, std::move(maximal));
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& a) {
    constexpr std::size_t kLatticeCap = std::size_t{1} << 20;
    std::set<std::vector<std::uint32_t>> seen;
    seen.insert(Monomial::one(a.n).exps);
    std::vector<Monomial> points = {Monomial::one(a.n)};
    for (const auto& g : a.gens) {
        const std::size_t existing = points.size();
        for (std::size_t k = 0; k < existing; ++k) {
            Monomial j = points[k].lcm(g);
            if (seen.insert(j.exps).second) {
                points.push_back(std::move(j));
                if (points.size() > kLatticeCap) fail(ErrorCode::ResourceLimit, "lcm lattice exceeds cap");
            }
        }
    }
    std::sort(points.begin(), points.end(), grlex_less);
    return points;
}

BettiTable betti_table(const MonomialIdeal& a, const FieldSpec& f) {
    if (!a.is_proper()) fail(ErrorCode::DegenerateIdeal, "Betti numbers need a proper nonzero ideal");
    BettiTable t;
    t.n = a.n;
    for (const Monomial& b : lcm_lattice(a)) {
        if (b.is_one()) continue;  // K^1 of a proper ideal is void
        std::vector<Face> faces = koszul_face_masks(a, b);
        if (faces.empty()) continue;

        // Cones are acyclic; look for an apex before doing linear algebra.
        std::unordered_set<std::uint64_t> present;
        present.reserve(faces.size() * 2);
        for (Face w : faces) present.insert(w.bits);
        const std::uint64_t supp = b.support().bits;
        bool cone = false;
        std::uint64_t apexes = supp;
        while (apexes && !cone) {
            const int v = std::countr_zero(apexes);
            apexes &= apexes - 1;
            cone = true;
            for (Face w : faces)
                if (!w.contains(v) && !present.count(w.with(v).bits)) {
                    cone = false;
                    break;
                }
        }
        if (cone) continue;

        std::vector<std::int64_t> h;
        if (f.is_rational()) {
            // A fast prime-field pass certifies acyclicity (mod-p homology
            // bounds rational homology from above); exact arithmetic runs
            // only where something survives.
            h = homology_dims_impl(PrimeField{1000003}, faces);
            if (!all_zero(h)) h = homology_dims_for(f, faces);
        } else {
            h = homology_dims_for(f, faces);
        }
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] > 0)
                t.multigraded.push_back(BettiEntry{static_cast<int>(i), b, static_cast<std::uint64_t>(h[i])});
    }
    std::sort(t.multigraded.begin(), t.multigraded.end(), [](const BettiEntry& x, const BettiEntry& y) {
        if (x.i != y.i) return x.i < y.i;
        return grlex_less(x.degree, y.degree);
    });
    return t;
}

std::uint64_t BettiTable::beta(int i, const Monomial& b) const {
    for (const auto& e : multigraded)
        if (e.i == i && e.degree == b) return e.value;
    return 0;
}

std::uint64_t BettiTable::beta_total(int i) const {
    std::uint64_t s = 0;
    for (const auto& e : multigraded)
        if (e.i == i) s += e.value;
    return s;
}

std::map<std::pair<int, std::uint64_t>, std::uint64_t> BettiTable::graded() const {
    std::map<std::pair<int, std::uint64_t>, std::uint64_t> g;
    for (const auto& e : multigraded) g[{e.i, e.degree.total_degree()}] += e.value;
    return g;
}

int BettiTable::projdim_ideal() const {
    int pd = 0;
    for (const auto& e : multigraded) pd = std::max(pd, e.i);
    return pd;
}

std::int64_t BettiTable::regularity() const {
    std::int64_t r = 0;
    for (const auto& e : multigraded)
        r = std::max(r, static_cast<std::int64_t>(e.degree.total_degree()) - e.i);
    return r;
}

int depth_quotient(const MonomialIdeal& a, const FieldSpec& f) {
    return a.n - betti_table(a, f).projdim_quotient();
}

// --- Hilbert series -------------------------------------------------------

IntPoly IntPoly::one_minus_t_pow(int k) {
    IntPoly p = one();
    IntPoly base{{1, -1}};
    for (int i = 0; i < k; ++i) p = p.times(base);
    return p;
}

void IntPoly::add_term(std::size_t k, std::int64_t v) {
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] += v;
    normalize();
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::plus(const IntPoly& o) const {
    IntPoly r = *this;
    if (r.c.size() < o.c.size()) r.c.resize(o.c.size(), 0);
    for (std::size_t k = 0; k < o.c.size(); ++k) r.c[k] += o.c[k];
    r.normalize();
    return r;
}

IntPoly IntPoly::minus(const IntPoly& o) const {
    IntPoly r = *this;
    if (r.c.size() < o.c.size()) r.c.resize(o.c.size(), 0);
    for (std::size_t k = 0; k < o.c.size(); ++k) r.c[k] -= o.c[k];
    r.normalize();
    return r;
}

IntPoly IntPoly::times(const IntPoly& o) const {
    if (c.empty() || o.c.empty()) return zero();
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
}

std::string IntPoly::to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!s.empty()) s += (c[k] > 0) ? " + " : " - ";
        else if (c[k] < 0) s += "-";
        const std::int64_t v = c[k] > 0 ? c[k] : -c[k];
        if (k == 0) {
            s += std::to_string(v);
        } else {
            if (v != 1) s += std::to_string(v) + "*";
            s += "t";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

constexpr std::size_t kHilbertGenCap = 20;
constexpr std::uint64_t kHilbertDegreeCap = std::uint64_t{1} << 20;

void hilbert_rec(const std::vector<Monomial>& gens, std::size_t idx, bool odd, const Monomial& acc, IntPoly& out) {
    if (idx == gens.size()) {
        const std::uint64_t d = acc.total_degree();
        if (d > kHilbertDegreeCap) fail(ErrorCode::ResourceLimit, "Hilbert numerator degree exceeds cap");
        out.add_term(static_cast<std::size_t>(d), odd ? -1 : 1);
        return;
    }
    hilbert_rec(gens, idx + 1, odd, acc, out);
    hilbert_rec(gens, idx + 1, !odd, acc.lcm(gens[idx]), out);
}

}  // namespace

IntPoly hilbert_numerator(const MonomialIdeal& a) {
    if (a.gens.size() > kHilbertGenCap)
        fail(ErrorCode::ResourceLimit, "too many generators for inclusion-exclusion");
    IntPoly out;
    hilbert_rec(a.gens, 0, false, Monomial::one(a.n), out);
    out.normalize();
    return out;
}

}  // namespace wsc
