#include "wsc/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wsc/errors.hpp"

namespace wsc {

MonomialIdeal PrimeIdeal::to_ideal() const {
    std::vector<Monomial> gens;
    for (int v : vars.vertices()) gens.push_back(Monomial::variable(n, v));
    return MonomialIdeal::make(n, std::move(gens));
}

bool prime_less(const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
}

bool ideal_order_less(const MonomialIdeal& a, const MonomialIdeal& b) {
    return std::lexicographical_compare(a.gens.begin(), a.gens.end(), b.gens.begin(), b.gens.end(), grlex_less);
}

namespace {

constexpr std::size_t kLeafCap = std::size_t{1} << 16;

void require_proper(const MonomialIdeal& a, const char* what) {
    if (!a.is_proper()) fail(ErrorCode::DegenerateIdeal, std::string(what) + " needs a proper nonzero ideal");
}

// First generator with at least two variables in its support; -1 if all
// generators are pure powers.
int first_mixed_gen(const MonomialIdeal& a) {
    for (std::size_t k = 0; k < a.gens.size(); ++k)
        if (a.gens[k].support().size() >= 2) return static_cast<int>(k);
    return -1;
}

void split_rec(const MonomialIdeal& a, std::vector<MonomialIdeal>& leaves) {
    const int k = first_mixed_gen(a);
    if (k < 0) {
        leaves.push_back(a);
        if (leaves.size() > kLeafCap) fail(ErrorCode::ResourceLimit, "decomposition leaf count exceeds cap");
        return;
    }
    const Monomial& g = a.gens[static_cast<std::size_t>(k)];
    const int v = g.support().vertices().front();
    // (J, u*w) = (J, u) /\ (J, w) for coprime u, w
    Monomial u = Monomial::variable(a.n, v, g.exps[static_cast<std::size_t>(v)]);
    Monomial w = g;
    w.exps[static_cast<std::size_t>(v)] = 0;

    std::vector<Monomial> left = a.gens, right = a.gens;
    left.push_back(std::move(u));
    right.push_back(std::move(w));
    split_rec(MonomialIdeal::make(a.n, std::move(left)), leaves);
    split_rec(MonomialIdeal::make(a.n, std::move(right)), leaves);
}

MonomialIdeal intersect_all(int n, const std::vector<MonomialIdeal>& parts, const std::size_t* skip = nullptr) {
    bool started = false;
    MonomialIdeal acc;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (skip && *skip == j) continue;
        acc = started ? intersect(acc, parts[j]) : parts[j];
        started = true;
    }
    if (!started) return MonomialIdeal::make(n, {Monomial::one(n)});  // empty intersection = unit
    return acc;
}

std::vector<MonomialIdeal> prune_irredundant(const MonomialIdeal& a, std::vector<MonomialIdeal> parts) {
    std::sort(parts.begin(), parts.end(), ideal_order_less);
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    for (std::size_t i = 0; i < parts.size();) {
        if (parts.size() > 1 && intersect_all(a.n, parts, &i) == a)
            parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    if (intersect_all(a.n, parts) != a)
        throw std::logic_error("decomposition does not intersect back to the input ideal");
    return parts;
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a) {
    require_proper(a, "irreducible decomposition");
    std::vector<MonomialIdeal> leaves;
    split_rec(a, leaves);
    return prune_irredundant(a, std::move(leaves));
}

Decomposition primary_decomposition(const MonomialIdeal& a) {
    std::vector<MonomialIdeal> parts = irreducible_decomposition(a);

    // merge equal-radical pieces; the intersection of P-primary ideals is P-primary
    std::vector<PrimaryComponent> comps;
    for (auto& q : parts) {
        const Face rad = q.variable_support();
        bool merged = false;
        for (auto& c : comps)
            if (c.radical_vars == rad) {
                c.ideal = intersect(c.ideal, q);
                merged = true;
                break;
            }
        if (!merged) comps.push_back(PrimaryComponent{std::move(q), rad});
    }
    std::sort(comps.begin(), comps.end(), [](const PrimaryComponent& x, const PrimaryComponent& y) {
        return prime_less(PrimeIdeal{0, x.radical_vars}, PrimeIdeal{0, y.radical_vars});
    });

    // defensive second prune; merged components should all be needed already
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(comps.size());
    for (const auto& c : comps) ideals.push_back(c.ideal);
    for (std::size_t i = 0; i < ideals.size();) {
        if (ideals.size() > 1 && intersect_all(a.n, ideals, &i) == a) {
            ideals.erase(ideals.begin() + static_cast<std::ptrdiff_t>(i));
            comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (intersect_all(a.n, ideals) != a)
        throw std::logic_error("primary decomposition does not intersect back to the input ideal");
    return Decomposition{std::move(comps)};
}

std::vector<PrimeIdeal> associated_primes(const MonomialIdeal& a) {
    std::vector<PrimeIdeal> primes;
    for (const auto& c : primary_decomposition(a).components) primes.push_back(PrimeIdeal{a.n, c.radical_vars});
    std::sort(primes.begin(), primes.end(), prime_less);
    return primes;
}

std::vector<PrimeIdeal> associated_primes_witnessed(const MonomialIdeal& a) {
    require_proper(a, "associated primes");
    const Monomial top = a.gens_lcm();
    std::uint64_t count = 1;
    for (auto e : top.exps) {
        count *= e + 1;
        if (count > (std::uint64_t{1} << 20)) fail(ErrorCode::ResourceLimit, "too many divisors to search");
    }
    std::set<std::uint64_t> found;
    std::vector<PrimeIdeal> primes;
    Monomial m = Monomial::one(a.n);
    for (;;) {
        if (!a.contains(m)) {
            const MonomialIdeal q = colon(a, m);
            bool is_prime = !q.gens.empty();
            for (const auto& g : q.gens)
                if (g.total_degree() != 1) {
                    is_prime = false;
                    break;
                }
            if (is_prime) {
                const Face vars = q.variable_support();
                if (found.insert(vars.bits).second) primes.push_back(PrimeIdeal{a.n, vars});
            }
        }
        // odometer over divisors of the generator lcm
        std::size_t i = 0;
        while (i < m.exps.size()) {
            if (++m.exps[i] <= top.exps[i]) break;
            m.exps[i] = 0;
            ++i;
        }
        if (i == m.exps.size()) break;
    }
    std::sort(primes.begin(), primes.end(), prime_less);
    return primes;
}

std::pair<std::vector<PrimeIdeal>, std::vector<PrimeIdeal>> minimal_and_embedded(const MonomialIdeal& a) {
    const std::vector<PrimeIdeal> all = associated_primes(a);
    std::vector<PrimeIdeal> minimal, embedded;
    for (const auto& p : all) {
        bool has_smaller = false;
        for (const auto& q : all)
            if (!(q == p) && q.vars.subset_of(p.vars)) {
                has_smaller = true;
                break;
            }
        (has_smaller ? embedded : minimal).push_back(p);
    }
    return {std::move(minimal), std::move(embedded)};
}

int height(const MonomialIdeal& a) {
    int h = a.n + 1;
    for (const auto& p : minimal_and_embedded(a).first) h = std::min(h, p.height());
    return h;
}

int dim_quotient(const MonomialIdeal& a) { return a.n - height(a); }

bool is_cm_quotient(const MonomialIdeal& a, const FieldSpec& f) {
    return depth_quotient(a, f) == dim_quotient(a);
}

WeightedDecompositionReport weighted_decomposition_check(const MonomialIdeal& a, const std::vector<int>& w) {
    WeightedDecompositionReport rep;
    for (const PrimaryComponent& q : primary_decomposition(a).components)
        rep.expected.push_back(weight_ideal(q.ideal, w));
    for (const PrimaryComponent& q : primary_decomposition(weight_ideal(a, w)).components)
        rep.actual.push_back(q.ideal);
    std::sort(rep.expected.begin(), rep.expected.end(), ideal_order_less);
    std::sort(rep.actual.begin(), rep.actual.end(), ideal_order_less);
    rep.matches = rep.expected.size() == rep.actual.size();
    for (std::size_t i = 0; rep.matches && i < rep.expected.size(); ++i)
        rep.matches = rep.expected[i].gens == rep.actual[i].gens;
    return rep;
}

MonomialIdeal symbolic_power(const MonomialIdeal& a, int s) {
    if (s < 1) fail(ErrorCode::InvalidExponent, "symbolic power needs s >= 1, got " + std::to_string(s));
    require_proper(a, "symbolic power");
    const MonomialIdeal as = power(a, s);
    bool started = false;
    MonomialIdeal acc;
    for (const auto& p : minimal_and_embedded(a).first) {
        Monomial outside = Monomial::one(a.n);
        for (int v = 0; v < a.n; ++v)
            if (!p.vars.contains(v)) outside.exps[static_cast<std::size_t>(v)] = 1;
        const MonomialIdeal local = saturate(as, outside);
        acc = started ? intersect(acc, local) : local;
        started = true;
    }
    return started ? acc : as;
}

TorsionFreeReport normally_torsion_free_upto(const MonomialIdeal& a, int upto) {
    if (upto < 1) fail(ErrorCode::InvalidExponent, "probe bound must be >= 1, got " + std::to_string(upto));
    require_proper(a, "torsion-freeness probe");
    TorsionFreeReport r;
    r.checked_upto = upto;

    std::set<std::uint64_t> base;
    for (const auto& p : associated_primes(a)) base.insert(p.vars.bits);

    for (int s = 1; s <= upto; ++s) {
        const MonomialIdeal as = power(a, s);
        if (r.first_ass_failure == 0) {
            for (const auto& p : associated_primes(as))
                if (!base.count(p.vars.bits)) {
                    if (r.first_ass_failure == 0) r.first_ass_failure = s;
                    r.extra_primes.push_back(p);
                }
        }
        if (r.first_symbolic_failure == 0) {
            const MonomialIdeal sym = symbolic_power(a, s);
            if (!(sym == as)) {
                r.first_symbolic_failure = s;
                for (const auto& g : sym.gens)
                    if (!as.contains(g)) r.symbolic_witnesses.push_back(g);
            }
        }
    }
    r.ass_stable = r.first_ass_failure == 0;
    r.symbolic_match = r.first_symbolic_failure == 0;
    return r;
}

}  // namespace wsc
