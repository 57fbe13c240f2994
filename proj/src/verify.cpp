#include "wsc/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsc/checkers.hpp"
#include "wsc/complex.hpp"
#include "wsc/decomposition.hpp"
#include "wsc/generators.hpp"
#include "wsc/monomial.hpp"
#include "wsc/oracles.hpp"
#include "wsc/weighted.hpp"
#include "wsc/wreath.hpp"

namespace wsc {

namespace {

std::uint64_t trial_seed(std::uint64_t base, int suite, int trial) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL *
                                 (static_cast<std::uint64_t>(suite) * 1000003ULL +
                                  static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Session {
public:
    explicit Session(VerifyReport& rep) : rep_(rep) {}

    void begin(const std::string& name) { rep_.suites.push_back({name, 0, 0}); }
    void set_repro(std::uint64_t s) { repro_ = s; }

    void check(bool ok, const std::string& detail) {
        SuiteResult& s = rep_.suites.back();
        ++s.checks;
        if (!ok) {
            ++s.failures;
            rep_.failures.push_back({s.name, repro_, detail});
        }
    }

    void note(const std::string& line) { rep_.notes.push_back(line); }

private:
    VerifyReport& rep_;
    std::uint64_t repro_ = 0;
};

std::string complex_str(const SimplicialComplex& c) {
    std::string s = "n=" + std::to_string(c.ambient_vertices()) + " facets";
    for (Face f : c.facets()) s += " " + f.to_string();
    return s;
}

std::string ideal_str(const MonomialIdeal& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.gens.size(); ++i) {
        if (i) s += ", ";
        s += a.gens[i].to_string();
    }
    return s + ") in " + std::to_string(a.n) + " vars";
}

std::set<std::uint64_t> face_set(const SimplicialComplex& c) {
    std::set<std::uint64_t> out;
    for (Face f : c.all_faces()) out.insert(f.bits);
    return out;
}

bool is_antichain(const std::vector<Face>& faces) {
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (i != j && faces[i].subset_of(faces[j])) return false;
    return true;
}

Monomial weighted_degree(const Monomial& m, const std::vector<int>& w) {
    Monomial out = m;
    for (std::size_t i = 0; i < out.exps.size(); ++i)
        out.exps[i] *= static_cast<std::uint32_t>(w[i]);
    return out;
}

Face block_union(Face original, const WreathVertexMap& map) {
    Face out{0};
    for (int v : original.vertices()) {
        const int k = map.copies[static_cast<std::size_t>(v)];
        const std::uint64_t block = ((std::uint64_t{1} << k) - 1)
                                    << map.offsets[static_cast<std::size_t>(v)];
        out.bits |= block;
    }
    return out;
}

std::vector<Face> sorted_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    return faces;
}

/* *************************************************************************
 * Suite 1: face-level semantics of the core operations
 * *************************************************************************/

void suite_core(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("core_complex");
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t);
        s.set_repro(ts);
        gen::Rng rng(ts);
        const SimplicialComplex c = gen::random_complex(rng, 8);
        const int n = c.ambient_vertices();
        const std::string tag = " [" + complex_str(c) + "]";

        s.check(is_antichain(c.facets()), "facet list is not an antichain" + tag);

        const std::set<std::uint64_t> faces = face_set(c);
        const FVector fv = f_vector(c);
        std::uint64_t total = 1;  // the empty face
        for (auto k : fv.counts) total += k;
        s.check(total == faces.size(), "f-vector total disagrees with the face closure" + tag);

        std::int64_t chi = -1;
        for (std::size_t i = 0; i < fv.counts.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(fv.counts[i]);
        s.check(chi == reduced_euler_characteristic(c),
                "reduced Euler characteristic disagrees with the f-vector" + tag);

        // star and link of a vertex, face by face
        const int v = c.vertex_support()[static_cast<std::size_t>(
            gen::uniform_int(rng, 0, static_cast<int>(c.vertex_support().size()) - 1))];
        const std::set<std::uint64_t> lk = face_set(link(c, v));
        std::set<std::uint64_t> expected_star;
        for (std::uint64_t m : lk) {
            expected_star.insert(m);
            expected_star.insert(m | (std::uint64_t{1} << v));
        }
        s.check(face_set(star(c, v)) == expected_star,
                "star is not the vertex joined onto its link" + tag);
        bool link_ok = true;
        for (std::uint64_t m : faces) {
            const bool in_link = !(m >> v & 1) && faces.count(m | (std::uint64_t{1} << v)) > 0;
            if (in_link != (lk.count(m) > 0)) link_ok = false;
        }
        for (std::uint64_t m : lk)
            if (!faces.count(m)) link_ok = false;
        s.check(link_ok, "link disagrees with its face-level definition" + tag);

        // deletion of a random face of a random facet
        const Face base = c.facets()[static_cast<std::size_t>(
            gen::uniform_int(rng, 0, static_cast<int>(c.facets().size()) - 1))];
        std::uint64_t sigma_bits = base.bits & rng();
        if (sigma_bits == 0) sigma_bits = base.bits;
        const Face sigma{sigma_bits};
        std::set<std::uint64_t> expected_del;
        for (std::uint64_t m : faces)
            if ((m & sigma.bits) != sigma.bits) expected_del.insert(m);
        const SimplicialComplex del = deletion(c, sigma);
        const bool deletion_void = expected_del.empty();
        s.check(deletion_void ? del.is_void() : face_set(del) == expected_del,
                "deletion disagrees with its face-level definition" + tag);

        // minimal non-faces: each is minimally absent, and they cut the complex back out
        const std::vector<Face> mnf = minimal_nonfaces(c);
        bool mnf_ok = true;
        for (Face nf : mnf) {
            if (faces.count(nf.bits)) mnf_ok = false;
            for (int u : nf.vertices())
                if (!faces.count(nf.without(u).bits)) mnf_ok = false;
        }
        s.check(mnf_ok, "minimal non-faces are not minimally absent" + tag);
        if (n <= 16) {
            std::vector<std::uint64_t> admissible;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                bool blocked = false;
                for (Face nf : mnf)
                    if ((m & nf.bits) == nf.bits) blocked = true;
                if (!blocked) admissible.push_back(m);
            }
            std::set<std::uint64_t> rebuilt;
            for (std::uint64_t m : admissible) {
                bool maximal = true;
                for (std::uint64_t other : admissible)
                    if (other != m && (m & other) == m) maximal = false;
                if (maximal) rebuilt.insert(m);
            }
            std::set<std::uint64_t> facet_bits;
            for (Face f : c.facets()) facet_bits.insert(f.bits);
            s.check(rebuilt == facet_bits, "complex cannot be rebuilt from its minimal non-faces" + tag);
        }

        // join: minimal non-faces are the disjoint union of the factors'
        const SimplicialComplex c2 = gen::random_complex(rng, 4);
        if (n + c2.ambient_vertices() <= 10) {
            std::vector<Face> expected_join_mnf = mnf;
            for (Face nf : minimal_nonfaces(c2)) expected_join_mnf.push_back(Face{nf.bits << n});
            s.check(sorted_faces(minimal_nonfaces(join(c, c2))) == sorted_faces(expected_join_mnf),
                    "join minimal non-faces are not the disjoint union" + tag);
        }
    }
}

/* *************************************************************************
 * Suite 2: wreath products
 * *************************************************************************/

void suite_wreath(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("wreath");
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t);
        s.set_repro(ts);
        gen::Rng rng(ts);

        SimplicialComplex c = gen::random_complex(rng, 6);
        std::vector<int> dims;
        std::uint64_t predicted = 0;
        while (true) {
            const int n = c.ambient_vertices();
            dims = gen::random_dims(rng, n, 3);
            int total = n;
            for (int d : dims) total += d;
            predicted = 0;
            for (Face f : c.facets()) {
                std::uint64_t ways = 1;
                for (int j = 0; j < n; ++j)
                    if (!f.contains(j)) ways *= static_cast<std::uint64_t>(dims[static_cast<std::size_t>(j)]) + 1;
                predicted += ways;
            }
            if (total <= 40 && predicted <= 20000) break;
            c = gen::random_complex(rng, 6);
        }
        const int n = c.ambient_vertices();
        const std::string tag = " [" + complex_str(c) + "]";

        const WreathResult w = mixed_wreath(c, dims);
        s.check(w.complex.is_pure() == c.is_pure(), "wreath purity differs from the base" + tag);
        s.check(w.complex.facets().size() == predicted,
                "wreath facet count disagrees with the product formula" + tag);

        const WreathFCounts counts = wreath_f_formula(c, dims);
        s.check(counts.f0 == static_cast<std::uint64_t>(w.complex.vertex_support().size()),
                "wreath vertex count disagrees with the formula" + tag);
        std::uint64_t top = 0;
        const int top_dim = w.complex.dim();
        for (Face f : w.complex.facets())
            if (f.dim() == top_dim) ++top;
        s.check(counts.f_top == top, "wreath top facet count disagrees with the formula" + tag);

        std::vector<Face> expected_mnf;
        for (Face nf : minimal_nonfaces(c)) expected_mnf.push_back(block_union(nf, w.map));
        s.check(sorted_faces(minimal_nonfaces(w.complex)) == sorted_faces(expected_mnf),
                "wreath minimal non-faces are not the full copy blocks" + tag);

        if (n >= 2) {
            const int v = gen::uniform_int(rng, 0, n - 1);
            int u = gen::uniform_int(rng, 0, n - 2);
            if (u >= v) ++u;

            const WreathResult sv = one_point_suspension(c, v);
            const WreathResult su = one_point_suspension(c, u);
            const SimplicialComplex vu =
                one_point_suspension(sv.complex, sv.map.copy_id(u, 0)).complex;
            const SimplicialComplex uv =
                one_point_suspension(su.complex, su.map.copy_id(v, 0)).complex;
            s.check(vu == uv, "one-point suspensions at distinct vertices do not commute" + tag);

            std::vector<int> both(static_cast<std::size_t>(n), 0);
            both[static_cast<std::size_t>(v)] = 1;
            both[static_cast<std::size_t>(u)] = 1;
            s.check(vu == mixed_wreath(c, both).complex,
                    "iterated suspension differs from the two-vertex wreath" + tag);

            // the link of the first copy is the base complex on the second copy
            std::vector<std::vector<int>> image;
            for (Face f : c.facets()) {
                std::vector<int> verts;
                for (int x : f.vertices())
                    verts.push_back(x == v ? sv.map.copy_id(v, 1) : sv.map.copy_id(x, 0));
                image.push_back(std::move(verts));
            }
            s.check(link(sv.complex, sv.map.copy_id(v, 0)) ==
                        SimplicialComplex::from_facets(sv.map.total, image),
                    "suspension link does not recover the base complex" + tag);
        }
    }
}

/* *************************************************************************
 * Suite 3: weighted complexes and polarization of complexes
 * *************************************************************************/

void suite_weighted(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("weighted_sr");
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t);
        s.set_repro(ts);
        gen::Rng rng(ts);
        const SimplicialComplex c = gen::random_complex(rng, 5);
        const int n = c.ambient_vertices();
        const std::vector<int> w = gen::random_weights(rng, n, 3);
        const WeightedComplex wc = WeightedComplex::make(c, w);
        std::string tag = " [" + complex_str(c) + " w=";
        for (int x : w) tag += std::to_string(x);
        tag += "]";

        const MonomialIdeal sq = sr_ideal(c);
        s.check(complex_from_squarefree(sq) == c,
                "Stanley-Reisner correspondence does not round-trip" + tag);
        s.check(sr_ideal_weighted(wc) == weight_ideal(sq, w),
                "weighted ideal is not the weighting of the squarefree one" + tag);

        const WreathResult pol = polarize(wc);
        std::vector<Face> expected_mnf;
        for (Face nf : minimal_nonfaces(c)) expected_mnf.push_back(block_union(nf, pol.map));
        s.check(sorted_faces(minimal_nonfaces(pol.complex)) == sorted_faces(expected_mnf),
                "polarized complex misses the blown-up minimal non-faces" + tag);

        const PolarizeIdealResult pi = polarize_ideal(sr_ideal_weighted(wc));
        s.check(generators_as_copy_pairs(sr_ideal(pol.complex), pol.map) ==
                    generators_as_copy_pairs(pi.ideal, pi.map),
                "ideal of the polarized complex differs from the polarized ideal" + tag);
    }
}

/* *************************************************************************
 * Suite 4: ideal arithmetic against membership oracles
 * *************************************************************************/

void suite_monomial(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("monomial_ops");
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t);
        s.set_repro(ts);
        gen::Rng rng(ts);
        const int n = gen::uniform_int(rng, 1, 4);
        const MonomialIdeal a = gen::random_ideal_exact(rng, n, 4, 2);
        const MonomialIdeal b = gen::random_ideal_exact(rng, n, 4, 2);
        const std::string tag = " [a=" + ideal_str(a) + " b=" + ideal_str(b) + "]";

        const MonomialIdeal inter = intersect(a, b);
        bool inter_ok = true;
        for (const Monomial& m : oracle::monomials_in_box(a.gens_lcm().lcm(b.gens_lcm())))
            if (inter.contains(m) != (a.contains(m) && b.contains(m))) inter_ok = false;
        s.check(inter_ok, "intersection disagrees with membership" + tag);

        Monomial u = Monomial::one(n);
        for (auto& e : u.exps) e = static_cast<std::uint32_t>(gen::uniform_int(rng, 0, 2));
        const MonomialIdeal quo = colon(a, u);
        bool colon_ok = true;
        for (const Monomial& m : oracle::monomials_in_box(a.gens_lcm()))
            if (quo.contains(m) != a.contains(m.times(u))) colon_ok = false;
        s.check(colon_ok, "colon disagrees with membership at " + u.to_string() + tag);

        const int sp = gen::uniform_int(rng, 2, 3);
        const MonomialIdeal pw = power(a, sp);
        Monomial box = a.gens_lcm();
        for (int k = 1; k < sp; ++k) box = box.times(a.gens_lcm());
        bool power_ok = true;
        for (const Monomial& m : oracle::monomials_in_box(box))
            if (pw.contains(m) != oracle::power_member(a, m, sp)) power_ok = false;
        s.check(power_ok, "power " + std::to_string(sp) + " disagrees with membership" + tag);

        Monomial m0 = Monomial::one(n);
        for (auto& e : m0.exps) e = static_cast<std::uint32_t>(gen::uniform_int(rng, 0, 1));
        const MonomialIdeal sat = saturate(a, m0);
        std::uint32_t max_exp = 0;
        for (const Monomial& g : a.gens)
            for (std::uint32_t e : g.exps) max_exp = std::max(max_exp, e);
        bool sat_ok = true;
        for (const Monomial& m : oracle::monomials_in_box(a.gens_lcm())) {
            bool member = false;
            Monomial shifted = m;
            for (std::uint32_t k = 0; k <= max_exp && !member; ++k) {
                if (a.contains(shifted)) member = true;
                shifted = shifted.times(m0);
            }
            if (sat.contains(m) != member) sat_ok = false;
        }
        s.check(sat_ok, "saturation disagrees with membership at " + m0.to_string() + tag);

        // weighting commutes with minimalization and keeps the generator count
        const std::vector<int> w = gen::random_weights(rng, n, 3);
        std::vector<Monomial> raw;
        for (int k = 0; k < 4; ++k) {
            Monomial m = Monomial::one(n);
            do {
                for (auto& e : m.exps) e = static_cast<std::uint32_t>(gen::uniform_int(rng, 0, 2));
            } while (m.is_one());
            raw.push_back(std::move(m));
        }
        s.check(weight_ideal(MonomialIdeal{n, raw}, w) ==
                    weight_ideal(MonomialIdeal::make(n, raw), w),
                "weighting does not commute with minimalization" + tag);
        s.check(weight_ideal(a, w).gens.size() == a.gens.size(),
                "weighting changed the number of minimal generators" + tag);
    }
}

/* *************************************************************************
 * Suite 5: Betti tables, Koszul complexes, Hilbert series
 * *************************************************************************/

void suite_betti(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("betti");
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t);
        s.set_repro(ts);
        gen::Rng rng(ts);
        const MonomialIdeal a = gen::random_ideal(rng, 5, 5, 3);
        const std::vector<int> w = gen::random_weights(rng, a.n, 3);
        const std::string tag = " [" + ideal_str(a) + "]";

        const BettiTable t0 = betti_table(a, opts.field);
        s.check(t0.beta_total(0) == a.gens.size(),
                "beta_0 does not count the minimal generators" + tag);

        if (opts.field.is_rational()) {
            s.check(oracle::taylor_betti(a).multigraded == t0.multigraded,
                    "Betti table disagrees with the Taylor complex" + tag);

            IntPoly expected = IntPoly::one();
            for (const BettiEntry& e : t0.multigraded)
                expected.add_term(e.degree.total_degree(),
                                  (e.i % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(e.value));
            s.check(hilbert_numerator(a) == expected,
                    "Hilbert numerator disagrees with the Betti table" + tag);
        }

        // weighting: same table with rescaled degrees, same Koszul complexes
        const MonomialIdeal aw = weight_ideal(a, w);
        const BettiTable tw = betti_table(aw, opts.field);
        std::vector<BettiEntry> mapped;
        for (const BettiEntry& e : t0.multigraded)
            mapped.push_back({e.i, weighted_degree(e.degree, w), e.value});
        std::sort(mapped.begin(), mapped.end(), [](const BettiEntry& x, const BettiEntry& y) {
            if (x.i != y.i) return x.i < y.i;
            return grlex_less(x.degree, y.degree);
        });
        s.check(mapped == tw.multigraded, "weighted Betti table is not the degree-rescaled one" + tag);

        bool koszul_ok = true;
        for (const Monomial& b : lcm_lattice(a))
            if (upper_koszul(a, b) != upper_koszul(aw, weighted_degree(b, w))) koszul_ok = false;
        s.check(koszul_ok, "Koszul complexes change under weighting" + tag);

        // polarization: same graded table, height, and Hilbert numerator
        const PolarizeIdealResult pol = polarize_ideal(a);
        const BettiTable tp = betti_table(pol.ideal, opts.field);
        s.check(tp.graded() == t0.graded(), "polarization changed the graded Betti numbers" + tag);
        s.check(tp.projdim_ideal() == t0.projdim_ideal() && tp.regularity() == t0.regularity(),
                "polarization changed pd or regularity" + tag);
        s.check(height(pol.ideal) == height(a), "polarization changed the height" + tag);

        const int rho = pol.ideal.n - a.n;
        s.check(hilbert_numerator(a).times(IntPoly::one_minus_t_pow(pol.ideal.n)) ==
                    hilbert_numerator(pol.ideal).times(IntPoly::one_minus_t_pow(rho + a.n)),
                "Hilbert numerators are not related by the codimension shift" + tag);
    }
}

/* *************************************************************************
 * Suite 6: primary decomposition and associated primes
 * *************************************************************************/

void suite_decomposition(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("decomposition");
    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t);
        s.set_repro(ts);
        gen::Rng rng(ts);
        const MonomialIdeal a = gen::random_ideal(rng, 5, 5, 3);
        const std::vector<int> w = gen::random_weights(rng, a.n, 3);
        const std::string tag = " [" + ideal_str(a) + "]";

        const Decomposition dec = primary_decomposition(a);
        MonomialIdeal folded = dec.components[0].ideal;
        for (std::size_t k = 1; k < dec.components.size(); ++k)
            folded = intersect(folded, dec.components[k].ideal);
        s.check(folded == a, "components do not intersect back to the ideal" + tag);

        bool irredundant = true;
        if (dec.components.size() > 1) {
            for (std::size_t skip = 0; skip < dec.components.size(); ++skip) {
                MonomialIdeal rest;
                bool first = true;
                for (std::size_t k = 0; k < dec.components.size(); ++k) {
                    if (k == skip) continue;
                    rest = first ? dec.components[k].ideal : intersect(rest, dec.components[k].ideal);
                    first = false;
                }
                if (rest == a) irredundant = false;
            }
        }
        s.check(irredundant, "a primary component is redundant" + tag);

        bool radicals_ok = true;
        for (const PrimaryComponent& q : dec.components) {
            Face support{0};
            for (const Monomial& g : q.ideal.gens) support = support.united(g.support());
            if (!(support == q.radical_vars)) radicals_ok = false;
        }
        s.check(radicals_ok, "component radical is not its variable support" + tag);

        const std::vector<PrimeIdeal> ass = associated_primes(a);
        s.check(associated_primes_witnessed(a) == ass,
                "colon witnesses disagree with the decomposition primes" + tag);
        s.check(associated_primes(weight_ideal(a, w)) == ass,
                "weighting changed the associated primes" + tag);
        s.check(weighted_decomposition_check(a, w).matches,
                "weighted decomposition is not the weighting of the components" + tag);

        const auto [minimal, embedded] = minimal_and_embedded(a);
        int min_height = a.n + 1;
        for (const PrimeIdeal& p : minimal) min_height = std::min(min_height, p.height());
        s.check(height(a) == min_height && !minimal.empty(),
                "height is not the minimum over minimal primes" + tag);

        // bounded torsion-freeness probe against direct recomputation
        const TorsionFreeReport rep = normally_torsion_free_upto(a, 2);
        int first_ass = 0, first_sym = 0;
        std::vector<PrimeIdeal> extra;
        std::vector<Monomial> witnesses;
        for (int sp = 1; sp <= 2; ++sp) {
            const MonomialIdeal pw = power(a, sp);
            if (first_ass == 0) {
                for (const PrimeIdeal& p : associated_primes(pw))
                    if (std::find(ass.begin(), ass.end(), p) == ass.end()) {
                        if (first_ass == 0) first_ass = sp;
                        extra.push_back(p);
                    }
            }
            if (first_sym == 0) {
                const MonomialIdeal sym = symbolic_power(a, sp);
                if (!(sym == pw)) {
                    first_sym = sp;
                    for (const Monomial& g : sym.gens)
                        if (!pw.contains(g)) witnesses.push_back(g);
                }
            }
        }
        const bool report_ok = rep.checked_upto == 2 && rep.ass_stable == (first_ass == 0) &&
                               rep.symbolic_match == (first_sym == 0) &&
                               rep.first_ass_failure == first_ass &&
                               rep.first_symbolic_failure == first_sym &&
                               rep.extra_primes == extra && rep.symbolic_witnesses == witnesses;
        s.check(report_ok, "torsion-freeness report disagrees with recomputation" + tag);
    }
}

/* *************************************************************************
 * Suite 7: cycles and weighted edge ideals
 * *************************************************************************/

void suite_cycles(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("cycles");
    const MonomialIdeal triangle = edge_ideal(Graph::make(3, {{0, 1}, {1, 2}, {0, 2}}));
    const MonomialIdeal square = edge_ideal(Graph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));

    s.set_repro(trial_seed(opts.seed, suite_id, 0));
    const TorsionFreeReport r3 = normally_torsion_free_upto(triangle, 2);
    s.check(!r3.ass_stable && !r3.symbolic_match && r3.first_ass_failure == 2 &&
                r3.first_symbolic_failure == 2,
            "odd cycle on three vertices should fail both probes at power 2");
    s.check(r3.extra_primes == std::vector<PrimeIdeal>{PrimeIdeal{3, Face{7}}},
            "the embedded prime at power 2 should be the maximal ideal");
    const Monomial product{std::vector<std::uint32_t>{1, 1, 1}};
    s.check(std::find(r3.symbolic_witnesses.begin(), r3.symbolic_witnesses.end(), product) !=
                r3.symbolic_witnesses.end(),
            "the vertex product should witness the symbolic gap at power 2");

    const TorsionFreeReport r4 = normally_torsion_free_upto(square, 3);
    s.check(r4.ass_stable && r4.symbolic_match,
            "even cycle on four vertices should pass both probes up to power 3");

    for (int t = 0; t < opts.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t + 1);
        s.set_repro(ts);
        gen::Rng rng(ts);
        const std::vector<int> w3 = gen::random_weights(rng, 3, 3);
        const std::vector<int> w4 = gen::random_weights(rng, 4, 3);
        std::string tag = " [w3=";
        for (int x : w3) tag += std::to_string(x);
        tag += " w4=";
        for (int x : w4) tag += std::to_string(x);
        tag += "]";

        const TorsionFreeReport rw3 = normally_torsion_free_upto(weight_ideal(triangle, w3), 2);
        std::vector<Monomial> mapped;
        for (const Monomial& m : r3.symbolic_witnesses) mapped.push_back(weighted_degree(m, w3));
        std::sort(mapped.begin(), mapped.end(), grlex_less);
        std::vector<Monomial> got = rw3.symbolic_witnesses;
        std::sort(got.begin(), got.end(), grlex_less);
        s.check(rw3.ass_stable == r3.ass_stable && rw3.symbolic_match == r3.symbolic_match &&
                    rw3.first_ass_failure == r3.first_ass_failure &&
                    rw3.first_symbolic_failure == r3.first_symbolic_failure &&
                    rw3.extra_primes == r3.extra_primes && mapped == got,
                "weighted odd cycle verdict differs from the unweighted one" + tag);

        const TorsionFreeReport rw4 = normally_torsion_free_upto(weight_ideal(square, w4), 3);
        s.check(rw4.ass_stable == r4.ass_stable && rw4.symbolic_match == r4.symbolic_match,
                "weighted even cycle verdict differs from the unweighted one" + tag);
    }
}

/* *************************************************************************
 * Suite 8: property checkers, transport, and the implication chain
 * *************************************************************************/

void chain_checks(Session& s, const SimplicialComplex& c, const VerifyOptions& opts,
                  const std::string& tag) {
    const bool vd = is_vertex_decomposable(c);
    const bool sh = is_shellable(c);
    if (vd) s.check(sh, "vertex decomposable but not shellable" + tag);
    if (sh && c.is_pure()) {
        s.check(is_constructible_bounded(c) != TriBool::False,
                "shellable but refuted constructible" + tag);
        s.check(is_cohen_macaulay_reisner(c, opts.field), "shellable but not Cohen-Macaulay" + tag);
    }
    if (c.is_pure() && is_constructible_bounded(c) == TriBool::True)
        s.check(is_cohen_macaulay_reisner(c, opts.field), "constructible but not Cohen-Macaulay" + tag);

    std::vector<int> witness;
    if (is_vertex_decomposable(c, {}, &witness))
        s.check(replay_vertex_decomposition(c, witness), "shedding witness fails to replay" + tag);
    std::vector<Face> order;
    if (is_shellable(c, {}, &order))
        s.check(is_shelling_order(c, order), "shelling order fails independent re-check" + tag);
}

void suite_checkers(Session& s, const VerifyOptions& opts, int suite_id) {
    s.begin("checkers_transport");
    const int trials = std::min(opts.trials, 25);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.seed, suite_id, t);
        s.set_repro(ts);
        gen::Rng rng(ts);
        const gen::TransportInstance inst = gen::random_transport_instance(rng, 5, 2, 12);
        std::string tag = " [" + complex_str(inst.complex) + " d=";
        for (int d : inst.dims) tag += std::to_string(d);
        tag += "]";

        const TransportReport tr = property_transport(inst.complex, inst.dims, {}, opts.field);
        s.check(tr.vd_before == tr.vd_after, "vertex decomposability not transported" + tag);
        s.check(tr.shellable_before == tr.shellable_after, "shellability not transported" + tag);
        s.check(tr.cm_before == tr.cm_after, "Cohen-Macaulayness not transported" + tag);
        if (tr.constructible_before != TriBool::Unknown && tr.constructible_after != TriBool::Unknown)
            s.check(tr.constructible_before == tr.constructible_after,
                    "constructibility not transported" + tag);

        chain_checks(s, inst.complex, opts, tag);
        chain_checks(s, mixed_wreath(inst.complex, inst.dims).complex, opts, tag + " (wreath)");
    }
}

/* *************************************************************************
 * Suite 9: field comparisons on the bundled examples (observational)
 * *************************************************************************/

void suite_fields(Session& s, const VerifyOptions&, int) {
    s.begin("field_notes");

    const std::vector<std::pair<std::string, MonomialIdeal>> examples = {
        {"triangle-edge-ideal", edge_ideal(Graph::make(3, {{0, 1}, {1, 2}, {0, 2}}))},
        {"square-edge-ideal", edge_ideal(Graph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}))},
        {"pentagon-edge-ideal",
         edge_ideal(Graph::make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}))},
        {"mixed-power-triangle",
         MonomialIdeal::make(3, {Monomial{{2, 3, 0}}, Monomial{{0, 3, 4}}, Monomial{{2, 0, 4}}})},
        {"weighted-triangle-plus-point",
         weight_ideal(MonomialIdeal::make(4, {Monomial{{1, 1, 1, 0}}, Monomial{{1, 0, 0, 1}},
                                              Monomial{{0, 1, 0, 1}}, Monomial{{0, 0, 1, 1}}}),
                      {3, 4, 5, 2})},
    };
    for (const auto& [name, ideal] : examples) {
        const bool same = betti_table(ideal, FieldSpec::rationals()).multigraded ==
                          betti_table(ideal, FieldSpec::prime(32003)).multigraded;
        s.note("betti/" + name + ": characteristic 0 and 32003 " + (same ? "agree" : "differ"));
        s.check(true, "field comparison runs on " + name);
    }

    const SimplicialComplex projective_plane = SimplicialComplex::from_facets(
        6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
            {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
    auto fmt = [](const std::vector<std::int64_t>& h) {
        std::string out = "(";
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(h[i]);
        }
        return out + ")";
    };
    s.note("projective-plane homology: characteristic 0 " +
           fmt(reduced_homology_dims(projective_plane, FieldSpec::rationals())) +
           ", characteristic 2 " +
           fmt(reduced_homology_dims(projective_plane, FieldSpec::prime(2))));
    s.note(std::string("projective-plane Cohen-Macaulay: characteristic 0 ") +
           (is_cohen_macaulay_reisner(projective_plane, FieldSpec::rationals()) ? "yes" : "no") +
           ", characteristic 2 " +
           (is_cohen_macaulay_reisner(projective_plane, FieldSpec::prime(2)) ? "yes" : "no"));
    s.check(true, "field comparison runs on the projective plane");
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    VerifyReport rep;
    rep.seed = opts.seed;
    rep.trials = opts.trials;
    rep.characteristic = opts.field.to_string();
    Session s(rep);
    suite_core(s, opts, 1);
    suite_wreath(s, opts, 2);
    suite_weighted(s, opts, 3);
    suite_monomial(s, opts, 4);
    suite_betti(s, opts, 5);
    suite_decomposition(s, opts, 6);
    suite_cycles(s, opts, 7);
    suite_checkers(s, opts, 8);
    suite_fields(s, opts, 9);
    return rep;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["trials"] = trials;
    j["characteristic"] = characteristic;
    j["ok"] = ok();
    j["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& s : suites)
        j["suites"].push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}});
    j["failures"] = nlohmann::ordered_json::array();
    for (const VerifyFailure& f : failures)
        j["failures"].push_back(
            {{"suite", f.suite}, {"repro_seed", f.repro_seed}, {"detail", f.detail}});
    j["notes"] = notes;
    return j.dump(2);
}

}  // namespace wsc
