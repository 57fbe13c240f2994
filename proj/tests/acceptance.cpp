/* *************************************************************************
 * Acceptance gate: one line per criterion, exit code = number of failures.
 *
 * Fixed-value criteria are checked directly against frozen expectations;
 * the randomized criteria read the relevant batteries of a single seeded
 * run_verify pass (seed 42, 50 trials, rational coefficients).
 * *************************************************************************/

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "wsc/checkers.hpp"
#include "wsc/complex.hpp"
#include "wsc/decomposition.hpp"
#include "wsc/errors.hpp"
#include "wsc/homology.hpp"
#include "wsc/monomial.hpp"
#include "wsc/verify.hpp"
#include "wsc/weighted.hpp"
#include "wsc/wreath.hpp"

using namespace wsc;

namespace {

int g_failed = 0;

void criterion(int id, const char* what, bool pass) {
    std::printf("criterion %d (%s): %s\n", id, what, pass ? "PASS" : "FAIL");
    if (!pass) ++g_failed;
}

template <typename Fn>
bool guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        std::printf("  unexpected exception: %s\n", e.what());
        return false;
    }
}

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
    return SimplicialComplex::from_facets(n, facets);
}

Monomial mono(std::vector<std::uint32_t> exps) { return Monomial{std::move(exps)}; }

MonomialIdeal ideal(int n, std::vector<std::vector<std::uint32_t>> rows) {
    std::vector<Monomial> gens;
    for (auto& r : rows) gens.push_back(mono(std::move(r)));
    return MonomialIdeal::make(n, std::move(gens));
}

bool suites_clean(const VerifyReport& r, const std::set<std::string>& names) {
    bool seen_all = true;
    for (const auto& n : names) {
        const auto it = std::find_if(r.suites.begin(), r.suites.end(),
                                     [&](const SuiteResult& s) { return s.name == n; });
        if (it == r.suites.end() || it->checks == 0 || it->failures != 0) seen_all = false;
    }
    return seen_all;
}

bool check_suspension() {
    const auto r = one_point_suspension(cx(2, {{0}, {1}}), 0);
    const std::vector<Face> want = {Face::of({0, 1}, 3), Face::of({0, 2}, 3), Face::of({1, 2}, 3)};
    return r.complex.ambient_vertices() == 3 && r.complex.facets() == want;
}

bool check_weighted_ideal() {
    const auto wc = WeightedComplex::make(cx(4, {{0, 1}, {0, 2}, {1, 2}, {3}}), {3, 4, 5, 2});
    return sr_ideal_weighted(wc) ==
           ideal(4, {{3, 4, 5, 0}, {3, 0, 0, 2}, {0, 4, 0, 2}, {0, 0, 5, 2}});
}

bool check_polarizations() {
    const auto tri = polarize(WeightedComplex::make(full_simplex(2), {1, 2, 3}));
    if (!(tri.complex == full_simplex(5))) return false;
    if (tri.complex.facets().size() != 1 || tri.complex.facets()[0].size() != 6) return false;

    const auto pts = polarize(WeightedComplex::make(cx(2, {{0}, {1}}), {4, 1}));
    if (!(pts.complex == boundary_simplex(4))) return false;
    return sr_ideal(pts.complex) == ideal(5, {{1, 1, 1, 1, 1}});
}

bool check_decomposition() {
    const auto a = ideal(3, {{2, 3, 0}, {0, 3, 4}, {2, 0, 4}});
    const auto d = primary_decomposition(a);
    std::vector<MonomialIdeal> got;
    for (const auto& c : d.components) got.push_back(c.ideal);
    std::sort(got.begin(), got.end(), ideal_order_less);
    std::vector<MonomialIdeal> want = {ideal(3, {{2, 0, 0}, {0, 3, 0}}),
                                       ideal(3, {{2, 0, 0}, {0, 0, 4}}),
                                       ideal(3, {{0, 3, 0}, {0, 0, 4}})};
    std::sort(want.begin(), want.end(), ideal_order_less);
    if (got != want) return false;

    const auto tri = ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    return associated_primes(a) == associated_primes(tri);
}

bool check_wreath_f() {
    const auto oct = cx(6, {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                            {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
    const std::vector<int> dims = {2, 1, 2, 1, 3, 3};
    const auto r = mixed_wreath(oct, dims);
    if (r.complex.dim() != 14) return false;

    const auto f = wreath_f_formula(oct, dims);
    if (f.f0 != 18 || r.complex.vertex_support().size() != 18) return false;

    // brute-force top count straight off the constructed facet list
    std::uint64_t top = 0;
    for (const Face& facet : r.complex.facets())
        if (facet.size() == 15) ++top;
    return f.f_top == top && top == 210;
}

bool check_homology() {
    using V = std::vector<std::int64_t>;
    if (reduced_homology_dims(boundary_simplex(2), FieldSpec::rationals()) != V{0, 0, 1})
        return false;
    const auto oct = cx(6, {{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5},
                            {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
    // the Euler identity itself is revalidated inside every homology call
    return reduced_homology_dims(oct, FieldSpec::rationals()) == V{0, 0, 0, 1};
}

bool check_cycles_fixed() {
    const auto tri = ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    const auto c4 = ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}});

    const auto r4 = normally_torsion_free_upto(c4, 3);
    if (!(r4.ass_stable && r4.symbolic_match && r4.first_ass_failure == 0 &&
          r4.first_symbolic_failure == 0))
        return false;

    const auto r3 = normally_torsion_free_upto(tri, 2);
    const std::vector<PrimeIdeal> maximal = {PrimeIdeal{3, Face::of({0, 1, 2}, 3)}};
    if (!(r3.first_ass_failure == 2 && r3.first_symbolic_failure == 2 &&
          r3.extra_primes == maximal))
        return false;

    const auto m = mono({1, 1, 1});
    return symbolic_power(tri, 2).contains(m) && !power(tri, 2).contains(m);
}

}  // namespace

int main() {
    std::printf("acceptance: seed 42, 50 trials per battery, rational coefficients\n");

    VerifyReport report;
    bool verify_ran = false;
    try {
        report = run_verify(VerifyOptions{});
        verify_ran = true;
    } catch (const std::exception& e) {
        std::printf("verify batteries aborted: %s\n", e.what());
    }

    criterion(1, "one-point suspension of two points gives the three expected edges",
              guarded(check_suspension));
    criterion(2, "weighted face ideal of the triangle-with-apex complex",
              guarded(check_weighted_ideal));
    criterion(3, "polarized weighted simplex and weighted points match closed forms",
              guarded(check_polarizations));
    criterion(4, "worked primary decomposition and its associated primes",
              guarded(check_decomposition));
    criterion(5, "octahedron wreath dimension and f-counts", guarded(check_wreath_f));
    criterion(6, "seeded battery: weighting, polarization, decomposition theorems",
              verify_ran && suites_clean(report, {"betti", "decomposition", "weighted_sr",
                                                  "wreath", "monomial_ops"}));
    criterion(7, "sphere homology with the Euler identity enforced on every call",
              guarded(check_homology) && verify_ran && suites_clean(report, {"core_complex"}));
    criterion(8, "torsion-freeness verdicts on the two small cycles, weighted included",
              guarded(check_cycles_fixed) && verify_ran && suites_clean(report, {"cycles"}));
    criterion(9, "checker implication chain and wreath property transport",
              verify_ran && suites_clean(report, {"checkers_transport"}));

    if (verify_ran) {
        int checks = 0;
        for (const auto& s : report.suites) checks += s.checks;
        std::printf("batteries: %d checks, %zu failures across %zu suites\n", checks,
                    report.failures.size(), report.suites.size());
        for (const auto& f : report.failures)
            std::printf("  [%s] seed %llu: %s\n", f.suite.c_str(),
                        static_cast<unsigned long long>(f.repro_seed), f.detail.c_str());
        if (!report.ok() && g_failed == 0) ++g_failed;  // stray suite failures still gate
    } else if (g_failed == 0) {
        ++g_failed;
    }

    std::printf("acceptance: %d of 9 criteria failed\n", g_failed > 9 ? 9 : g_failed);
    return g_failed;
}
