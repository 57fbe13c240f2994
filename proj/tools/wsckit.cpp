#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wsc/checkers.hpp"
#include "wsc/complex.hpp"
#include "wsc/decomposition.hpp"
#include "wsc/errors.hpp"
#include "wsc/homology.hpp"
#include "wsc/json_io.hpp"
#include "wsc/monomial.hpp"
#include "wsc/verify.hpp"
#include "wsc/weighted.hpp"
#include "wsc/wreath.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) wsc::fail(wsc::ErrorCode::ParseError, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

wsc::ParsedInput load(const std::string& path) { return wsc::parse_input(read_all(path)); }

wsc::FieldSpec field_from(long long ch) {
    return ch == 0 ? wsc::FieldSpec::rationals() : wsc::FieldSpec::prime(ch);
}

// Every command that consumes an ideal also takes the other input kinds
// through their standard ideal: Stanley-Reisner for complexes (weighted or
// not), the edge ideal for graphs.
wsc::MonomialIdeal effective_ideal(const wsc::ParsedInput& in) {
    switch (in.kind) {
        case wsc::InputKind::Ideal: return in.ideal;
        case wsc::InputKind::Graph: return wsc::edge_ideal(in.graph);
        case wsc::InputKind::Weighted:
            return wsc::sr_ideal_weighted(wsc::WeightedComplex::make(in.complex, in.weights));
        case wsc::InputKind::Complex: return wsc::sr_ideal(in.complex);
    }
    wsc::fail(wsc::ErrorCode::ParseError, "unrecognized input kind");
}

const wsc::SimplicialComplex& effective_complex(const wsc::ParsedInput& in) {
    if (in.kind != wsc::InputKind::Complex && in.kind != wsc::InputKind::Weighted)
        wsc::fail(wsc::ErrorCode::ParseError, "this command needs a complex input (facets)");
    return in.complex;
}

ordered_json complex_json(const wsc::SimplicialComplex& c) {
    return ordered_json::parse(wsc::print_json(c));
}

ordered_json ideal_json(const wsc::MonomialIdeal& a) {
    return ordered_json::parse(wsc::print_json(a));
}

ordered_json map_json(const wsc::WreathVertexMap& m) {
    ordered_json j;
    j["copies"] = m.copies;
    j["offsets"] = m.offsets;
    ordered_json blocks = ordered_json::array();
    for (int v = 0; v < m.original_n; ++v) {
        std::vector<int> ids;
        for (int k = 0; k < m.copies[static_cast<std::size_t>(v)]; ++k) ids.push_back(m.copy_id(v, k));
        blocks.push_back(ids);
    }
    j["blocks"] = blocks;
    return j;
}

std::vector<int> prime_ids(const wsc::PrimeIdeal& p) { return p.vars.vertices(); }

std::string gens_text(const wsc::MonomialIdeal& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.gens.size(); ++i) {
        if (i) s += ", ";
        s += a.gens[i].to_string();
    }
    return s + ")";
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Betti numbers in the usual triangle: column i, row j - i.
void print_betti_triangle(const wsc::BettiTable& t, std::ostream& os) {
    const auto graded = t.graded();
    int maxi = 0;
    std::int64_t maxr = 0;
    for (const auto& [key, value] : graded) {
        maxi = std::max(maxi, key.first);
        maxr = std::max(maxr, static_cast<std::int64_t>(key.second) - key.first);
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(maxi) + 1, 1);
    for (const auto& [key, value] : graded)
        width[static_cast<std::size_t>(key.first)] =
            std::max(width[static_cast<std::size_t>(key.first)], std::to_string(value).size());

    const auto cell = [&](const std::string& s, std::size_t w) {
        std::string out(w + 2 - s.size(), ' ');
        return out + s;
    };
    os << "      ";
    for (int i = 0; i <= maxi; ++i) os << cell(std::to_string(i), width[static_cast<std::size_t>(i)]);
    os << "\n";
    for (std::int64_t r = 0; r <= maxr; ++r) {
        std::string label = std::to_string(r) + ":";
        os << cell(label, 4);
        for (int i = 0; i <= maxi; ++i) {
            const auto it = graded.find({i, static_cast<std::uint64_t>(r + i)});
            os << cell(it == graded.end() ? "." : std::to_string(it->second),
                       width[static_cast<std::size_t>(i)]);
        }
        os << "\n";
    }
    os << "total:";
    for (int i = 0; i <= maxi; ++i)
        os << cell(std::to_string(t.beta_total(i)), width[static_cast<std::size_t>(i)]);
    os << "\n";
}

const char* kind_name(wsc::InputKind k) {
    switch (k) {
        case wsc::InputKind::Complex: return "complex";
        case wsc::InputKind::Weighted: return "weighted-complex";
        case wsc::InputKind::Ideal: return "ideal";
        case wsc::InputKind::Graph: return "graph";
    }
    return "?";
}

/* *************************************************************************
 * Commands
 * *************************************************************************/

int cmd_info(const std::string& input) {
    const wsc::ParsedInput in = load(input);
    ordered_json j;
    j["kind"] = kind_name(in.kind);
    if (in.kind == wsc::InputKind::Complex || in.kind == wsc::InputKind::Weighted) {
        const auto& c = in.complex;
        j["n"] = c.ambient_vertices();
        j["dim"] = c.dim();
        j["void"] = c.is_void();
        j["pure"] = c.is_pure();
        j["facets"] = complex_json(c)["facets"];
        if (!c.is_void()) {
            j["f_vector"] = wsc::f_vector(c).counts;
            j["reduced_euler"] = wsc::reduced_euler_characteristic(c);
        }
        ordered_json nf = ordered_json::array();
        for (wsc::Face f : wsc::minimal_nonfaces(c)) nf.push_back(f.vertices());
        j["minimal_nonfaces"] = nf;
        if (in.kind == wsc::InputKind::Weighted) j["weights"] = in.weights;
        std::cerr << kind_name(in.kind) << " on " << c.ambient_vertices() << " vertices, dim "
                  << c.dim() << ", " << c.facets().size() << " facets"
                  << (c.is_pure() ? ", pure" : ", nonpure") << "\n";
    } else if (in.kind == wsc::InputKind::Ideal) {
        j["n"] = in.ideal.n;
        j["gens"] = ideal_json(in.ideal)["gens"];
        j["gens_text"] = [&] {
            std::vector<std::string> out;
            for (const auto& g : in.ideal.gens) out.push_back(g.to_string());
            return out;
        }();
        j["squarefree"] = in.ideal.is_squarefree();
        std::cerr << "ideal " << gens_text(in.ideal) << " in " << in.ideal.n << " variables\n";
    } else {
        j["n"] = in.graph.n;
        ordered_json e = ordered_json::array();
        for (auto [u, v] : in.graph.edges) e.push_back(std::vector<int>{u, v});
        j["edges"] = e;
        j["bipartite"] = in.graph.is_bipartite();
        std::cerr << "graph on " << in.graph.n << " vertices, " << in.graph.edges.size()
                  << " edges, " << (in.graph.is_bipartite() ? "bipartite" : "not bipartite") << "\n";
    }
    emit(j);
    return 0;
}

int cmd_wreath(const std::string& input, const std::vector<int>& dims) {
    const wsc::ParsedInput in = load(input);
    const auto& c = effective_complex(in);
    const wsc::WreathResult w = wsc::mixed_wreath(c, dims);
    const wsc::WreathFCounts counts = wsc::wreath_f_formula(c, dims);
    ordered_json j;
    j["complex"] = complex_json(w.complex);
    j["map"] = map_json(w.map);
    j["dim"] = w.complex.dim();
    j["f0"] = counts.f0;
    j["f_top"] = counts.f_top;
    std::cerr << "wreath: dim " << w.complex.dim() << ", " << counts.f0 << " vertices, "
              << w.complex.facets().size() << " facets (" << counts.f_top << " top-dimensional)\n";
    emit(j);
    return 0;
}

int cmd_polarize(const std::string& input) {
    const wsc::ParsedInput in = load(input);
    if (in.kind != wsc::InputKind::Weighted)
        wsc::fail(wsc::ErrorCode::ParseError, "polarize needs a weighted complex (facets + weights)");
    const wsc::WreathResult w = wsc::polarize(wsc::WeightedComplex::make(in.complex, in.weights));
    ordered_json j;
    j["complex"] = complex_json(w.complex);
    j["map"] = map_json(w.map);
    std::cerr << "polarization: " << w.map.total << " vertices, dim " << w.complex.dim() << ", "
              << w.complex.facets().size() << " facets\n";
    emit(j);
    return 0;
}

int cmd_sr_ideal(const std::string& input) {
    const wsc::ParsedInput in = load(input);
    const auto& c = effective_complex(in);
    const wsc::MonomialIdeal a = in.kind == wsc::InputKind::Weighted
                                     ? wsc::sr_ideal_weighted(wsc::WeightedComplex::make(c, in.weights))
                                     : wsc::sr_ideal(c);
    std::cerr << "ideal " << gens_text(a) << "\n";
    emit(ideal_json(a));
    return 0;
}

int cmd_weight(const std::string& input, const std::vector<int>& w) {
    const wsc::MonomialIdeal a = effective_ideal(load(input));
    const wsc::MonomialIdeal out = wsc::weight_ideal(a, w);
    std::cerr << "weighted ideal " << gens_text(out) << "\n";
    emit(ideal_json(out));
    return 0;
}

int cmd_polarize_ideal(const std::string& input) {
    const wsc::PolarizeIdealResult r = wsc::polarize_ideal(effective_ideal(load(input)));
    ordered_json j;
    j["ideal"] = ideal_json(r.ideal);
    j["map"] = map_json(r.map);
    std::cerr << "polarized ideal " << gens_text(r.ideal) << " in " << r.ideal.n << " variables\n";
    emit(j);
    return 0;
}

int cmd_betti(const std::string& input, long long ch) {
    const wsc::MonomialIdeal a = effective_ideal(load(input));
    const wsc::FieldSpec f = field_from(ch);
    const wsc::BettiTable t = wsc::betti_table(a, f);
    ordered_json j;
    j["n"] = a.n;
    j["characteristic"] = f.to_string();
    ordered_json entries = ordered_json::array();
    for (const auto& e : t.multigraded)
        entries.push_back({{"i", e.i}, {"degree", e.degree.exps}, {"value", e.value}});
    j["entries"] = entries;
    ordered_json graded = ordered_json::array();
    for (const auto& [key, value] : t.graded())
        graded.push_back({{"i", key.first}, {"degree", key.second}, {"value", value}});
    j["graded"] = graded;
    j["projdim_ideal"] = t.projdim_ideal();
    j["projdim_quotient"] = t.projdim_quotient();
    j["regularity"] = t.regularity();
    j["depth_quotient"] = a.n - t.projdim_quotient();
    j["height"] = wsc::height(a);
    j["dim_quotient"] = a.n - wsc::height(a);
    j["cohen_macaulay_quotient"] = a.n - t.projdim_quotient() == a.n - wsc::height(a);
    print_betti_triangle(t, std::cerr);
    emit(j);
    return 0;
}

int cmd_hilbert(const std::string& input) {
    const wsc::MonomialIdeal a = effective_ideal(load(input));
    const wsc::IntPoly num = wsc::hilbert_numerator(a);
    ordered_json j;
    j["n"] = a.n;
    j["numerator"] = num.c;
    j["numerator_text"] = num.to_string();
    j["denominator_power"] = a.n;
    std::cerr << "HS = (" << num.to_string() << ") / (1-t)^" << a.n << "\n";
    emit(j);
    return 0;
}

int cmd_decompose(const std::string& input) {
    const wsc::MonomialIdeal a = effective_ideal(load(input));
    const wsc::Decomposition d = wsc::primary_decomposition(a);
    ordered_json comps = ordered_json::array();
    for (const auto& q : d.components) {
        ordered_json c;
        c["radical"] = q.radical_vars.vertices();
        c["gens"] = ideal_json(q.ideal)["gens"];
        comps.push_back(c);
    }
    ordered_json j;
    j["n"] = a.n;
    j["components"] = comps;
    std::cerr << d.components.size() << " primary components:\n";
    for (const auto& q : d.components)
        std::cerr << "  " << gens_text(q.ideal) << "  radical " << q.radical_vars.to_string() << "\n";
    emit(j);
    return 0;
}

int cmd_ass(const std::string& input) {
    const wsc::MonomialIdeal a = effective_ideal(load(input));
    const auto ass = wsc::associated_primes(a);
    const auto [minimal, embedded] = wsc::minimal_and_embedded(a);
    ordered_json j;
    j["n"] = a.n;
    const auto pack = [](const std::vector<wsc::PrimeIdeal>& ps) {
        ordered_json out = ordered_json::array();
        for (const auto& p : ps) out.push_back(prime_ids(p));
        return out;
    };
    j["associated"] = pack(ass);
    j["minimal"] = pack(minimal);
    j["embedded"] = pack(embedded);
    j["height"] = wsc::height(a);
    j["dim_quotient"] = wsc::dim_quotient(a);
    std::cerr << ass.size() << " associated primes (" << minimal.size() << " minimal, "
              << embedded.size() << " embedded), height " << wsc::height(a) << "\n";
    emit(j);
    return 0;
}

int cmd_ntf(const std::string& input, int max_power) {
    const wsc::ParsedInput in = load(input);
    const wsc::MonomialIdeal a = effective_ideal(in);
    const wsc::TorsionFreeReport r = wsc::normally_torsion_free_upto(a, max_power);
    ordered_json j;
    j["checked_upto"] = r.checked_upto;
    j["ass_stable"] = r.ass_stable;
    j["symbolic_match"] = r.symbolic_match;
    j["normally_torsion_free_upto_bound"] = r.ass_stable && r.symbolic_match;
    j["first_ass_failure"] = r.first_ass_failure;
    j["first_symbolic_failure"] = r.first_symbolic_failure;
    ordered_json extra = ordered_json::array();
    for (const auto& p : r.extra_primes) extra.push_back(prime_ids(p));
    j["extra_primes"] = extra;
    ordered_json wit = ordered_json::array();
    for (const auto& m : r.symbolic_witnesses) wit.push_back(m.exps);
    j["symbolic_witnesses"] = wit;
    if (in.kind == wsc::InputKind::Graph) {
        j["bipartite"] = in.graph.is_bipartite();
        std::cerr << "graph is " << (in.graph.is_bipartite() ? "bipartite" : "not bipartite") << "\n";
    }
    if (r.ass_stable && r.symbolic_match) {
        std::cerr << "no torsion found up to power " << r.checked_upto << "\n";
    } else {
        if (r.first_ass_failure)
            std::cerr << "new associated primes appear at power " << r.first_ass_failure << "\n";
        if (r.first_symbolic_failure)
            std::cerr << "symbolic power exceeds the ordinary power at " << r.first_symbolic_failure;
        if (!r.symbolic_witnesses.empty())
            std::cerr << " (witness " << r.symbolic_witnesses.front().to_string() << ")";
        std::cerr << "\n";
    }
    emit(j);
    return 0;
}

int cmd_check(const std::string& input, const std::string& which, std::size_t bound,
              std::size_t vd_nodes, long long ch) {
    const wsc::ParsedInput in = load(input);
    const auto& c = effective_complex(in);
    wsc::CheckerOptions opts;
    if (bound) {
        opts.shelling_facet_bound = bound;
        opts.constructible_facet_bound = bound;
    }
    if (vd_nodes) opts.vd_node_bound = vd_nodes;
    const wsc::FieldSpec f = field_from(ch);

    ordered_json j;
    const bool all = which == "all";
    if (all || which == "vd") {
        std::vector<int> witness;
        const bool vd = wsc::is_vertex_decomposable(c, opts, &witness);
        j["vertex_decomposable"] = vd;
        if (vd) j["shedding_witness"] = witness;
        std::cerr << "vertex decomposable: " << (vd ? "yes" : "no") << "\n";
    }
    if (all || which == "shell") {
        std::vector<wsc::Face> order;
        const bool sh = wsc::is_shellable(c, opts, &order);
        j["shellable"] = sh;
        if (sh) {
            ordered_json o = ordered_json::array();
            for (wsc::Face fct : order) o.push_back(fct.vertices());
            j["shelling_order"] = o;
        }
        std::cerr << "shellable: " << (sh ? "yes" : "no") << "\n";
    }
    if (all || which == "constructible") {
        const wsc::TriBool r = wsc::is_constructible_bounded(c, opts);
        j["constructible"] = wsc::to_string(r);
        std::cerr << "constructible: " << wsc::to_string(r) << "\n";
    }
    if (all || which == "cm") {
        const bool cm = wsc::is_cohen_macaulay_reisner(c, f);
        j["cohen_macaulay"] = cm;
        j["characteristic"] = f.to_string();
        std::cerr << "Cohen-Macaulay (characteristic " << f.to_string() << "): " << (cm ? "yes" : "no")
                  << "\n";
    }
    emit(j);
    return 0;
}

int cmd_verify(std::uint64_t seed, int trials, long long ch) {
    wsc::VerifyOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.field = field_from(ch);
    const wsc::VerifyReport rep = wsc::run_verify(opts);
    int checks = 0;
    for (const auto& s : rep.suites) checks += s.checks;
    std::cerr << rep.suites.size() << " suites, " << checks << " checks, " << rep.failures.size()
              << " failures\n";
    for (const auto& f : rep.failures)
        std::cerr << "  [" << f.suite << " seed " << f.repro_seed << "] " << f.detail << "\n";
    for (const auto& n : rep.notes) std::cerr << "  note: " << n << "\n";
    std::cout << rep.to_json() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted simplicial complexes, wreath products, and monomial ideals"};
    app.require_subcommand(1);

    std::string input = "-";
    std::vector<int> dims, weights;
    long long characteristic = 0;
    std::string which = "all";
    std::size_t bound = 0, vd_nodes = 0;
    int max_power = 3, trials = 50;
    std::uint64_t seed = 42;

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin")->capture_default_str();
    };
    const auto add_char = [&](CLI::App* cmd) {
        cmd->add_option("--char", characteristic, "coefficient characteristic (0 or a prime)")
            ->envname("WSCKIT_CHAR")
            ->capture_default_str();
    };

    auto* info = app.add_subcommand("info", "describe an input");
    add_input(info);

    auto* wreath = app.add_subcommand("wreath", "mixed wreath product of a complex");
    add_input(wreath);
    wreath->add_option("--weights,--dims", dims, "copy dimension d_i per vertex")
        ->required()
        ->delimiter(',');

    auto* polarize = app.add_subcommand("polarize", "polarization of a weighted complex");
    add_input(polarize);

    auto* sr = app.add_subcommand("sr-ideal", "Stanley-Reisner ideal of a complex");
    add_input(sr);

    auto* weight = app.add_subcommand("weight", "apply vertex weights to an ideal");
    add_input(weight);
    weight->add_option("--weights", weights, "weight w_i per variable")->required()->delimiter(',');

    auto* pol_ideal = app.add_subcommand("polarize-ideal", "polarization of a monomial ideal");
    add_input(pol_ideal);

    auto* betti = app.add_subcommand("betti", "multigraded Betti table of an ideal");
    add_input(betti);
    add_char(betti);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series numerator of a quotient");
    add_input(hilbert);

    auto* decompose = app.add_subcommand("decompose", "primary decomposition of an ideal");
    add_input(decompose);

    auto* ass = app.add_subcommand("ass", "associated primes of an ideal");
    add_input(ass);

    auto* ntf = app.add_subcommand("ntf", "probe normal torsion-freeness up to a power");
    add_input(ntf);
    ntf->add_option("--max-power", max_power, "largest power to probe")->capture_default_str();

    auto* check = app.add_subcommand("check", "combinatorial property checks on a complex");
    check->add_option("which", which, "vd, shell, constructible, cm, or all")
        ->check(CLI::IsMember({"vd", "shell", "constructible", "cm", "all"}))
        ->capture_default_str();
    add_input(check);
    check->add_option("--bound", bound, "facet bound for the bounded checkers");
    check->add_option("--vd-nodes", vd_nodes, "node budget for the shedding search");
    add_char(check);

    auto* verify = app.add_subcommand("verify", "run the randomized self-verification batteries");
    verify->add_option("--seed", seed, "base seed")->capture_default_str();
    verify->add_option("--trials", trials, "trials per suite")->capture_default_str();
    add_char(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(input);
        if (wreath->parsed()) return cmd_wreath(input, dims);
        if (polarize->parsed()) return cmd_polarize(input);
        if (sr->parsed()) return cmd_sr_ideal(input);
        if (weight->parsed()) return cmd_weight(input, weights);
        if (pol_ideal->parsed()) return cmd_polarize_ideal(input);
        if (betti->parsed()) return cmd_betti(input, characteristic);
        if (hilbert->parsed()) return cmd_hilbert(input);
        if (decompose->parsed()) return cmd_decompose(input);
        if (ass->parsed()) return cmd_ass(input);
        if (ntf->parsed()) return cmd_ntf(input, max_power);
        if (check->parsed()) return cmd_check(input, which, bound, vd_nodes, characteristic);
        if (verify->parsed()) return cmd_verify(seed, trials, characteristic);
    } catch (const wsc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == wsc::ErrorCode::ResourceLimit ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
