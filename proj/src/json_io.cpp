#include "wsc/json_io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsc/errors.hpp"

namespace wsc {

namespace {

using nlohmann::ordered_json;

int require_int(const ordered_json& j, const std::string& where, int lo, int hi) {
    if (!j.is_number_integer())
        fail(ErrorCode::ParseError, where + " must be an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi)
        fail(ErrorCode::ParseError, where + " = " + std::to_string(v) + " is out of range [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::vector<std::vector<int>> require_int_lists(const ordered_json& j, const std::string& field,
                                                int lo, int hi) {
    if (!j.is_array()) fail(ErrorCode::ParseError, field + " must be an array");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const ordered_json& row = j[i];
        const std::string where = field + "[" + std::to_string(i) + "]";
        if (!row.is_array()) fail(ErrorCode::ParseError, where + " must be an array");
        std::vector<int> vals;
        for (std::size_t k = 0; k < row.size(); ++k)
            vals.push_back(require_int(row[k], where + "[" + std::to_string(k) + "]", lo, hi));
        out.push_back(std::move(vals));
    }
    return out;
}

ParsedInput parse_object(const ordered_json& j) {
    if (!j.is_object()) fail(ErrorCode::ParseError, "top-level JSON must be an object");
    if (!j.contains("n")) fail(ErrorCode::ParseError, "missing field: n");
    ParsedInput in;

    if (j.contains("edges")) {
        const int n = require_int(j["n"], "n", 0, SimplicialComplex::kMaxVertices);
        std::vector<std::pair<int, int>> edges;
        for (auto& e : require_int_lists(j["edges"], "edges", 0, n - 1)) {
            if (e.size() != 2)
                fail(ErrorCode::ParseError, "edges entries must have exactly two vertices");
            edges.emplace_back(e[0], e[1]);
        }
        in.kind = InputKind::Graph;
        in.graph = Graph::make(n, std::move(edges));
        return in;
    }

    if (j.contains("gens")) {
        const int n = require_int(j["n"], "n", 1, 1 << 20);
        const auto rows = require_int_lists(j["gens"], "gens", 0, 1 << 20);
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                fail(ErrorCode::ParseError, "gens[" + std::to_string(i) + "] must list " +
                                                std::to_string(n) + " exponents");
            Monomial m = Monomial::one(n);
            for (int k = 0; k < n; ++k)
                m.exps[static_cast<std::size_t>(k)] =
                    static_cast<std::uint32_t>(rows[i][static_cast<std::size_t>(k)]);
            gens.push_back(std::move(m));
        }
        in.kind = InputKind::Ideal;
        in.ideal = MonomialIdeal::make(n, std::move(gens));
        return in;
    }

    if (!j.contains("facets"))
        fail(ErrorCode::ParseError, "expected one of the fields: facets, gens, edges");
    const int n = require_int(j["n"], "n", 0, SimplicialComplex::kMaxVertices);
    in.complex = SimplicialComplex::from_facets(n, require_int_lists(j["facets"], "facets", 0, n - 1));
    if (j.contains("weights")) {
        if (!j["weights"].is_array() || static_cast<int>(j["weights"].size()) != n)
            fail(ErrorCode::ParseError, "weights must list one value per vertex");
        for (std::size_t i = 0; i < j["weights"].size(); ++i)
            in.weights.push_back(
                require_int(j["weights"][i], "weights[" + std::to_string(i) + "]", 1, 1 << 20));
        in.kind = InputKind::Weighted;
    } else {
        in.kind = InputKind::Complex;
    }
    return in;
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (first < text.size() && text[first] == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
        }
        return parse_object(j);
    }
    ParsedInput in;
    in.kind = InputKind::Ideal;
    in.ideal = parse_ideal_text(text);
    return in;
}

Monomial parse_monomial(const std::string& text, int n) {
    Monomial m = Monomial::one(n);
    std::size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto read_number = [&](const char* what) -> std::uint64_t {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail(ErrorCode::ParseError, std::string("expected ") + what + " at position " +
                                            std::to_string(pos) + " in '" + text + "'");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (std::uint64_t{1} << 32)) fail(ErrorCode::ParseError, "number too large in '" + text + "'");
            ++pos;
        }
        return v;
    };

    skip_space();
    if (pos < text.size() && text[pos] == '1' &&
        (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
        ++pos;
        skip_space();
        if (pos != text.size()) fail(ErrorCode::ParseError, "trailing input after 1 in '" + text + "'");
        return m;
    }

    while (true) {
        skip_space();
        if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X'))
            fail(ErrorCode::ParseError, "expected a variable like x2 at position " +
                                            std::to_string(pos) + " in '" + text + "'");
        ++pos;
        const std::uint64_t idx = read_number("a variable index");
        if (idx < 1 || idx > static_cast<std::uint64_t>(n))
            fail(ErrorCode::ParseError, "variable x" + std::to_string(idx) + " is outside x1..x" +
                                            std::to_string(n));
        std::uint64_t e = 1;
        skip_space();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = read_number("an exponent");
        }
        const std::uint64_t total = m.exps[static_cast<std::size_t>(idx - 1)] + e;
        if (total > 0xffffffffULL) fail(ErrorCode::ParseError, "exponent overflow in '" + text + "'");
        m.exps[static_cast<std::size_t>(idx - 1)] = static_cast<std::uint32_t>(total);
        skip_space();
        if (pos == text.size()) break;
        if (text[pos] != '*')
            fail(ErrorCode::ParseError, "expected '*' at position " + std::to_string(pos) +
                                            " in '" + text + "'");
        ++pos;
    }
    return m;
}

MonomialIdeal parse_ideal_text(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    while (!parts.empty() && parts.back().find_first_not_of(" \t\r\n") == std::string::npos)
        parts.pop_back();
    if (parts.empty()) fail(ErrorCode::ParseError, "empty monomial list");

    int n = 1;
    for (const std::string& p : parts) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] != 'x' && p[i] != 'X') continue;
            std::size_t k = i + 1;
            std::uint64_t idx = 0;
            while (k < p.size() && std::isdigit(static_cast<unsigned char>(p[k]))) {
                idx = idx * 10 + static_cast<std::uint64_t>(p[k] - '0');
                if (idx > 1000000) fail(ErrorCode::ParseError, "variable index too large in '" + p + "'");
                ++k;
            }
            if (k > i + 1) n = std::max(n, static_cast<int>(idx));
        }
    }
    std::vector<Monomial> gens;
    for (const std::string& p : parts) gens.push_back(parse_monomial(p, n));
    return MonomialIdeal::make(n, std::move(gens));
}

std::string print_json(const SimplicialComplex& c) {
    ordered_json j;
    j["n"] = c.ambient_vertices();
    j["facets"] = ordered_json::array();
    for (Face f : c.facets()) j["facets"].push_back(f.vertices());
    return j.dump(2);
}

std::string print_json(const WeightedComplex& wc) {
    ordered_json j = ordered_json::parse(print_json(wc.complex));
    j["weights"] = wc.weights;
    return j.dump(2);
}

std::string print_json(const MonomialIdeal& a) {
    ordered_json j;
    j["n"] = a.n;
    j["gens"] = ordered_json::array();
    for (const Monomial& g : a.gens) j["gens"].push_back(g.exps);
    return j.dump(2);
}

std::string print_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.n;
    j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back(std::vector<int>{u, v});
    return j.dump(2);
}

}  // namespace wsc
