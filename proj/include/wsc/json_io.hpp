#pragma once

#include <string>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/monomial.hpp"
#include "wsc/weighted.hpp"

namespace wsc {

/* *************************************************************************
 * Input and output formats
 *
 * JSON objects carry "n" plus one of "facets" (optionally with "weights"),
 * "gens", or "edges". Anything that is not a JSON object is read as a
 * comma-separated list of monomials like  x1^2*x2, x3.
 * *************************************************************************/

enum class InputKind { Complex, Weighted, Ideal, Graph };

struct ParsedInput {
    InputKind kind = InputKind::Complex;
    SimplicialComplex complex;  // Complex and Weighted
    std::vector<int> weights;   // Weighted
    MonomialIdeal ideal;        // Ideal
    Graph graph;                // Graph
};

ParsedInput parse_input(const std::string& text);

// Monomial in variables x1..xn: factors x<k> or x<k>^<e> joined by '*',
// or the literal 1.
Monomial parse_monomial(const std::string& text, int n);

// Comma-separated monomials; the variable count is the largest index used.
MonomialIdeal parse_ideal_text(const std::string& text);

std::string print_json(const SimplicialComplex& c);
std::string print_json(const WeightedComplex& wc);
std::string print_json(const MonomialIdeal& a);
std::string print_json(const Graph& g);

}  // namespace wsc
