#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlang/graph.hpp"

namespace graphlang {

/// Words over the binary alphabet {a,b}.
using Word = std::string;

/// One codeword of the graph code: a vertex ab^i a or an edge ab^i aaa b^j a.
struct CodeLetter {
    bool is_edge = false;
    int first = 0;  // vertex exponent, or source exponent of an edge
    int second = 0; // target exponent of an edge (unused for vertices)

    Word word() const;
};

/// Greedy left-to-right factorization over the code {ab^+a} ∪ {ab^+aaab^+a}.
/// The code is prefix-decodable: scan ab^+a, then test for an aab^+a
/// continuation. Returns nothing when w is not a product of codewords.
std::optional<std::vector<CodeLetter>> parse_code(const Word& w);

/// Membership in the code language whose words denote finite graphs.
bool is_graph_word(const Word& w);

/// ρ: vertices are all i with factor ab^i a, edges all (i,j) with factor
/// ab^i aaa b^j a. Repetition and order of codewords do not matter.
/// Throws ParseError when w is not a graph word.
Graph decode(const Word& w);

/// γ: the short-lex minimal word of shape edges-then-isolated-vertices whose
/// decode is isomorphic to g. Brute-force over vertex relabelings; throws
/// ResourceError beyond `cap` vertices.
Word encode(const Graph& g, int cap = 10);

} // namespace graphlang
