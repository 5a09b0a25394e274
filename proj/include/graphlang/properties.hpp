#pragma once

#include <functional>
#include <optional>
#include <string>

#include "graphlang/config.hpp"
#include "graphlang/family.hpp"
#include "graphlang/graph.hpp"

namespace graphlang {

/// A decidable graph property. Predicates run on the undirected
/// simplification of a member unless `directed` is set. `witness_bound` maps
/// |V_F| to a vertex bound r(|V_F|) such that a satisfiable family contains a
/// satisfying member within the bound.
struct PropertyPlugin {
    std::string name;
    std::function<bool(const Graph&)> predicate;
    bool hereditary = false;      // closed under induced subgraphs
    bool component_local = false; // holds iff some connected component satisfies it
    bool directed = false;
    std::optional<std::function<long(long)>> witness_bound;
};

enum class Answer { yes, no, resource };

struct Verdict {
    Answer answer = Answer::no;
    std::optional<Graph> witness_graph;
    std::optional<Word> witness_word;
    std::optional<std::size_t> piece;
};

/// Generic engine: hereditary shortcut, always-Yes shortcuts for
/// component-local properties on diversifying pieces, then bounded-witness
/// search. A blown search cap yields a resource verdict, never a wrong
/// answer.
Verdict decide(const Analysis& a, const PropertyPlugin& plugin, const Config& cfg = {});

Verdict hamiltonian(const Analysis& a, const Config& cfg = {});
Verdict perfect_matching(const Analysis& a, const Config& cfg = {});

/// Is there a member with a dominating set of size at most log2 |V|?
Verdict dominating_set_log(const Analysis& a, const Config& cfg = {});

/// Is there a member with a defensive alliance of size at most log2 |V|?
Verdict defensive_alliance_log(const Analysis& a, const Config& cfg = {});

// Brute-force predicates over small graphs. All of them expect (and enforce)
// symmetric loop-free inputs except where noted.
bool has_hamiltonian_cycle(const Graph& g); // simplifies internally
bool has_perfect_matching(const Graph& g);  // simplifies internally
bool has_dominating_set_within(const Graph& g, long max_size);
bool has_defensive_alliance_within(const Graph& g, long max_size);
bool is_planar(const Graph& g); // simplifies internally; K5/K33 minor search

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

} // namespace graphlang
