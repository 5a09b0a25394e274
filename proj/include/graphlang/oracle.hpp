#pragma once

#include <functional>
#include <vector>

#include "graphlang/automata.hpp"
#include "graphlang/codec.hpp"
#include "graphlang/config.hpp"
#include "graphlang/graph.hpp"

namespace graphlang {

/// Streams all accepted words of length at most max_len in short-lex order
/// (by length, then a < b). Prunes prefixes that cannot reach an accepting
/// state in the remaining budget. The callback returns false to stop early.
void enumerate_words(const Dfa& d, std::size_t max_len,
                     const std::function<bool(const Word&)>& emit, const Config& cfg = {});

struct OracleEntry {
    Graph canonical;
    Word witness; // shortest accepted word decoding to this graph
};

struct OracleRun {
    std::vector<OracleEntry> entries; // sorted by canonical graph
    std::size_t words_enumerated = 0;
    std::size_t oversized = 0; // decodes beyond store_cap: counted, not stored
};

/// Ground truth by exhaustion: decode every accepted word, canonicalize and
/// keep the shortest witness per graph. Graphs with more than max_vertices
/// vertices are skipped; graphs above store_cap are counted only.
OracleRun oracle_members(const Dfa& d, std::size_t max_len, int max_vertices,
                         const Config& cfg = {}, int store_cap = 8);

} // namespace graphlang
