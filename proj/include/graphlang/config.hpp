#pragma once

#include <cstddef>

namespace graphlang {

/// Caps shared across the pipeline. All values must stay positive.
struct Config {
    int canonical_vertex_cap = 10;        // canonical_form / encode permutation search
    int member_vertex_cap = 10;           // membership assignment search
    int star_union_cap = 12;              // linear pieces entering a Kleene star
    std::size_t piece_cap = 10000;        // linear pieces after normalization splits
    std::size_t regex_node_cap = 1000000; // regex nodes built during state elimination
    std::size_t oracle_max_len_cap = 64;  // longest word the oracle will enumerate
    std::size_t oracle_step_budget = 200000000; // prefix-tree nodes visited by the oracle
    std::size_t enumerate_budget = 5000000;     // candidate combinations per piece
    std::size_t monoid_cap = 100000;      // transition monoid enumeration
};

} // namespace graphlang
