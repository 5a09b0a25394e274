#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "graphlang/codec.hpp"

namespace graphlang {

/// Regex AST over the two literals a, b.
/// Syntax: `a b | * + ? {m,n} ( )`, juxtaposition for concatenation.
struct Regex {
    enum class Kind { empty_word, literal, alternation, concatenation, star, plus, option, repeat };
    Kind kind = Kind::empty_word;
    char literal = 'a';
    std::vector<Regex> children;
    int min = 0, max = 0; // bounded repetition, m <= n
};

Regex parse_regex(std::string_view text);

/// Thompson automaton with epsilon moves; single accepting state.
struct Nfa {
    struct Arc {
        int to = 0;
        int symbol = -1; // 0 = a, 1 = b, -1 = epsilon
    };
    std::vector<std::vector<Arc>> arcs;
    int start = 0;
    int accept = 0;
};

/// Bounded repetition is expanded at the AST level before construction.
Nfa to_nfa(const Regex& re);

bool nfa_accepts(const Nfa& nfa, const Word& w);

/// Total DFA over {a,b}; a dead sink is materialized whenever needed so the
/// transition function is a plain function on dense state numbers.
struct Dfa {
    int start = 0;
    std::vector<std::array<int, 2>> next; // [state][symbol]
    std::vector<char> accepting;

    int state_count() const noexcept { return static_cast<int>(next.size()); }
    auto operator<=>(const Dfa&) const = default;
};

Dfa determinize(const Nfa& nfa);

/// Unique minimal DFA with BFS-canonical state numbering, so two equivalent
/// minimal automata compare equal.
Dfa minimize(const Dfa& d);

Dfa product_intersection(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& d);

bool dfa_accepts(const Dfa& d, const Word& w);
int run_dfa(const Dfa& d, int state, std::string_view w);
bool dfa_empty(const Dfa& d);
bool dfa_subset(const Dfa& a, const Dfa& b);
bool dfa_equivalent(const Dfa& a, const Dfa& b);

/// Per-state shortest distance to an accepting state; -1 when none reachable.
std::vector<int> accept_distances(const Dfa& d);

/// Minimal DFA of the graph code language ({ab^+a} ∪ {ab^+aaab^+a})*.
const Dfa& graph_code_dfa();

struct CodeIntersection {
    Dfa dfa;      // minimal DFA of L ∩ code language
    bool shrunk;  // true when the intersection is strictly smaller than L
};
CodeIntersection intersect_with_code(const Dfa& d);

Dfa compile_regex(std::string_view text); // parse → nfa → dfa → minimize

/// Threshold/period of the cyclic submonoid generated by the letter b in the
/// transition monoid of a minimal DFA: t+p minimal with δ_b^t = δ_b^{t+p}.
struct Torsion {
    int threshold = 0;
    int period = 1;
};

Torsion torsion_pair(const Dfa& minimal);

/// The exponent c with [b^n] = [b^c] and 0 <= c <= t+p-1.
long class_rep(const Torsion& tor, long n);

/// True iff every element m of the transition monoid satisfies m^k = m^{k+1}
/// for some k <= monoid size. Throws ResourceError past `monoid_cap`.
bool is_aperiodic(const Dfa& minimal, std::size_t monoid_cap = 100000);

} // namespace graphlang
