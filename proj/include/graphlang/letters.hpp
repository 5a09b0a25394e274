#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlang/automata.hpp"
#include "graphlang/codec.hpp"
#include "graphlang/semilinear.hpp"

namespace graphlang {

/// A reduced codeword: block exponents are fixed points of class_rep, i.e.
/// lie in 1..t+p-1. A block is big when its exponent reaches the threshold.
struct Letter {
    bool is_edge = false;
    int b1 = 0;
    int b2 = 0; // edges only

    Word word() const { return CodeLetter{is_edge, b1, b2}.word(); }
    std::string display() const; // V(c) or E(c,d)
    bool block_big(int which, const Torsion& tor) const;
    bool has_big_block(const Torsion& tor) const;
    auto operator<=>(const Letter&) const = default;
};

/// Letters ordered with edge letters first, short-lex within each kind.
struct LetterAlphabet {
    std::vector<Letter> letters;
    Torsion torsion;

    std::size_t size() const noexcept { return letters.size(); }
    std::optional<std::size_t> index_of(const Letter& z) const;
    std::optional<std::size_t> index_of_edge(int c, int d) const;
    std::optional<std::size_t> index_of_vertex(int c) const;
};

bool letter_order_less(const Letter& x, const Letter& y);

/// rf(w): every maximal b-block b^n replaced by b^{class_rep(n)}.
/// Throws ParseError when w is not a graph word.
Word reduced_form(const Word& w, const Torsion& tor);

/// Symbolic description of the saturation class [z]: per block the set of
/// concrete exponents, {c} when c < t and c + pℕ otherwise.
struct SaturationClass {
    struct Block {
        long base = 0;
        long period = 0; // 0 marks a singleton class
    };
    std::vector<Block> blocks; // one entry per block of the letter

    std::string display() const; // e.g. "{1,3,5,...}×{2,4,6,...}"
};

SaturationClass saturation_class(const Letter& z, const Torsion& tor);

/// DFA over the reduced letters: same states as the word DFA, with
/// δ_C(q,z) = δ(q, h(z)). Trimmed to states on accepting paths; missing
/// transitions (-1) are dead.
struct LetterDfa {
    int start = 0;
    std::vector<char> accepting;
    std::vector<std::vector<int>> next; // [state][letter index]
    bool accepts_epsilon = false;

    int state_count() const noexcept { return static_cast<int>(next.size()); }
};

/// Builds the reduced alphabet (exactly the letters on some accepting path)
/// and the letter-DFA for a minimal DFA of a language inside the code.
std::pair<LetterAlphabet, LetterDfa> build_letter_dfa(const Dfa& d, const Torsion& tor);

bool letter_dfa_accepts(const LetterDfa& ld, const std::vector<std::size_t>& word);

/// Parikh image of the letter-DFA language: state elimination to a regex over
/// letters, then compositional semilinear evaluation.
SemilinearSet letter_parikh(const LetterDfa& ld, std::size_t alphabet_size,
                            std::size_t regex_node_cap = 1000000, int star_cap = 12,
                            std::size_t piece_cap = 10000);

} // namespace graphlang
