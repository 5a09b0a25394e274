#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphlang/automata.hpp"
#include "graphlang/config.hpp"
#include "graphlang/graph.hpp"
#include "graphlang/letters.hpp"
#include "graphlang/semilinear.hpp"

namespace graphlang {

/// Per-letter multiplicity bound derived from a normalized linear piece:
/// q(z) when the periods never touch z and z has a big block, infinite when
/// they do, and 1 for letters whose blocks are all below the threshold
/// (repetitions of those are invisible to decoding).
struct Alpha {
    bool infinite = false;
    long count = 1;

    auto operator<=>(const Alpha&) const = default;
};

/// One normalized linear piece restricted to its own support alphabet.
struct FamilyPiece {
    std::vector<std::size_t> letters; // indices into the language alphabet, ascending
    Vec base;                         // aligned with `letters`, all entries >= 1
    std::vector<Vec> periods;         // aligned with `letters`
    Vec period_sum;
    std::vector<Alpha> alpha; // aligned with `letters`
    Torsion torsion;

    std::optional<std::size_t> local_index(std::size_t global_letter) const;
};

/// Finite graph at reduced exponents with the diversifying parts marked.
/// A marked edge always has a marked endpoint; at most one marked isolated
/// vertex survives construction.
struct MarkedGraph {
    Graph graph;
    std::vector<VertexId> marked_vertices; // sorted
    std::vector<EdgePair> marked_edges;    // sorted

    bool vertex_marked(VertexId v) const;
    bool edge_marked(VertexId u, VertexId v) const;
};

struct WidthBounds {
    bool bounded = true;
    long vertex_cover = 0;
    long bag_size = 0;
};

std::vector<FamilyPiece> build_pieces(const SemilinearSet& normalized, const LetterAlphabet& C);

MarkedGraph marked_graph(const FamilyPiece& piece, const LetterAlphabet& C);

/// 1: no infinite letter. 2: infinite letters but none with two big blocks.
/// 3: an infinite edge letter with two distinct big blocks. 4: an infinite
/// self-loop letter. Classes grow with the rank.
int piece_rank(const FamilyPiece& piece, const LetterAlphabet& C);

WidthBounds width_bounds(const FamilyPiece& piece, const LetterAlphabet& C);

/// Everything the downstream operations need about one language.
struct Analysis {
    std::string language;
    Dfa dfa; // minimal DFA of L intersected with the code language
    bool intersection_shrunk = false;
    Torsion torsion;
    bool epsilon = false; // empty word accepted (empty graph in the family)
    LetterAlphabet alphabet;
    LetterDfa letter_dfa;
    SemilinearSet parikh_raw;
    SemilinearSet parikh_normalized;
    std::vector<FamilyPiece> pieces;
    std::vector<MarkedGraph> marked;
    std::vector<int> ranks;
    std::vector<WidthBounds> widths;
    int overall_rank = 1;
    bool chromatic_infinite = false;
    long chromatic = 0;
    std::optional<std::size_t> family_size; // complete count, rank-1 families only
};

Analysis analyze(std::string_view regex_text, const Config& cfg = {});

struct MemberResult {
    bool yes = false;
    Word witness;          // accepted word decoding to the queried graph
    std::size_t piece = 0; // first piece admitting an assignment
};

/// Decides g ∈ ρ(L) by searching, per piece, for an exponent-class labeling
/// of g's vertices compatible with the piece alphabet and its alpha bounds.
MemberResult member(const Analysis& a, const Graph& g, const Config& cfg = {});

/// All canonical family members with at most max_vertices vertices.
std::vector<Graph> enumerate_family(const Analysis& a, int max_vertices, const Config& cfg = {});

/// Members of one piece. With edge_maximal set, infinite edge letters are
/// realized with every available concrete pair; the result then covers all
/// members up to edge-subgraphs with the same vertices, which suffices for
/// properties preserved under adding edges.
std::vector<Graph> enumerate_piece_members(const Analysis& a, std::size_t piece_idx,
                                           int max_vertices, bool edge_maximal,
                                           const Config& cfg = {});

/// Supremum of chromatic numbers over the family; infinite iff some piece
/// has a marked self-loop. Self-loops are ignored when coloring.
struct ChromaticSup {
    bool infinite = false;
    long value = 0;
};
ChromaticSup chromatic_sup(const Analysis& a, const Config& cfg = {});

/// Proper coloring number of the undirected simplification; 0 for the empty
/// graph, self-loops and edge directions ignored.
int chromatic_number(const Graph& g);

} // namespace graphlang
