#include "graphlang/letters.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "graphlang/errors.hpp"

namespace graphlang {

std::string Letter::display() const {
    if (is_edge) return "E(" + std::to_string(b1) + "," + std::to_string(b2) + ")";
    return "V(" + std::to_string(b1) + ")";
}

bool Letter::block_big(int which, const Torsion& tor) const {
    int v = which == 0 ? b1 : b2;
    return v >= tor.threshold;
}

bool Letter::has_big_block(const Torsion& tor) const {
    return b1 >= tor.threshold || (is_edge && b2 >= tor.threshold);
}

bool letter_order_less(const Letter& x, const Letter& y) {
    if (x.is_edge != y.is_edge) return x.is_edge; // edges precede vertices
    // short-lex on the concrete codewords: by length, then a < b
    if (x.is_edge) {
        if (x.b1 + x.b2 != y.b1 + y.b2) return x.b1 + x.b2 < y.b1 + y.b2;
        return x.b1 < y.b1;
    }
    return x.b1 < y.b1;
}

std::optional<std::size_t> LetterAlphabet::index_of(const Letter& z) const {
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] == z) return i;
    return std::nullopt;
}

std::optional<std::size_t> LetterAlphabet::index_of_edge(int c, int d) const {
    return index_of(Letter{true, c, d});
}

std::optional<std::size_t> LetterAlphabet::index_of_vertex(int c) const {
    return index_of(Letter{false, c, 0});
}

Word reduced_form(const Word& w, const Torsion& tor) {
    auto letters = parse_code(w);
    if (!letters) throw ParseError("reduced_form: word is not a graph word", 0);
    Word out;
    for (const CodeLetter& z : *letters) {
        CodeLetter r = z;
        r.first = static_cast<int>(class_rep(tor, z.first));
        if (z.is_edge) r.second = static_cast<int>(class_rep(tor, z.second));
        out += r.word();
    }
    return out;
}

SaturationClass saturation_class(const Letter& z, const Torsion& tor) {
    SaturationClass sc;
    auto block = [&](int c) {
        SaturationClass::Block b;
        b.base = c;
        b.period = c >= tor.threshold ? tor.period : 0;
        return b;
    };
    sc.blocks.push_back(block(z.b1));
    if (z.is_edge) sc.blocks.push_back(block(z.b2));
    return sc;
}

std::string SaturationClass::display() const {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += "\xc3\x97"; // ×
        const Block& b = blocks[i];
        if (b.period == 0) {
            out += "{" + std::to_string(b.base) + "}";
        } else {
            out += "{" + std::to_string(b.base) + "," + std::to_string(b.base + b.period) + "," +
                   std::to_string(b.base + 2 * b.period) + ",...}";
        }
    }
    return out;
}

std::pair<LetterAlphabet, LetterDfa> build_letter_dfa(const Dfa& d, const Torsion& tor) {
    const int ell = tor.threshold + tor.period - 1;
    std::vector<Letter> candidates;
    for (int m = 1; m <= ell; ++m)
        for (int n = 1; n <= ell; ++n) candidates.push_back({true, m, n});
    for (int c = 1; c <= ell; ++c) candidates.push_back({false, c, 0});
    std::sort(candidates.begin(), candidates.end(), letter_order_less);

    const int states = d.state_count();
    std::vector<std::vector<int>> move(candidates.size(), std::vector<int>(states));
    for (std::size_t z = 0; z < candidates.size(); ++z) {
        const Word w = candidates[z].word();
        for (int s = 0; s < states; ++s) move[z][s] = run_dfa(d, s, w);
    }

    // Reachability over the candidate-letter graph.
    std::vector<char> reach(states, 0);
    std::deque<int> work{d.start};
    reach[d.start] = 1;
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (std::size_t z = 0; z < candidates.size(); ++z) {
            int t = move[z][s];
            if (!reach[t]) {
                reach[t] = 1;
                work.push_back(t);
            }
        }
    }
    std::vector<char> coreach(states, 0);
    {
        std::vector<std::vector<int>> rev(states);
        for (std::size_t z = 0; z < candidates.size(); ++z)
            for (int s = 0; s < states; ++s) rev[move[z][s]].push_back(s);
        std::deque<int> back;
        for (int s = 0; s < states; ++s)
            if (d.accepting[s]) {
                coreach[s] = 1;
                back.push_back(s);
            }
        while (!back.empty()) {
            int s = back.front();
            back.pop_front();
            for (int p : rev[s])
                if (!coreach[p]) {
                    coreach[p] = 1;
                    back.push_back(p);
                }
        }
    }

    // A letter belongs to the alphabet iff it sits on some accepting path.
    std::vector<char> used(candidates.size(), 0);
    for (std::size_t z = 0; z < candidates.size(); ++z)
        for (int s = 0; s < states; ++s)
            if (reach[s] && coreach[s] && coreach[move[z][s]] && reach[move[z][s]]) used[z] = 1;

    LetterAlphabet alphabet;
    alphabet.torsion = tor;
    std::vector<std::size_t> keep;
    for (std::size_t z = 0; z < candidates.size(); ++z)
        if (used[z]) {
            alphabet.letters.push_back(candidates[z]);
            keep.push_back(z);
        }

    // Renumber live states.
    std::vector<int> id(states, -1);
    int live = 0;
    for (int s = 0; s < states; ++s)
        if (reach[s] && coreach[s]) id[s] = live++;

    LetterDfa ld;
    ld.accepts_epsilon = d.accepting[d.start] != 0;
    if (id[d.start] < 0) {
        // Nothing is accepted beyond possibly the empty word.
        alphabet.letters.clear();
        ld.start = 0;
        ld.accepting.assign(1, ld.accepts_epsilon ? 1 : 0);
        ld.next.assign(1, std::vector<int>());
        return {alphabet, ld};
    }
    ld.accepting.assign(live, 0);
    ld.next.assign(live, std::vector<int>(alphabet.size(), -1));
    ld.start = id[d.start];
    for (int s = 0; s < states; ++s) {
        if (id[s] < 0) continue;
        ld.accepting[id[s]] = d.accepting[s];
        for (std::size_t k = 0; k < keep.size(); ++k) {
            int t = move[keep[k]][s];
            if (id[t] >= 0) ld.next[id[s]][k] = id[t];
        }
    }
    return {alphabet, ld};
}

bool letter_dfa_accepts(const LetterDfa& ld, const std::vector<std::size_t>& word) {
    if (ld.state_count() == 0) return false;
    int s = ld.start;
    for (std::size_t z : word) {
        s = ld.next[s][z];
        if (s < 0) return false;
    }
    return ld.accepting[s] != 0;
}

// ---------------------------------------------------------------------------
// State elimination and semilinear evaluation
// ---------------------------------------------------------------------------

namespace {

struct RegexArena {
    enum class Kind { eps, sym, alt, cat, star };
    struct Node {
        Kind kind;
        std::size_t sym = 0;
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    std::size_t cap;

    explicit RegexArena(std::size_t node_cap) : cap(node_cap) {}

    int make(Node n) {
        if (nodes.size() >= cap)
            throw ResourceError("letter_parikh: regex node cap exceeded during state elimination");
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }
    int eps() { return make({Kind::eps}); }
    int sym(std::size_t z) { return make({Kind::sym, z}); }
    int alt(int l, int r) {
        if (l < 0) return r;
        if (r < 0) return l;
        return make({Kind::alt, 0, l, r});
    }
    int cat(int l, int r) {
        if (l < 0 || r < 0) return -1;
        if (nodes[l].kind == Kind::eps) return r;
        if (nodes[r].kind == Kind::eps) return l;
        return make({Kind::cat, 0, l, r});
    }
    int star(int x) {
        if (x < 0) return eps();
        if (nodes[x].kind == Kind::eps) return eps();
        return make({Kind::star, 0, x});
    }
};

} // namespace

SemilinearSet letter_parikh(const LetterDfa& ld, std::size_t alphabet_size,
                            std::size_t regex_node_cap, int star_cap, std::size_t piece_cap) {
    const int n = ld.state_count();
    RegexArena arena(regex_node_cap);

    // Generalized automaton: nodes 0..n-1 plus INIT=n, FINAL=n+1.
    const int init = n, fin = n + 1;
    std::map<std::pair<int, int>, int> arcs; // -1 absent
    auto add_arc = [&](int from, int to, int re) {
        if (re < 0) return;
        auto it = arcs.find({from, to});
        if (it == arcs.end())
            arcs[{from, to}] = re;
        else
            it->second = arena.alt(it->second, re);
    };

    if (n > 0) {
        add_arc(init, ld.start, arena.eps());
        for (int s = 0; s < n; ++s) {
            if (ld.accepting[s]) add_arc(s, fin, arena.eps());
            for (std::size_t z = 0; z < ld.next[s].size(); ++z)
                if (ld.next[s][z] >= 0) add_arc(s, ld.next[s][z], arena.sym(z));
        }
    }

    std::vector<char> alive(n, 1);
    auto degree = [&](int s) {
        int deg = 0;
        for (const auto& [key, re] : arcs) {
            (void)re;
            if (key.first == s || key.second == s) ++deg;
        }
        return deg;
    };

    for (int round = 0; round < n; ++round) {
        int victim = -1, best = 0;
        for (int s = 0; s < n; ++s) {
            if (!alive[s]) continue;
            int deg = degree(s);
            if (victim < 0 || deg < best) {
                victim = s;
                best = deg;
            }
        }
        if (victim < 0) break;
        alive[victim] = 0;

        int self = -1;
        std::vector<std::pair<int, int>> in, out; // (node, regex)
        for (auto it = arcs.begin(); it != arcs.end();) {
            auto [from, to] = it->first;
            if (from == victim && to == victim) {
                self = it->second;
                it = arcs.erase(it);
            } else if (to == victim) {
                in.emplace_back(from, it->second);
                it = arcs.erase(it);
            } else if (from == victim) {
                out.emplace_back(to, it->second);
                it = arcs.erase(it);
            } else {
                ++it;
            }
        }
        int loop = self >= 0 ? arena.star(self) : arena.eps();
        for (const auto& [p, rin] : in)
            for (const auto& [q, rout] : out) add_arc(p, q, arena.cat(arena.cat(rin, loop), rout));
    }

    auto it = arcs.find({init, fin});
    if (it == arcs.end()) {
        SemilinearSet s = sl_empty(alphabet_size);
        if (ld.accepts_epsilon) s = sl_zero(alphabet_size);
        return s;
    }

    std::map<int, SemilinearSet> memo; // node-based, references stay valid
    std::function<const SemilinearSet&(int)> eval = [&](int id) -> const SemilinearSet& {
        auto found = memo.find(id);
        if (found != memo.end()) return found->second;
        const auto& node = arena.nodes[id];
        SemilinearSet s = sl_empty(alphabet_size);
        switch (node.kind) {
        case RegexArena::Kind::eps:
            s = sl_zero(alphabet_size);
            break;
        case RegexArena::Kind::sym:
            s = sl_unit(alphabet_size, node.sym);
            break;
        case RegexArena::Kind::alt:
            s = sl_union(eval(node.left), eval(node.right), piece_cap);
            break;
        case RegexArena::Kind::cat:
            s = sl_sum(eval(node.left), eval(node.right), piece_cap);
            break;
        case RegexArena::Kind::star:
            s = sl_star(eval(node.left), star_cap, piece_cap);
            break;
        }
        return memo.emplace(id, std::move(s)).first->second;
    };
    return eval(it->second);
}

} // namespace graphlang
