#include "graphlang/automata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "graphlang/errors.hpp"

namespace graphlang {

// ---------------------------------------------------------------------------
// Regex parsing
// ---------------------------------------------------------------------------

namespace {

class RegexParser {
public:
    explicit RegexParser(std::string_view text) : text_(text) {}

    Regex parse() {
        Regex re = alternation();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return re;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_atom_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == 'a' || c == 'b' || c == '(';
    }

    Regex alternation() {
        Regex first = concatenation();
        if (!peek_is('|')) return first;
        Regex alt;
        alt.kind = Regex::Kind::alternation;
        alt.children.push_back(std::move(first));
        while (peek_is('|')) {
            ++pos_;
            alt.children.push_back(concatenation());
        }
        return alt;
    }

    Regex concatenation() {
        std::vector<Regex> parts;
        while (at_atom_start()) parts.push_back(repetition());
        if (parts.empty()) return Regex{}; // empty word
        if (parts.size() == 1) return std::move(parts.front());
        Regex cat;
        cat.kind = Regex::Kind::concatenation;
        cat.children = std::move(parts);
        return cat;
    }

    Regex repetition() {
        Regex inner = atom();
        for (;;) {
            skip_space();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c == '*' || c == '+' || c == '?') {
                ++pos_;
                Regex wrap;
                wrap.kind = c == '*'   ? Regex::Kind::star
                            : c == '+' ? Regex::Kind::plus
                                       : Regex::Kind::option;
                wrap.children.push_back(std::move(inner));
                inner = std::move(wrap);
            } else if (c == '{') {
                std::size_t open = pos_;
                ++pos_;
                long m = read_number(open);
                long n = m;
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    n = read_number(open);
                }
                skip_space();
                if (pos_ >= text_.size() || text_[pos_] != '}')
                    throw ParseError("unterminated repetition", open);
                ++pos_;
                if (m > n) throw ParseError("repetition bounds require m <= n", open);
                Regex wrap;
                wrap.kind = Regex::Kind::repeat;
                wrap.min = static_cast<int>(m);
                wrap.max = static_cast<int>(n);
                wrap.children.push_back(std::move(inner));
                inner = std::move(wrap);
            } else {
                break;
            }
        }
        return inner;
    }

    long read_number(std::size_t ctx) {
        skip_space();
        std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (begin == pos_) throw ParseError("expected a number in repetition", ctx);
        long value = 0;
        for (std::size_t i = begin; i < pos_; ++i) {
            value = value * 10 + (text_[i] - '0');
            if (value > 1000000) throw ParseError("repetition bound too large", begin);
        }
        return value;
    }

    Regex atom() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("expected a, b or (", pos_);
        char c = text_[pos_];
        if (c == 'a' || c == 'b') {
            ++pos_;
            Regex lit;
            lit.kind = Regex::Kind::literal;
            lit.literal = c;
            return lit;
        }
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            Regex inner = alternation();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("unbalanced parenthesis", open);
            ++pos_;
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// x{m,n} becomes m copies followed by n-m optional copies.
Regex expand_repeats(const Regex& re) {
    Regex out;
    out.kind = re.kind;
    out.literal = re.literal;
    out.min = re.min;
    out.max = re.max;
    for (const Regex& c : re.children) out.children.push_back(expand_repeats(c));
    if (re.kind != Regex::Kind::repeat) return out;

    Regex inner = std::move(out.children.front());
    Regex cat;
    cat.kind = Regex::Kind::concatenation;
    for (int i = 0; i < re.min; ++i) cat.children.push_back(inner);
    for (int i = re.min; i < re.max; ++i) {
        Regex opt;
        opt.kind = Regex::Kind::option;
        opt.children.push_back(inner);
        cat.children.push_back(std::move(opt));
    }
    if (cat.children.empty()) return Regex{}; // x{0,0} is the empty word
    if (cat.children.size() == 1) return std::move(cat.children.front());
    return cat;
}

} // namespace

Regex parse_regex(std::string_view text) { return RegexParser(text).parse(); }

// ---------------------------------------------------------------------------
// Thompson construction
// ---------------------------------------------------------------------------

namespace {

struct NfaBuilder {
    Nfa nfa;

    int fresh() {
        nfa.arcs.emplace_back();
        return static_cast<int>(nfa.arcs.size()) - 1;
    }

    void arc(int from, int to, int sym) { nfa.arcs[from].push_back({to, sym}); }

    // Returns (start, accept) of the fragment.
    std::pair<int, int> build(const Regex& re) {
        switch (re.kind) {
        case Regex::Kind::empty_word: {
            int s = fresh();
            return {s, s};
        }
        case Regex::Kind::literal: {
            int s = fresh(), t = fresh();
            arc(s, t, re.literal == 'a' ? 0 : 1);
            return {s, t};
        }
        case Regex::Kind::alternation: {
            int s = fresh(), t = fresh();
            for (const Regex& c : re.children) {
                auto [cs, ct] = build(c);
                arc(s, cs, -1);
                arc(ct, t, -1);
            }
            return {s, t};
        }
        case Regex::Kind::concatenation: {
            int s = -1, prev = -1;
            for (const Regex& c : re.children) {
                auto [cs, ct] = build(c);
                if (s < 0)
                    s = cs;
                else
                    arc(prev, cs, -1);
                prev = ct;
            }
            return {s, prev};
        }
        case Regex::Kind::star: {
            auto [cs, ct] = build(re.children.front());
            int s = fresh(), t = fresh();
            arc(s, cs, -1);
            arc(s, t, -1);
            arc(ct, cs, -1);
            arc(ct, t, -1);
            return {s, t};
        }
        case Regex::Kind::plus: {
            auto [cs, ct] = build(re.children.front());
            int s = fresh(), t = fresh();
            arc(s, cs, -1);
            arc(ct, cs, -1);
            arc(ct, t, -1);
            return {s, t};
        }
        case Regex::Kind::option: {
            auto [cs, ct] = build(re.children.front());
            int s = fresh(), t = fresh();
            arc(s, cs, -1);
            arc(s, t, -1);
            arc(ct, t, -1);
            return {s, t};
        }
        case Regex::Kind::repeat:
            break; // expanded below
        }
        throw std::logic_error("repeat node survived expansion");
    }
};

void eps_closure(const Nfa& nfa, std::set<int>& states) {
    std::deque<int> work(states.begin(), states.end());
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (const auto& a : nfa.arcs[s])
            if (a.symbol < 0 && states.insert(a.to).second) work.push_back(a.to);
    }
}

} // namespace

Nfa to_nfa(const Regex& re) {
    NfaBuilder b;
    auto [s, t] = b.build(expand_repeats(re));
    b.nfa.start = s;
    b.nfa.accept = t;
    return b.nfa;
}

bool nfa_accepts(const Nfa& nfa, const Word& w) {
    std::set<int> cur{nfa.start};
    eps_closure(nfa, cur);
    for (char c : w) {
        int sym = c == 'a' ? 0 : 1;
        std::set<int> next;
        for (int s : cur)
            for (const auto& a : nfa.arcs[s])
                if (a.symbol == sym) next.insert(a.to);
        eps_closure(nfa, next);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    return cur.count(nfa.accept) > 0;
}

// ---------------------------------------------------------------------------
// Subset construction and minimization
// ---------------------------------------------------------------------------

Dfa determinize(const Nfa& nfa) {
    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> subsets;
    Dfa d;
    auto intern = [&](std::set<int> s) {
        auto [it, fresh] = ids.try_emplace(std::move(s), static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(it->first);
            d.next.push_back({-1, -1});
            d.accepting.push_back(it->first.count(nfa.accept) > 0);
        }
        return it->second;
    };

    std::set<int> start{nfa.start};
    eps_closure(nfa, start);
    d.start = intern(std::move(start));

    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
        for (int sym = 0; sym < 2; ++sym) {
            std::set<int> next;
            for (int s : subsets[i])
                for (const auto& a : nfa.arcs[s])
                    if (a.symbol == sym) next.insert(a.to);
            eps_closure(nfa, next);
            d.next[i][sym] = intern(std::move(next)); // empty subset acts as the sink
        }
    }
    return d;
}

namespace {

Dfa renumber_bfs(const Dfa& d) {
    std::vector<int> order(d.state_count(), -1);
    std::deque<int> work{d.start};
    int next_id = 0;
    order[d.start] = next_id++;
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (int sym = 0; sym < 2; ++sym) {
            int t = d.next[s][sym];
            if (order[t] < 0) {
                order[t] = next_id++;
                work.push_back(t);
            }
        }
    }
    Dfa out;
    out.start = 0;
    out.next.assign(next_id, {0, 0});
    out.accepting.assign(next_id, 0);
    for (int s = 0; s < d.state_count(); ++s) {
        if (order[s] < 0) continue; // unreachable
        out.accepting[order[s]] = d.accepting[s];
        for (int sym = 0; sym < 2; ++sym) out.next[order[s]][sym] = order[d.next[s][sym]];
    }
    return out;
}

} // namespace

Dfa minimize(const Dfa& d0) {
    Dfa d = renumber_bfs(d0); // drop unreachable states
    const int n = d.state_count();
    std::vector<int> cls(n);
    for (int s = 0; s < n; ++s) cls[s] = d.accepting[s] ? 1 : 0;

    for (;;) {
        std::map<std::array<int, 3>, int> sig_ids;
        std::vector<int> next_cls(n);
        for (int s = 0; s < n; ++s) {
            std::array<int, 3> sig{cls[s], cls[d.next[s][0]], cls[d.next[s][1]]};
            auto [it, fresh] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
            (void)fresh;
            next_cls[s] = it->second;
        }
        bool changed = false;
        for (int s = 0; s < n; ++s) changed |= (next_cls[s] != cls[s]);
        cls = std::move(next_cls);
        if (!changed) break;
    }

    int classes = *std::max_element(cls.begin(), cls.end()) + 1;
    Dfa q;
    q.start = cls[d.start];
    q.next.assign(classes, {0, 0});
    q.accepting.assign(classes, 0);
    for (int s = 0; s < n; ++s) {
        q.accepting[cls[s]] = d.accepting[s];
        for (int sym = 0; sym < 2; ++sym) q.next[cls[s]][sym] = cls[d.next[s][sym]];
    }
    return renumber_bfs(q);
}

Dfa product_intersection(const Dfa& a, const Dfa& b) {
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    Dfa d;
    auto intern = [&](std::pair<int, int> p) {
        auto [it, fresh] = ids.try_emplace(p, static_cast<int>(pairs.size()));
        if (fresh) {
            pairs.push_back(p);
            d.next.push_back({-1, -1});
            d.accepting.push_back(a.accepting[p.first] && b.accepting[p.second]);
        }
        return it->second;
    };
    d.start = intern({a.start, b.start});
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        auto [sa, sb] = pairs[i];
        for (int sym = 0; sym < 2; ++sym)
            d.next[i][sym] = intern({a.next[sa][sym], b.next[sb][sym]});
    }
    return d;
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    for (auto& acc : out.accepting) acc = !acc;
    return out;
}

int run_dfa(const Dfa& d, int state, std::string_view w) {
    for (char c : w) state = d.next[state][c == 'a' ? 0 : 1];
    return state;
}

bool dfa_accepts(const Dfa& d, const Word& w) { return d.accepting[run_dfa(d, d.start, w)]; }

bool dfa_empty(const Dfa& d) {
    std::vector<char> seen(d.state_count(), 0);
    std::deque<int> work{d.start};
    seen[d.start] = 1;
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        if (d.accepting[s]) return false;
        for (int sym = 0; sym < 2; ++sym)
            if (!seen[d.next[s][sym]]) {
                seen[d.next[s][sym]] = 1;
                work.push_back(d.next[s][sym]);
            }
    }
    return true;
}

bool dfa_subset(const Dfa& a, const Dfa& b) {
    return dfa_empty(product_intersection(a, complement(b)));
}

bool dfa_equivalent(const Dfa& a, const Dfa& b) { return dfa_subset(a, b) && dfa_subset(b, a); }

std::vector<int> accept_distances(const Dfa& d) {
    std::vector<std::vector<int>> rev(d.state_count());
    for (int s = 0; s < d.state_count(); ++s)
        for (int sym = 0; sym < 2; ++sym) rev[d.next[s][sym]].push_back(s);
    std::vector<int> dist(d.state_count(), -1);
    std::deque<int> work;
    for (int s = 0; s < d.state_count(); ++s)
        if (d.accepting[s]) {
            dist[s] = 0;
            work.push_back(s);
        }
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (int p : rev[s])
            if (dist[p] < 0) {
                dist[p] = dist[s] + 1;
                work.push_back(p);
            }
    }
    return dist;
}

Dfa compile_regex(std::string_view text) { return minimize(determinize(to_nfa(parse_regex(text)))); }

const Dfa& graph_code_dfa() {
    static const Dfa d = compile_regex("(ab+a|ab+aaab+a)*");
    return d;
}

CodeIntersection intersect_with_code(const Dfa& d) {
    Dfa inter = minimize(product_intersection(d, graph_code_dfa()));
    bool shrunk = !dfa_subset(d, graph_code_dfa());
    return {std::move(inter), shrunk};
}

// ---------------------------------------------------------------------------
// Torsion and the transition monoid
// ---------------------------------------------------------------------------

namespace {

using Transform = std::vector<int>;

Transform compose(const Transform& f, const Transform& g) {
    // apply f first, then g
    Transform h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
    return h;
}

Transform letter_transform(const Dfa& d, int sym) {
    Transform t(d.state_count());
    for (int s = 0; s < d.state_count(); ++s) t[s] = d.next[s][sym];
    return t;
}

Transform identity_transform(int n) {
    Transform t(n);
    std::iota(t.begin(), t.end(), 0);
    return t;
}

} // namespace

Torsion torsion_pair(const Dfa& minimal) {
    const Transform step = letter_transform(minimal, 1);
    Transform cur = identity_transform(minimal.state_count());
    std::map<Transform, int> seen;
    for (int n = 0;; ++n) {
        auto [it, fresh] = seen.try_emplace(cur, n);
        if (!fresh) return {it->second, n - it->second};
        cur = compose(cur, step);
    }
}

long class_rep(const Torsion& tor, long n) {
    if (n < tor.threshold) return n;
    return tor.threshold + (n - tor.threshold) % tor.period;
}

bool is_aperiodic(const Dfa& minimal, std::size_t monoid_cap) {
    const int n = minimal.state_count();
    const std::array<Transform, 2> gens{letter_transform(minimal, 0), letter_transform(minimal, 1)};
    std::set<Transform> monoid{identity_transform(n)};
    std::deque<Transform> work(monoid.begin(), monoid.end());
    while (!work.empty()) {
        Transform t = std::move(work.front());
        work.pop_front();
        for (const Transform& g : gens) {
            Transform u = compose(t, g);
            if (monoid.insert(u).second) {
                if (monoid.size() > monoid_cap)
                    throw ResourceError("is_aperiodic: transition monoid exceeds cap");
                work.push_back(std::move(u));
            }
        }
    }
    const std::size_t size = monoid.size();
    for (const Transform& m : monoid) {
        Transform power = m;
        bool stable = false;
        for (std::size_t k = 1; k <= size; ++k) {
            Transform next = compose(power, m);
            if (next == power) {
                stable = true;
                break;
            }
            power = std::move(next);
        }
        if (!stable) return false;
    }
    return true;
}

} // namespace graphlang
