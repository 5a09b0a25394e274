#include "graphlang/codec.hpp"

#include <algorithm>
#include <numeric>

#include "graphlang/errors.hpp"

namespace graphlang {

Word CodeLetter::word() const {
    Word w = "a";
    w.append(first, 'b');
    if (is_edge) {
        w += "aaa";
        w.append(second, 'b');
    }
    w += 'a';
    return w;
}

std::optional<std::vector<CodeLetter>> parse_code(const Word& w) {
    std::vector<CodeLetter> out;
    std::size_t pos = 0;
    const std::size_t n = w.size();
    auto run_of_b = [&](std::size_t& p) {
        int len = 0;
        while (p < n && w[p] == 'b') {
            ++len;
            ++p;
        }
        return len;
    };
    while (pos < n) {
        if (w[pos] != 'a') return std::nullopt;
        ++pos;
        int i = run_of_b(pos);
        if (i == 0 || pos >= n || w[pos] != 'a') return std::nullopt;
        ++pos;
        // ab^i a consumed; an edge continues with aa b^+ a
        if (pos + 1 < n && w[pos] == 'a' && w[pos + 1] == 'a') {
            pos += 2;
            int j = run_of_b(pos);
            if (j == 0 || pos >= n || w[pos] != 'a') return std::nullopt;
            ++pos;
            out.push_back({true, i, j});
        } else {
            out.push_back({false, i, 0});
        }
    }
    return out;
}

bool is_graph_word(const Word& w) { return parse_code(w).has_value(); }

Graph decode(const Word& w) {
    auto letters = parse_code(w);
    if (!letters) throw ParseError("word is not a product of graph codewords", 0);
    Graph g;
    for (const CodeLetter& z : *letters) {
        if (z.is_edge)
            g.add_edge(z.first, z.second);
        else
            g.add_vertex(z.first);
    }
    return g;
}

namespace {

// Lexicographically minimal concatenation of a fixed multiset of codewords.
void sort_for_concatenation(std::vector<Word>& ws) {
    std::sort(ws.begin(), ws.end(), [](const Word& x, const Word& y) { return x + y < y + x; });
}

bool shortlex_less(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

} // namespace

Word encode(const Graph& g, int cap) {
    if (g.empty()) return "";
    const int n = static_cast<int>(g.vertex_count());
    if (n > cap)
        throw ResourceError("encode: graph has " + std::to_string(n) + " vertices, cap is " +
                            std::to_string(cap));

    const auto& vs = g.vertices();
    auto index_of = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };

    std::vector<char> covered(n, 0);
    for (const auto& [u, v] : g.edges()) {
        covered[index_of(u)] = 1;
        covered[index_of(v)] = 1;
    }

    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 1);
    Word best;
    bool have = false;
    do {
        std::vector<Word> edge_words;
        for (const auto& [u, v] : g.edges())
            edge_words.push_back(CodeLetter{true, label[index_of(u)], label[index_of(v)]}.word());
        std::vector<Word> vertex_words;
        for (int i = 0; i < n; ++i)
            if (!covered[i]) vertex_words.push_back(CodeLetter{false, label[i], 0}.word());
        sort_for_concatenation(edge_words);
        sort_for_concatenation(vertex_words);
        Word w;
        for (const Word& e : edge_words) w += e;
        for (const Word& v : vertex_words) w += v;
        if (!have || shortlex_less(w, best)) {
            best = std::move(w);
            have = true;
        }
    } while (std::next_permutation(label.begin(), label.end()));
    return best;
}

} // namespace graphlang
