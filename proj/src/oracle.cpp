#include "graphlang/oracle.hpp"

#include <algorithm>
#include <map>

#include "graphlang/errors.hpp"

namespace graphlang {

void enumerate_words(const Dfa& d, std::size_t max_len,
                     const std::function<bool(const Word&)>& emit, const Config& cfg) {
    if (max_len > cfg.oracle_max_len_cap)
        throw ResourceError("enumerate_words: max_len " + std::to_string(max_len) +
                            " exceeds cap " + std::to_string(cfg.oracle_max_len_cap));
    const std::vector<int> dist = accept_distances(d);
    std::size_t steps = 0;
    Word prefix;
    bool stopped = false;

    // Iterative deepening keeps the emission order short-lex.
    std::function<void(int, std::size_t)> walk = [&](int state, std::size_t remaining) {
        if (stopped) return;
        if (++steps > cfg.oracle_step_budget)
            throw ResourceError("enumerate_words: step budget exceeded");
        if (remaining == 0) {
            if (d.accepting[state] && !emit(prefix)) stopped = true;
            return;
        }
        for (int sym = 0; sym < 2 && !stopped; ++sym) {
            int t = d.next[state][sym];
            if (dist[t] < 0 || static_cast<std::size_t>(dist[t]) > remaining - 1) continue;
            prefix.push_back(sym == 0 ? 'a' : 'b');
            walk(t, remaining - 1);
            prefix.pop_back();
        }
    };

    for (std::size_t len = 0; len <= max_len && !stopped; ++len) {
        if (dist[d.start] < 0) break;
        walk(d.start, len);
    }
}

OracleRun oracle_members(const Dfa& d, std::size_t max_len, int max_vertices, const Config& cfg,
                         int store_cap) {
    OracleRun run;
    std::map<Graph, Graph> canonical_cache; // densely relabeled -> canonical
    std::map<Graph, Word> found;

    enumerate_words(
        d, max_len,
        [&](const Word& w) {
            ++run.words_enumerated;
            Graph g = decode(w);
            if (static_cast<int>(g.vertex_count()) > max_vertices) return true;
            if (static_cast<int>(g.vertex_count()) > store_cap) {
                ++run.oversized;
                return true;
            }
            Graph dense = relabel_dense(g);
            auto it = canonical_cache.find(dense);
            if (it == canonical_cache.end())
                it = canonical_cache
                         .emplace(dense, canonical_form(dense, std::max(store_cap,
                                                                        cfg.canonical_vertex_cap)))
                         .first;
            found.try_emplace(it->second, w); // first hit is shortest (short-lex order)
            return true;
        },
        cfg);

    for (auto& [g, w] : found) run.entries.push_back({g, w});
    return run;
}

} // namespace graphlang
