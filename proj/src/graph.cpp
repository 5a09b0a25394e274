#include "graphlang/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "graphlang/errors.hpp"

namespace graphlang {

void Graph::add_vertex(VertexId v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    add_vertex(u);
    add_vertex(v);
    EdgePair e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool Graph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    return std::binary_search(edges_.begin(), edges_.end(), EdgePair{u, v});
}

Graph relabel_dense(const Graph& g) {
    std::map<VertexId, VertexId> map;
    VertexId next = 1;
    for (VertexId v : g.vertices()) map[v] = next++;
    Graph out;
    for (VertexId v : g.vertices()) out.add_vertex(map[v]);
    for (const auto& [u, v] : g.edges()) out.add_edge(map[u], map[v]);
    return out;
}

Graph undirected_simplification(const Graph& g) {
    Graph out;
    for (VertexId v : g.vertices()) out.add_vertex(v);
    for (const auto& [u, v] : g.edges()) {
        if (u == v) continue;
        out.add_edge(u, v);
        out.add_edge(v, u);
    }
    return out;
}

namespace {

// Backtracking search for the relabeling with the lexicographically smallest
// sorted edge list. Keys are compared cell by cell in row-major order, where
// an edge at an earlier cell makes the key smaller (both labelings place the
// same number of edges, so the first differing cell decides).
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(static_cast<int>(g.vertex_count())) {
        adj_.assign(n_ * n_, 0);
        const auto& vs = g.vertices();
        auto index_of = [&](VertexId v) {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        for (const auto& [u, v] : g.edges()) adj_[index_of(u) * n_ + index_of(v)] = 1;
    }

    Graph run() {
        assign_.assign(n_, -1);
        used_.assign(n_, 0);
        have_best_ = false;
        extend(0);
        Graph out;
        for (int i = 0; i < n_; ++i) out.add_vertex(i + 1);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (best_key_[i * n_ + j]) out.add_edge(i + 1, j + 1);
        return out;
    }

private:
    // -1: certainly worse than best, prune. 0: undecided. 1: certainly better.
    int compare_partial(int assigned) const {
        for (int idx = 0; idx < n_ * n_; ++idx) {
            int i = idx / n_, j = idx % n_;
            if (i >= assigned || j >= assigned) {
                // Unknown cell: candidate may still contain an edge here.
                if (!best_key_[idx]) return 0;
                continue;
            }
            char bit = adj_[assign_[i] * n_ + assign_[j]];
            if (bit != best_key_[idx]) return bit ? 1 : -1;
        }
        return 0;
    }

    void extend(int pos) {
        if (have_best_) {
            int c = compare_partial(pos);
            if (c < 0) return;
        }
        if (pos == n_) {
            std::vector<char> key(n_ * n_);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) key[i * n_ + j] = adj_[assign_[i] * n_ + assign_[j]];
            if (!have_best_ || smaller(key, best_key_)) {
                best_key_ = std::move(key);
                have_best_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            used_[v] = 1;
            assign_[pos] = v;
            extend(pos + 1);
            used_[v] = 0;
        }
        assign_[pos] = -1;
    }

    static bool smaller(const std::vector<char>& a, const std::vector<char>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] == 1;
        return false;
    }

    int n_;
    std::vector<char> adj_;
    std::vector<int> assign_;
    std::vector<char> used_;
    std::vector<char> best_key_;
    bool have_best_ = false;
};

} // namespace

Graph canonical_form(const Graph& g, int cap) {
    if (static_cast<int>(g.vertex_count()) > cap)
        throw ResourceError("canonical_form: graph has " + std::to_string(g.vertex_count()) +
                            " vertices, cap is " + std::to_string(cap));
    if (g.vertex_count() <= 1) return relabel_dense(g);
    return CanonicalSearch(g).run();
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, cap) == canonical_form(b, cap);
}

Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1;
    Graph g;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok.rfind("n=", 0) == 0) {
            if (n >= 0) throw ParseError("duplicate n= line", lineno);
            try {
                n = std::stol(tok.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad vertex count '" + tok + "'", lineno);
            }
            if (n < 0) throw ParseError("negative vertex count", lineno);
            for (long v = 1; v <= n; ++v) g.add_vertex(static_cast<VertexId>(v));
        } else if (tok == "e") {
            if (n < 0) throw ParseError("edge before n= line", lineno);
            long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError("edge line needs two endpoints", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint out of range 1..n", lineno);
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } else if (tok[0] == '#') {
            continue;
        } else {
            throw ParseError("unrecognized line '" + line + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing n= line", 0);
    return g;
}

std::string graph_text(const Graph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace graphlang
