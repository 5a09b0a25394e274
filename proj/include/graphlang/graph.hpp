#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphlang {

using VertexId = int;
using EdgePair = std::pair<VertexId, VertexId>;

/// Finite directed graph with positive integer vertex names and self-loops.
/// Vertex names need not be dense: decoded graphs keep their block exponents
/// as names, so the name set is stored explicitly. No multi-edges.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v); // inserts endpoints as vertices

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const std::vector<EdgePair>& edges() const noexcept { return edges_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    // Sorted internal representation makes this structural equality.
    auto operator<=>(const Graph&) const = default;

private:
    std::vector<VertexId> vertices_; // sorted, unique
    std::vector<EdgePair> edges_;    // sorted, unique, endpoints in vertices_
};

/// Canonical relabeling to vertices 1..n. Two graphs are isomorphic iff their
/// canonical forms compare equal. The canonical labeling is the one whose
/// sorted edge list is lexicographically smallest over all relabelings, so
/// edges cluster on the smallest names and isolated vertices come last.
/// Throws ResourceError when the graph has more than `cap` vertices.
Graph canonical_form(const Graph& g, int cap = 10);

bool isomorphic(const Graph& a, const Graph& b, int cap = 10);

/// (V, (E ∪ E⁻¹) ∖ id) with both orientations stored.
Graph undirected_simplification(const Graph& g);

/// Order-preserving relabeling onto 1..n (sorted names map to 1,2,...).
Graph relabel_dense(const Graph& g);

/// Text format: line "n=<count>", then zero or more lines "e <u> <v>".
/// Vertices in 1..n that appear in no edge are isolated.
Graph parse_graph_text(std::string_view text);

/// Inverse of parse_graph_text; requires dense vertex names 1..n.
std::string graph_text(const Graph& g);

} // namespace graphlang
