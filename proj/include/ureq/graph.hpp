#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace ureq {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool touches(Vertex x) const { return u == x || v == x; }
    constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of distinct vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Values are immutable once built; every constructor validates the invariants
/// (symmetric, loop free, no parallel edges, ids in range) and throws GraphError.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range ids throw GraphError.
    static Graph from_edges(int order, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex a, Vertex b) const;
    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

/// A graph carved out of a host graph together with the id translation.
struct Subgraph {
    Graph graph;
    /// new id -> host id (strictly increasing)
    std::vector<Vertex> to_host;
    /// host id -> new id, or -1 when the host vertex was dropped
    std::vector<Vertex> from_host;

    Edge lift(Edge e) const { return Edge(to_host[static_cast<std::size_t>(e.u)], to_host[static_cast<std::size_t>(e.v)]); }
    VertexSet lift(const VertexSet& vs) const;
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);
bool is_subcubic(const Graph& g);

/// Components ordered by their smallest member; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Connected, at least three vertices and no cut vertex.
bool is_two_connected(const Graph& g);

/// Throws GraphError if `vs` is not a sorted-able set of distinct in-range ids.
VertexSet normalize_vertex_set(const Graph& g, std::span<const Vertex> vs);

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> drop);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Applies a vertex permutation: vertex v of `g` becomes `perm[v]`.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

} // namespace ureq
