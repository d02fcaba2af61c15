#pragma once

#include "ureq/graph.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ureq {

/// A set of pairwise vertex-disjoint edges, kept normalized (u < v) and sorted
/// so that equal matchings compare equal and `<` is the lexicographic order of
/// the edge lists.
class Matching {
public:
    Matching() = default;
    /// Throws GraphError if two edges share a vertex or an edge is a loop.
    explicit Matching(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    bool contains(Edge e) const;
    /// V(M), sorted.
    VertexSet vertices() const;
    /// partner[v] for v < order, -1 when v is not covered.
    std::vector<Vertex> partners(int order) const;

    /// Union with a vertex-disjoint matching.
    Matching merged(const Matching& other) const;

    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    std::vector<Edge> edges_;
};

/// True iff every proposed edge is an edge of `g` and the edges are pairwise disjoint.
bool is_matching(const Graph& g, std::span<const Edge> edges);

/// Human-readable reason why `edges` is not a matching of `g`, or nothing.
/// Non-edges are reported separately from shared endpoints.
std::optional<std::string> matching_problem(const Graph& g, std::span<const Edge> edges);

/// Throws GraphError with the matching_problem text if `m` does not live in `g`.
void require_matching(const Graph& g, const Matching& m);

/// G(M): the subgraph induced by the covered vertices.
Subgraph matched_subgraph(const Graph& g, const Matching& m);

/// G(M) is 1-regular.
bool is_induced_matching(const Graph& g, const Matching& m);

/// M is the only perfect matching of G(M); equivalently no M-alternating cycle.
bool is_uniquely_restricted(const Graph& g, const Matching& m);

/// Closed vertex sequence c0 c1 ... c(2t-1) with c0c1 in M, c1c2 not in M, and
/// so on, closing with c(2t-1)c0 outside M.
struct AlternatingCycle {
    std::vector<Vertex> cycle;

    friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
};

std::optional<AlternatingCycle> find_alternating_cycle(const Graph& g, const Matching& m);

/// Replays the witness invariants (edges exist, strict alternation starting
/// with a matched edge, distinct vertices, length >= 4).
bool is_valid_alternating_cycle(const Graph& g, const Matching& m, const AlternatingCycle& c);

} // namespace ureq
