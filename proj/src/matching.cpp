#include "ureq/matching.hpp"

#include "blossom.hpp"
#include "ureq/error.hpp"

#include <algorithm>

namespace ureq {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges))
{
    std::sort(edges_.begin(), edges_.end());
    VertexSet covered;
    covered.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
        if (e.u == e.v)
            throw GraphError("matching contains a loop");
        covered.push_back(e.u);
        covered.push_back(e.v);
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
        throw GraphError("edges of a matching must be vertex-disjoint");
}

bool Matching::contains(Edge e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

VertexSet Matching::vertices() const
{
    VertexSet out;
    out.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> Matching::partners(int order) const
{
    std::vector<Vertex> mate(static_cast<std::size_t>(order), -1);
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= order)
            throw GraphError("matching edge out of range");
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    return mate;
}

Matching Matching::merged(const Matching& other) const
{
    std::vector<Edge> all = edges_;
    all.insert(all.end(), other.edges_.begin(), other.edges_.end());
    return Matching(std::move(all));
}

std::optional<std::string> matching_problem(const Graph& g, std::span<const Edge> edges)
{
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : edges) {
        const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
        if (!g.adjacent(e.u, e.v))
            return name + " is not an edge of the graph";
        for (Vertex x : {e.u, e.v}) {
            if (used[static_cast<std::size_t>(x)])
                return "vertex " + std::to_string(x) + " is covered twice (at " + name + ")";
            used[static_cast<std::size_t>(x)] = 1;
        }
    }
    return std::nullopt;
}

bool is_matching(const Graph& g, std::span<const Edge> edges)
{
    return !matching_problem(g, edges).has_value();
}

void require_matching(const Graph& g, const Matching& m)
{
    if (auto problem = matching_problem(g, m.edges()))
        throw GraphError("invalid matching: " + *problem);
}

Subgraph matched_subgraph(const Graph& g, const Matching& m)
{
    require_matching(g, m);
    return induced_subgraph(g, m.vertices());
}

bool is_induced_matching(const Graph& g, const Matching& m)
{
    require_matching(g, m);
    auto mate = m.partners(g.order());
    for (const Edge& e : m)
        for (Vertex x : {e.u, e.v})
            for (Vertex y : g.neighbors(x))
                if (mate[static_cast<std::size_t>(y)] >= 0 && y != mate[static_cast<std::size_t>(x)])
                    return false;
    return true;
}

std::optional<AlternatingCycle> find_alternating_cycle(const Graph& g, const Matching& m)
{
    require_matching(g, m);

    // Grow M one edge at a time. The prefix is uniquely restricted before the
    // step, so a new alternating cycle must use the added edge ab, which makes
    // it an augmenting a..b path for the prefix inside G(prefix + ab) - ab.
    detail::BlossomSearch search(g);
    std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
    std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : m) {
        allowed[static_cast<std::size_t>(e.u)] = 1;
        allowed[static_cast<std::size_t>(e.v)] = 1;
        auto path = search.find(e.u, mate, allowed, e);
        if (!path.empty()) {
            // path = a, p1, ..., b ; cycle = a, b, p(k-1), ..., p1
            AlternatingCycle c;
            c.cycle.push_back(path.front());
            for (auto it = path.rbegin(); it + 1 != path.rend(); ++it)
                c.cycle.push_back(*it);
            return c;
        }
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    return std::nullopt;
}

bool is_uniquely_restricted(const Graph& g, const Matching& m)
{
    return !find_alternating_cycle(g, m).has_value();
}

bool is_valid_alternating_cycle(const Graph& g, const Matching& m, const AlternatingCycle& c)
{
    const auto& cyc = c.cycle;
    if (cyc.size() < 4 || cyc.size() % 2 != 0)
        return false;
    VertexSet sorted(cyc.begin(), cyc.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        Vertex a = cyc[i];
        Vertex b = cyc[(i + 1) % cyc.size()];
        if (!g.adjacent(a, b))
            return false;
        if (m.contains(Edge(a, b)) != (i % 2 == 0))
            return false;
    }
    return true;
}

} // namespace ureq
