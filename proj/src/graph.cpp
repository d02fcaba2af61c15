#include "ureq/graph.hpp"

#include "ureq/error.hpp"

#include <algorithm>
#include <string>

namespace ureq {

Graph::Graph(int order)
{
    if (order < 0)
        throw GraphError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges)
{
    Graph g(order);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= order)
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " out of range for order " +
                             std::to_string(order));
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::size_t half_degrees = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        half_degrees += list.size();
    }
    g.edge_count_ = static_cast<int>(half_degrees / 2);
    return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    if (!contains(a) || !contains(b))
        return false;
    auto n = neighbors(a);
    return std::binary_search(n.begin(), n.end(), b);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

VertexSet Subgraph::lift(const VertexSet& vs) const
{
    VertexSet out;
    out.reserve(vs.size());
    for (Vertex v : vs)
        out.push_back(to_host[static_cast<std::size_t>(v)]);
    return out;
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

bool is_subcubic(const Graph& g)
{
    return max_degree(g) <= 3;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> parts;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        VertexSet part;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            part.push_back(x);
            for (Vertex y : g.neighbors(x))
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

bool is_two_connected(const Graph& g)
{
    const int n = g.order();
    if (n < 3)
        return false;

    // Iterative DFS computing low points from root 0; a cut vertex or an
    // unreached vertex means failure.
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    int timer = 0;
    int root_children = 0;
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Vertex x = stack.back();
        auto nbrs = g.neighbors(x);
        auto& i = next[static_cast<std::size_t>(x)];
        if (i < nbrs.size()) {
            Vertex y = nbrs[i++];
            auto yi = static_cast<std::size_t>(y);
            if (disc[yi] < 0) {
                parent[yi] = x;
                disc[yi] = low[yi] = timer++;
                if (x == 0)
                    ++root_children;
                stack.push_back(y);
            } else if (y != parent[static_cast<std::size_t>(x)]) {
                low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], disc[yi]);
            }
            continue;
        }
        stack.pop_back();
        Vertex p = parent[static_cast<std::size_t>(x)];
        if (p >= 0) {
            auto pi = static_cast<std::size_t>(p);
            low[pi] = std::min(low[pi], low[static_cast<std::size_t>(x)]);
            if (p != 0 && low[static_cast<std::size_t>(x)] >= disc[pi])
                return false;
        }
    }
    if (timer != n)
        return false;
    return root_children <= 1;
}

VertexSet normalize_vertex_set(const Graph& g, std::span<const Vertex> vs)
{
    VertexSet out(vs.begin(), vs.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw GraphError("vertex set contains duplicates");
    for (Vertex v : out)
        if (!g.contains(v))
            throw GraphError("vertex " + std::to_string(v) + " out of range");
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    Subgraph sub;
    sub.to_host = normalize_vertex_set(g, keep);
    sub.from_host.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i)
        sub.from_host[static_cast<std::size_t>(sub.to_host[i])] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (Vertex x : sub.to_host)
        for (Vertex y : g.neighbors(x)) {
            Vertex nx = sub.from_host[static_cast<std::size_t>(x)];
            Vertex ny = sub.from_host[static_cast<std::size_t>(y)];
            if (ny > nx)
                edges.emplace_back(nx, ny);
        }
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_host.size()), edges);
    return sub;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> drop)
{
    VertexSet dropped = normalize_vertex_set(g, drop);
    VertexSet keep;
    keep.reserve(static_cast<std::size_t>(g.order()) - dropped.size());
    std::size_t j = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (j < dropped.size() && dropped[j] == v) {
            ++j;
            continue;
        }
        keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v)
{
    if (!g.contains(v))
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    VertexSet out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != static_cast<std::size_t>(g.order()))
        throw GraphError("permutation size mismatch");
    std::vector<char> hit(perm.size(), 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= g.order() || hit[static_cast<std::size_t>(p)])
            throw GraphError("relabel: not a permutation");
        hit[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph::from_edges(g.order(), edges);
}

} // namespace ureq
