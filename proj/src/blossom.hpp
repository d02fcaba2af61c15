#pragma once

// Edmonds' augmenting path search with blossom shrinking, restricted to an
// allowed vertex set and optionally ignoring one edge. Shared by the maximum
// matching code and by the alternating-cycle test for unique restriction.

#include "ureq/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ureq::detail {

class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g)
        : graph_(g)
        , n_(static_cast<std::size_t>(g.order()))
        , parent_(n_)
        , base_(n_)
        , used_(n_)
        , in_blossom_(n_)
        , lca_mark_(n_)
    {
        queue_.reserve(n_);
    }

    /// Augmenting path from `root` with respect to `mate` (-1 = exposed).
    /// Vertices with allowed[v] == 0 are invisible when `allowed` is non-empty.
    /// Returns root, x1, ..., end where root-x1 is unmatched, x1-x2 matched, ...
    /// and `end` is exposed; empty when no such path exists.
    std::vector<Vertex> find(Vertex root, std::span<const Vertex> mate, std::span<const char> allowed,
                             std::optional<Edge> skip = std::nullopt)
    {
        std::vector<Vertex> path;
        Vertex end = search(root, mate, allowed, skip);
        if (end < 0)
            return path;
        // end, parent(end), mate(parent(end)), ... , root
        Vertex v = end;
        while (v >= 0) {
            Vertex pv = parent_[idx(v)];
            path.push_back(v);
            path.push_back(pv);
            v = mate[idx(pv)];
        }
        return {path.rbegin(), path.rend()};
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    bool visible(Vertex v, std::span<const char> allowed) const { return allowed.empty() || allowed[idx(v)]; }

    Vertex lca(Vertex a, Vertex b, Vertex root, std::span<const Vertex> mate)
    {
        std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
        for (;;) {
            a = base_[idx(a)];
            lca_mark_[idx(a)] = 1;
            if (a == root || mate[idx(a)] < 0)
                break;
            a = parent_[idx(mate[idx(a)])];
        }
        for (;;) {
            b = base_[idx(b)];
            if (lca_mark_[idx(b)])
                return b;
            b = parent_[idx(mate[idx(b)])];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child, std::span<const Vertex> mate)
    {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = 1;
            in_blossom_[idx(base_[idx(mate[idx(v)])])] = 1;
            parent_[idx(v)] = child;
            child = mate[idx(v)];
            v = parent_[idx(mate[idx(v)])];
        }
    }

    Vertex search(Vertex root, std::span<const Vertex> mate, std::span<const char> allowed, std::optional<Edge> skip)
    {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (std::size_t i = 0; i < n_; ++i)
            base_[i] = static_cast<Vertex>(i);
        queue_.clear();
        used_[idx(root)] = 1;
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            Vertex v = queue_[head];
            for (Vertex to : graph_.neighbors(v)) {
                if (!visible(to, allowed))
                    continue;
                if (skip && Edge(v, to) == *skip)
                    continue;
                if (base_[idx(v)] == base_[idx(to)] || mate[idx(v)] == to)
                    continue;
                if (to == root || (mate[idx(to)] >= 0 && parent_[idx(mate[idx(to)])] >= 0)) {
                    Vertex cur = lca(v, to, root, mate);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to, mate);
                    mark_path(to, cur, v, mate);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (!visible(static_cast<Vertex>(i), allowed) || !in_blossom_[idx(base_[i])])
                            continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_.push_back(static_cast<Vertex>(i));
                        }
                    }
                } else if (parent_[idx(to)] < 0) {
                    parent_[idx(to)] = v;
                    if (mate[idx(to)] < 0)
                        return to;
                    Vertex next = mate[idx(to)];
                    used_[idx(next)] = 1;
                    queue_.push_back(next);
                }
            }
        }
        return -1;
    }

    const Graph& graph_;
    std::size_t n_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> in_blossom_;
    std::vector<char> lca_mark_;
    std::vector<Vertex> queue_;
};

} // namespace ureq::detail
