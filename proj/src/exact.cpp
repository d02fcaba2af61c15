#include "ureq/exact.hpp"

#include "blossom.hpp"
#include "ureq/error.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace ureq {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }
Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

void check_budget(const Graph& g, const SolveBudget& budget)
{
    if (g.order() > kExactMaxOrder)
        throw BudgetError("exact solvers support at most " + std::to_string(kExactMaxOrder) + " vertices");
    if (g.order() > budget.max_order && !budget.force)
        throw BudgetError("order " + std::to_string(g.order()) + " exceeds max_order " +
                          std::to_string(budget.max_order) + " (use force to override)");
}

// Shared state for the exact solvers: neighbourhood bitsets, memo tables and
// the node counter. Both quantities are computed over vertex subsets U and
// their values are memoised by the subset.
class ExactSolver {
public:
    ExactSolver(const Graph& g, const SolveBudget& budget, SolveStats* stats)
        : g_(g)
        , budget_(budget)
        , stats_(stats)
        , nbr_(static_cast<std::size_t>(g.order()), 0)
        , search_(g)
        , mate_(static_cast<std::size_t>(g.order()), -1)
        , allowed_(static_cast<std::size_t>(g.order()), 0)
    {
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex w : g.neighbors(v))
                nbr_[idx(v)] |= bit(w);
    }

    Mask all() const { return g_.order() == 64 ? ~Mask{0} : (bit(g_.order()) - 1); }

    // ---- induced matchings -------------------------------------------------

    int induced_value(Mask u)
    {
        if (u == 0)
            return 0;
        if (auto it = s_memo_.find(u); it != s_memo_.end())
            return it->second;
        tick();
        int value = 0;
        auto parts = components(u);
        if (parts.size() > 1) {
            for (Mask p : parts)
                value += induced_value(p);
        } else {
            // Branch on the smallest vertex: unmatched, or matched to a
            // neighbour, which removes both closed neighbourhoods.
            Vertex v = lowest(u);
            value = induced_value(u & ~bit(v));
            for (Mask ws = nbr_[idx(v)] & u; ws; ws &= ws - 1) {
                Vertex w = lowest(ws);
                value = std::max(value, 1 + induced_value(u & ~(closed(v) | closed(w))));
            }
        }
        s_memo_.emplace(u, value);
        return value;
    }

    void induced_witness(Mask u, std::vector<Edge>& out)
    {
        if (u == 0)
            return;
        auto parts = components(u);
        if (parts.size() > 1) {
            for (Mask p : parts)
                induced_witness(p, out);
            return;
        }
        const int target = induced_value(u);
        Vertex v = lowest(u);
        for (Mask ws = nbr_[idx(v)] & u; ws; ws &= ws - 1) {
            Vertex w = lowest(ws);
            Mask rest = u & ~(closed(v) | closed(w));
            if (1 + induced_value(rest) == target) {
                out.emplace_back(v, w);
                induced_witness(rest, out);
                return;
            }
        }
        induced_witness(u & ~bit(v), out);
    }

    // ---- uniquely restricted matchings -------------------------------------

    int ur_value(Mask u) { return ur_entry(u).size; }

    std::vector<Edge> ur_witness(Mask u)
    {
        std::vector<Edge> out;
        for (Mask p : components(u)) {
            const auto& w = ur_entry(p).witness;
            out.insert(out.end(), w.begin(), w.end());
        }
        return out;
    }

private:
    struct UrEntry {
        int size = 0;
        std::vector<Edge> witness;
    };

    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
    Mask closed(Vertex v) const { return nbr_[idx(v)] | bit(v); }

    void tick()
    {
        if (stats_)
            ++stats_->nodes;
        if (++nodes_ > budget_.max_nodes)
            throw BudgetError("search node budget of " + std::to_string(budget_.max_nodes) + " exceeded");
    }

    std::vector<Mask> components(Mask u) const
    {
        std::vector<Mask> parts;
        while (u) {
            Mask comp = bit(lowest(u));
            Mask frontier = comp;
            while (frontier) {
                Mask grow = 0;
                for (Mask f = frontier; f; f &= f - 1)
                    grow |= nbr_[idx(lowest(f))];
                grow &= u & ~comp;
                comp |= grow;
                frontier = grow;
            }
            parts.push_back(comp);
            u &= ~comp;
        }
        return parts;
    }

    const UrEntry& ur_entry(Mask u)
    {
        if (auto it = ur_memo_.find(u); it != ur_memo_.end())
            return it->second;
        UrEntry entry;
        auto parts = components(u);
        if (parts.size() > 1) {
            for (Mask p : parts) {
                // Copy: recursive calls may rehash the table.
                UrEntry sub = ur_entry(p);
                entry.size += sub.size;
                entry.witness.insert(entry.witness.end(), sub.witness.begin(), sub.witness.end());
            }
            std::sort(entry.witness.begin(), entry.witness.end());
        } else if (std::popcount(u) >= 2) {
            entry = solve_connected(u);
        }
        return ur_memo_.emplace(u, std::move(entry)).first->second;
    }

    // Branch and bound over the vertices of a connected set `root`, smallest
    // vertex first: matched to each free neighbour in increasing order, then
    // left uncovered. That order visits matchings in lexicographic order of
    // their sorted edge lists, so the first optimum found is the smallest one.
    UrEntry solve_connected(Mask root)
    {
        Frame frame;
        frame.root = root;
        // Any induced matching is uniquely restricted; only strictly larger
        // matchings (or the first one reaching this size) are of interest.
        frame.best = induced_value(root) - 1;
        // Saved/restored around the search: the solver state is shared by the
        // nested solves that the bound triggers.
        std::vector<Edge> saved_current;
        saved_current.swap(current_);
        Mask saved_covered = covered_;
        covered_ = 0;
        sync_search_state();
        search(frame, root);
        current_.swap(saved_current);
        covered_ = saved_covered;
        sync_search_state();
        return UrEntry{frame.best, std::move(frame.best_witness)};
    }

    struct Frame {
        Mask root = 0;
        int best = 0;
        std::vector<Edge> best_witness;
    };

    void sync_search_state()
    {
        std::fill(mate_.begin(), mate_.end(), -1);
        std::fill(allowed_.begin(), allowed_.end(), 0);
        for (const Edge& e : current_) {
            mate_[idx(e.u)] = e.v;
            mate_[idx(e.v)] = e.u;
            allowed_[idx(e.u)] = allowed_[idx(e.v)] = 1;
        }
    }

    bool closes_alternating_cycle(Vertex v, Vertex w)
    {
        allowed_[idx(v)] = allowed_[idx(w)] = 1;
        bool found = !search_.find(v, mate_, allowed_, Edge(v, w)).empty();
        allowed_[idx(v)] = allowed_[idx(w)] = 0;
        return found;
    }

    void record_pruned(Vertex v, Vertex w)
    {
        if (!stats_)
            return;
        ++stats_->pruned_extensions;
        if (stats_->pruned_sample.size() < stats_->sample_cap) {
            std::vector<Edge> ext = current_;
            ext.emplace_back(v, w);
            stats_->pruned_sample.emplace_back(std::move(ext));
        }
    }

    void search(Frame& frame, Mask rest)
    {
        tick();
        const int size = static_cast<int>(current_.size());
        if (rest != frame.root) {
            // Whatever is added later is a uniquely restricted matching of
            // G[rest], so the exact values of the components of G[rest] bound it.
            auto parts = components(rest);
            int bound = size;
            for (Mask p : parts)
                bound += ur_value(p);
            if (bound <= frame.best)
                return;
            Mask touched = 0;
            for (Mask c = covered_; c; c &= c - 1)
                touched |= nbr_[idx(lowest(c))];
            if ((touched & rest) == 0) {
                // No edge between V(M) and the rest: the bound is attained.
                std::vector<Edge> w = current_;
                auto tail = ur_witness(rest);
                w.insert(w.end(), tail.begin(), tail.end());
                std::sort(w.begin(), w.end());
                frame.best = bound;
                frame.best_witness = std::move(w);
                return;
            }
        }
        if (rest == 0)
            return;

        Vertex v = lowest(rest);
        for (Mask ws = nbr_[idx(v)] & rest; ws; ws &= ws - 1) {
            Vertex w = lowest(ws);
            if (closes_alternating_cycle(v, w)) {
                record_pruned(v, w);
                continue;
            }
            current_.emplace_back(v, w);
            covered_ |= bit(v) | bit(w);
            mate_[idx(v)] = w;
            mate_[idx(w)] = v;
            allowed_[idx(v)] = allowed_[idx(w)] = 1;
            search(frame, rest & ~(bit(v) | bit(w)));
            allowed_[idx(v)] = allowed_[idx(w)] = 0;
            mate_[idx(v)] = mate_[idx(w)] = -1;
            covered_ &= ~(bit(v) | bit(w));
            current_.pop_back();
        }
        search(frame, rest & ~bit(v));
    }

    const Graph& g_;
    SolveBudget budget_;
    SolveStats* stats_;
    std::vector<Mask> nbr_;
    std::uint64_t nodes_ = 0;
    std::unordered_map<Mask, int> s_memo_;
    std::unordered_map<Mask, UrEntry> ur_memo_;

    detail::BlossomSearch search_;
    std::vector<Vertex> mate_;
    std::vector<char> allowed_;
    std::vector<Edge> current_;
    Mask covered_ = 0;
};

} // namespace

SolveResult max_matching(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Vertex> mate(n, -1);
    // Greedy start, then one augmenting search per exposed vertex.
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mate[static_cast<std::size_t>(v)] >= 0)
            continue;
        for (Vertex w : g.neighbors(v))
            if (mate[static_cast<std::size_t>(w)] < 0) {
                mate[static_cast<std::size_t>(v)] = w;
                mate[static_cast<std::size_t>(w)] = v;
                break;
            }
    }
    detail::BlossomSearch search(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mate[static_cast<std::size_t>(v)] >= 0)
            continue;
        auto path = search.find(v, mate, {});
        for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
            mate[static_cast<std::size_t>(path[i])] = path[i + 1];
            mate[static_cast<std::size_t>(path[i + 1])] = path[i];
        }
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mate[static_cast<std::size_t>(v)] > v)
            edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    SolveResult r;
    r.size = static_cast<int>(edges.size());
    r.witness = Matching(std::move(edges));
    return r;
}

SolveResult max_induced_matching(const Graph& g, const SolveBudget& budget, SolveStats* stats)
{
    check_budget(g, budget);
    ExactSolver solver(g, budget, stats);
    SolveResult r;
    r.size = solver.induced_value(solver.all());
    std::vector<Edge> w;
    solver.induced_witness(solver.all(), w);
    r.witness = Matching(std::move(w));
    return r;
}

SolveResult max_uniquely_restricted_matching(const Graph& g, const SolveBudget& budget, SolveStats* stats)
{
    check_budget(g, budget);
    ExactSolver solver(g, budget, stats);
    SolveResult r;
    r.size = solver.ur_value(solver.all());
    r.witness = Matching(solver.ur_witness(solver.all()));
    return r;
}

std::uint64_t count_perfect_matchings(const Graph& g, std::uint64_t cap)
{
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (count >= cap)
            return;
        Vertex v = from;
        while (v < g.order() && used[static_cast<std::size_t>(v)])
            ++v;
        if (v == g.order()) {
            ++count;
            return;
        }
        used[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v))
            if (!used[static_cast<std::size_t>(w)]) {
                used[static_cast<std::size_t>(w)] = 1;
                self(self, v + 1);
                used[static_cast<std::size_t>(w)] = 0;
            }
        used[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);
    return count;
}

OracleResult oracle_equality(const Graph& g, const SolveBudget& budget)
{
    if (g.order() > budget.max_order && !budget.force)
        throw BudgetError("oracle: order " + std::to_string(g.order()) + " exceeds max_order " +
                          std::to_string(budget.max_order));
    const auto edges = g.edges();
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::vector<Edge> chosen;
    OracleResult out;
    std::uint64_t leaves = 0;

    auto evaluate = [&] {
        const int size = static_cast<int>(chosen.size());
        out.nu = std::max(out.nu, size);
        if (size > out.nu_s) {
            bool induced = true;
            for (std::size_t i = 0; i < chosen.size() && induced; ++i)
                for (std::size_t j = i + 1; j < chosen.size() && induced; ++j)
                    for (Vertex a : {chosen[i].u, chosen[i].v})
                        for (Vertex b : {chosen[j].u, chosen[j].v})
                            if (g.adjacent(a, b))
                                induced = false;
            if (induced)
                out.nu_s = size;
        }
        if (size > out.nu_ur) {
            VertexSet vm;
            for (const Edge& e : chosen) {
                vm.push_back(e.u);
                vm.push_back(e.v);
            }
            if (count_perfect_matchings(induced_subgraph(g, vm).graph, 2) == 1)
                out.nu_ur = size;
        }
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == edges.size()) {
            if (++leaves > budget.max_nodes)
                throw BudgetError("oracle: enumeration budget exceeded");
            evaluate();
            return;
        }
        const Edge& e = edges[i];
        if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
            chosen.push_back(e);
            self(self, i + 1);
            chosen.pop_back();
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    out.equal = out.nu_s == out.nu_ur;
    return out;
}

} // namespace ureq
