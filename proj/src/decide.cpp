#include "ureq/decide.hpp"

#include "ureq/error.hpp"

#include <algorithm>

namespace ureq {

namespace {

enum class Reduction { EdgeEnds, ClosedNeighborhood };

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require_subcubic(const Graph& g)
{
    if (!is_subcubic(g))
        throw DomainError("the decision procedure needs a subcubic graph (max degree " + std::to_string(max_degree(g)) +
                          ")");
}

// Shared skeleton of both algorithms: eliminate pendant edges (smallest
// degree-1 vertex first), then test every component of what is left for
// membership in B' and solve it exactly or by the closed form.
AlgorithmOutcome run_pendant_elimination(const Graph& g, const SolveBudget& budget, Reduction reduction,
                                         bool want_uniquely_restricted)
{
    require_subcubic(g);
    const auto n = idx(g.order());
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n);
    for (Vertex v = 0; v < g.order(); ++v)
        degree[idx(v)] = g.degree(v);

    auto remove = [&](Vertex x) {
        alive[idx(x)] = 0;
        for (Vertex y : g.neighbors(x))
            if (alive[idx(y)])
                --degree[idx(y)];
    };

    AlgorithmOutcome out;
    std::vector<Edge> taken;
    for (;;) {
        Vertex u = -1;
        for (Vertex x = 0; x < g.order(); ++x)
            if (alive[idx(x)] && degree[idx(x)] == 1) {
                u = x;
                break;
            }
        if (u < 0)
            break;
        Vertex v = *std::find_if(g.neighbors(u).begin(), g.neighbors(u).end(),
                                 [&](Vertex y) { return alive[idx(y)] != 0; });
        taken.emplace_back(u, v);
        if (reduction == Reduction::EdgeEnds) {
            remove(u);
            remove(v);
        } else {
            VertexSet drop{v};
            for (Vertex y : g.neighbors(v))
                if (alive[idx(y)])
                    drop.push_back(y);
            for (Vertex y : drop)
                remove(y);
        }
    }
    out.pendant_edges = taken;

    VertexSet rest;
    for (Vertex x = 0; x < g.order(); ++x)
        if (alive[idx(x)])
            rest.push_back(x);
    const Subgraph h = induced_subgraph(g, rest);

    SolveBudget small = budget;
    small.max_order = std::max(small.max_order, kSmallOrderThreshold);

    std::vector<Edge> matched = taken;
    for (const VertexSet& comp : connected_components(h.graph)) {
        const Subgraph c = induced_subgraph(h.graph, comp);
        auto to_original = [&](Vertex x) { return h.to_host[idx(c.to_host[idx(x)])]; };

        Matching local;
        if (c.graph.order() <= kSmallOrderThreshold) {
            SolveResult induced = max_induced_matching(c.graph, small);
            SolveResult ur = max_uniquely_restricted_matching(c.graph, small);
            if (induced.size != ur.size) {
                out.result = NotEqual{h.lift(comp)};
                return out;
            }
            local = want_uniquely_restricted ? ur.witness : induced.witness;
        } else {
            auto spec = in_b(c.graph);
            if (!spec) {
                out.result = NotEqual{h.lift(comp)};
                return out;
            }
            // The closed-form induced matching has size k, which is also the
            // maximum size of a uniquely restricted matching in B.
            local = canonical_induced_matching(*spec);
        }
        for (const Edge& e : local)
            matched.emplace_back(to_original(e.u), to_original(e.v));
    }
    out.result = Matching(std::move(matched));
    return out;
}

} // namespace

AlgorithmOutcome murm(const Graph& g, const SolveBudget& budget)
{
    return run_pendant_elimination(g, budget, Reduction::EdgeEnds, true);
}

AlgorithmOutcome msm(const Graph& g, const SolveBudget& budget)
{
    return run_pendant_elimination(g, budget, Reduction::ClosedNeighborhood, false);
}

std::vector<Lemma0Violation> lemma0_violations(const Graph& g, const Matching& m)
{
    if (!is_induced_matching(g, m))
        throw GraphError("lemma0_violations needs an induced matching");
    const auto mate = m.partners(g.order());
    auto matched = [&](Vertex x) { return mate[idx(x)] >= 0; };

    std::vector<Lemma0Violation> out;
    auto emit = [&](auto kind, std::vector<Edge> edges) {
        Lemma0Violation viol{kind, Matching(std::move(edges))};
        if (is_matching(g, viol.implied_better_matching.edges()) && is_uniquely_restricted(g, viol.implied_better_matching))
            out.push_back(std::move(viol));
    };

    // Edges of G - V(M) that lie on no 4-cycle through a matched edge.
    for (const Edge& e : g.edges()) {
        if (matched(e.u) || matched(e.v))
            continue;
        bool on_square = false;
        for (Vertex w : g.neighbors(e.v))
            if (matched(w) && g.adjacent(e.u, mate[idx(w)]))
                on_square = true;
        if (!on_square) {
            std::vector<Edge> edges = m.edges();
            edges.push_back(e);
            emit(Lemma0Violation::UncoveredEdge{e}, std::move(edges));
        }
    }

    // Local pairs u1u2, v1v2 around a matched edge u1v1. The three escape
    // clauses are symmetric in the two sides, so u1 is the smaller end.
    for (const Edge& mid : m) {
        const Vertex u1 = mid.u;
        const Vertex v1 = mid.v;
        for (Vertex u2 : g.neighbors(u1)) {
            if (u2 == v1)
                continue;
            for (Vertex v2 : g.neighbors(v1)) {
                if (v2 == u1 || v2 == u2)
                    continue;
                if (g.adjacent(u2, v2))
                    continue;
                if (g.adjacent(u1, v2) && g.adjacent(v1, u2))
                    continue;
                bool hexagon = false;
                for (Vertex x : g.neighbors(u2)) {
                    if (x == u1 || !matched(x))
                        continue;
                    Vertex y = mate[idx(x)];
                    if (y != u1 && y != v1 && g.adjacent(y, v2))
                        hexagon = true;
                }
                if (hexagon)
                    continue;
                std::vector<Edge> edges;
                for (const Edge& e : m)
                    if (e != mid)
                        edges.push_back(e);
                edges.emplace_back(u1, u2);
                edges.emplace_back(v1, v2);
                emit(Lemma0Violation::LocalPair{mid, Edge(u1, u2), Edge(v1, v2)}, std::move(edges));
            }
        }
    }
    return out;
}

DecisionReport decide_equality(const Graph& g, const DecideOptions& options)
{
    require_subcubic(g);
    DecisionReport report;
    const AlgorithmOutcome ur = murm(g, options.budget);
    const AlgorithmOutcome ind = msm(g, options.budget);

    if (ur.has_matching()) {
        report.nu_ur = static_cast<int>(ur.matching().size());
        report.ur_witness = ur.matching();
    }
    if (!ur.has_matching()) {
        report.refutation = FailingComponent{"murm", ur.verdict().failing_component};
    } else if (!ind.has_matching()) {
        report.refutation = FailingComponent{"msm", ind.verdict().failing_component};
    } else if (ur.matching().size() == ind.matching().size()) {
        report.equal = true;
        report.nu_s = report.nu_ur;
        report.induced_witness = ind.matching();
    } else {
        report.refutation = SizeMismatch{static_cast<int>(ur.matching().size()), static_cast<int>(ind.matching().size())};
    }

    const bool within_budget = g.order() <= options.budget.max_order || options.budget.force;
    if (!report.equal && options.solve_exact && within_budget) {
        SolveResult s = max_induced_matching(g, options.budget);
        report.nu_s = s.size;
        report.induced_witness = s.witness;
        if (!report.nu_ur) {
            SolveResult r = max_uniquely_restricted_matching(g, options.budget);
            report.nu_ur = r.size;
            report.ur_witness = r.witness;
        }
        auto violations = lemma0_violations(g, s.witness);
        if (!violations.empty())
            report.refutation = std::move(violations.front());
    }
    return report;
}

} // namespace ureq
