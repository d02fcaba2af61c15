#include "ureq/family.hpp"

#include "ureq/error.hpp"

#include <algorithm>

namespace ureq {

std::string to_string(EndType e)
{
    switch (e) {
    case EndType::Open:
        return "open";
    case EndType::EdgeClose:
        return "edge";
    case EndType::CapVertex:
        return "cap";
    }
    return "?";
}

std::optional<EndType> end_type_from_string(std::string_view s)
{
    if (s == "open")
        return EndType::Open;
    if (s == "edge")
        return EndType::EdgeClose;
    if (s == "cap")
        return EndType::CapVertex;
    return std::nullopt;
}

int FamilySpec::k() const
{
    return std::visit([](const auto& var) { return var.k; }, variant);
}

namespace {

struct LadderBuilder {
    int next = 0;
    LadderLabeling lab;
    std::vector<Edge> edges;

    // Ids follow the ladder: [cap_first] u1 w1 v1 u2 w2 v2 ... [cap_last].
    LadderBuilder(int k, bool cap_first, bool cap_last)
    {
        if (cap_first)
            lab.cap_first = next++;
        for (int i = 0; i < k; ++i) {
            lab.u.push_back(next++);
            lab.w.push_back(next++);
            lab.v.push_back(next++);
        }
        if (cap_last)
            lab.cap_last = next++;
        for (int i = 0; i < k; ++i) {
            edges.emplace_back(lab.w[idx(i)], lab.u[idx(i)]);
            edges.emplace_back(lab.w[idx(i)], lab.v[idx(i)]);
            if (i + 1 < k) {
                edges.emplace_back(lab.u[idx(i)], lab.u[idx(i + 1)]);
                edges.emplace_back(lab.v[idx(i)], lab.v[idx(i + 1)]);
            }
        }
    }

    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    void finish_end(EndType type, Vertex u, Vertex v, std::optional<Vertex> cap)
    {
        if (type == EndType::EdgeClose)
            edges.emplace_back(u, v);
        if (type == EndType::CapVertex) {
            edges.emplace_back(*cap, u);
            edges.emplace_back(*cap, v);
        }
    }

    Graph graph() const { return Graph::from_edges(next, edges); }
};

LadderLabeling mirrored(const LadderLabeling& lab)
{
    LadderLabeling out;
    out.u.assign(lab.u.rbegin(), lab.u.rend());
    out.v.assign(lab.v.rbegin(), lab.v.rend());
    out.w.assign(lab.w.rbegin(), lab.w.rend());
    out.cap_first = lab.cap_last;
    out.cap_last = lab.cap_first;
    return out;
}

LadderLabeling mapped(const LadderLabeling& lab, const std::vector<Vertex>& iso)
{
    auto f = [&](Vertex x) { return iso[static_cast<std::size_t>(x)]; };
    LadderLabeling out;
    std::transform(lab.u.begin(), lab.u.end(), std::back_inserter(out.u), f);
    std::transform(lab.v.begin(), lab.v.end(), std::back_inserter(out.v), f);
    std::transform(lab.w.begin(), lab.w.end(), std::back_inserter(out.w), f);
    if (lab.cap_first)
        out.cap_first = f(*lab.cap_first);
    if (lab.cap_last)
        out.cap_last = f(*lab.cap_last);
    return out;
}

std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

FamilyGraph generate_lk(int k)
{
    if (k < 1)
        throw GraphError("L_k needs k >= 1");
    LadderBuilder b(k, false, false);
    return {b.graph(), FamilySpec{B1Variant{k, EndType::Open, EndType::Open}, b.lab}};
}

FamilyGraph generate_b1(int k, EndType left, EndType right)
{
    if (k < 2)
        throw GraphError("B1 members need k >= 2");
    LadderBuilder b(k, left == EndType::CapVertex, right == EndType::CapVertex);
    const auto last = static_cast<std::size_t>(k - 1);
    b.finish_end(left, b.lab.u[0], b.lab.v[0], b.lab.cap_first);
    b.finish_end(right, b.lab.u[last], b.lab.v[last], b.lab.cap_last);
    Graph g = b.graph();
    if (!is_subcubic(g) || !is_two_connected(g))
        throw GraphError("generated B1 graph is not a 2-connected subcubic graph");

    FamilySpec spec{B1Variant{k, left, right}, b.lab};
    if (left > right)
        spec = FamilySpec{B1Variant{k, right, left}, mirrored(b.lab)};
    return {std::move(g), std::move(spec)};
}

FamilyGraph generate_b2(int k)
{
    if (k < 3)
        throw GraphError("B2 members need k >= 3");
    LadderBuilder b(k, false, false);
    const auto last = static_cast<std::size_t>(k - 1);
    const auto& lab = b.lab;
    if (k % 2 == 1) {
        b.edges.emplace_back(lab.u[0], lab.v[last]);
        b.edges.emplace_back(lab.v[0], lab.u[last]);
    } else {
        b.edges.emplace_back(lab.u[0], lab.u[last]);
        b.edges.emplace_back(lab.v[0], lab.v[last]);
    }
    return {b.graph(), FamilySpec{B2Variant{k}, b.lab}};
}

FamilyGraph generate(const FamilySpec& spec)
{
    if (const auto* b1 = std::get_if<B1Variant>(&spec.variant))
        return b1->k == 1 && b1->left == EndType::Open && b1->right == EndType::Open
                   ? generate_lk(1)
                   : generate_b1(b1->k, b1->left, b1->right);
    return generate_b2(std::get<B2Variant>(spec.variant).k);
}

void require_labeling_fits(const Graph& g, const FamilySpec& spec)
{
    const auto& lab = spec.labeling;
    const auto k = static_cast<std::size_t>(spec.k());
    if (lab.u.size() != k || lab.v.size() != k || lab.w.size() != k)
        throw GraphError("family labeling does not have k entries per role");
    VertexSet all;
    all.insert(all.end(), lab.u.begin(), lab.u.end());
    all.insert(all.end(), lab.v.begin(), lab.v.end());
    all.insert(all.end(), lab.w.begin(), lab.w.end());
    if (lab.cap_first)
        all.push_back(*lab.cap_first);
    if (lab.cap_last)
        all.push_back(*lab.cap_last);
    normalize_vertex_set(g, all);
    for (std::size_t i = 0; i < k; ++i) {
        if (!g.adjacent(lab.w[i], lab.u[i]) || !g.adjacent(lab.w[i], lab.v[i]))
            throw GraphError("family labeling: missing rung edge");
        if (i + 1 < k && (!g.adjacent(lab.u[i], lab.u[i + 1]) || !g.adjacent(lab.v[i], lab.v[i + 1])))
            throw GraphError("family labeling: missing path edge");
    }
}

Matching canonical_induced_matching(const FamilySpec& spec)
{
    const auto& lab = spec.labeling;
    const int k = spec.k();
    if (k < 1 || lab.u.size() != static_cast<std::size_t>(k) || lab.v.size() != static_cast<std::size_t>(k) ||
        lab.w.size() != static_cast<std::size_t>(k))
        throw GraphError("canonical_induced_matching: labeling does not match k");
    std::vector<Edge> edges;
    // 1-based: u_{2i} w_{2i} for 2i <= k, v_{2i-1} w_{2i-1} for 2i-1 <= k.
    for (int j = 1; j <= k; ++j) {
        auto i = static_cast<std::size_t>(j - 1);
        if (j % 2 == 0)
            edges.emplace_back(lab.u[i], lab.w[i]);
        else
            edges.emplace_back(lab.v[i], lab.w[i]);
    }
    return Matching(std::move(edges));
}

std::vector<FamilyGraph> enumerate_b_of_order(int n)
{
    std::vector<FamilyGraph> out;
    if (n < 6)
        return out;
    const int k = n / 3;
    std::vector<FamilyGraph> candidates;
    switch (n % 3) {
    case 0:
        candidates.push_back(generate_b1(k, EndType::Open, EndType::Open));
        candidates.push_back(generate_b1(k, EndType::Open, EndType::EdgeClose));
        candidates.push_back(generate_b1(k, EndType::EdgeClose, EndType::EdgeClose));
        if (k >= 3)
            candidates.push_back(generate_b2(k));
        break;
    case 1:
        candidates.push_back(generate_b1(k, EndType::Open, EndType::CapVertex));
        candidates.push_back(generate_b1(k, EndType::EdgeClose, EndType::CapVertex));
        break;
    default:
        candidates.push_back(generate_b1(k, EndType::CapVertex, EndType::CapVertex));
        break;
    }
    for (auto& c : candidates) {
        bool duplicate = std::any_of(out.begin(), out.end(),
                                     [&](const FamilyGraph& kept) { return is_isomorphic(kept.graph, c.graph); });
        if (!duplicate)
            out.push_back(std::move(c));
    }
    return out;
}

std::optional<FamilySpec> in_b(const Graph& g)
{
    if (g.order() < 6 || !is_subcubic(g))
        return std::nullopt;
    const auto degrees = degree_sequence(g);
    for (const auto& cand : enumerate_b_of_order(g.order())) {
        if (cand.graph.size() != g.size() || degree_sequence(cand.graph) != degrees)
            continue;
        if (auto iso = find_isomorphism(cand.graph, g))
            return FamilySpec{cand.spec.variant, mapped(cand.spec.labeling, *iso)};
    }
    return std::nullopt;
}

bool in_b_prime(const Graph& g, const SolveBudget& budget)
{
    if (g.order() <= kSmallOrderThreshold) {
        SolveBudget b = budget;
        b.max_order = std::max(b.max_order, kSmallOrderThreshold);
        return max_induced_matching(g, b).size == max_uniquely_restricted_matching(g, b).size;
    }
    return in_b(g).has_value();
}

} // namespace ureq
