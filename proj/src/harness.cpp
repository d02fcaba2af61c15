#include "ureq/harness.hpp"

#include "ureq/error.hpp"
#include "ureq/family.hpp"
#include "ureq/graph_io.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <istream>
#include <limits>
#include <map>
#include <random>
#include <thread>

namespace ureq {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Bucket key for isomorphism dedup: sorted (degree, sorted neighbour degrees).
std::vector<int> invariant_key(const Graph& g)
{
    std::vector<std::vector<int>> rows;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> row{g.degree(v)};
        for (Vertex w : g.neighbors(v))
            row.push_back(g.degree(w));
        std::sort(row.begin() + 1, row.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> key{g.order(), g.size()};
    for (const auto& r : rows) {
        key.push_back(static_cast<int>(r.size()));
        key.insert(key.end(), r.begin(), r.end());
    }
    return key;
}

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries and would break seed reproducibility.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

std::vector<Graph> exhaustive_connected_subcubic(int n_max, bool force)
{
    if (n_max > kExhaustiveDefaultMax && !force)
        throw BudgetError("exhaustive generation is capped at n <= " + std::to_string(kExhaustiveDefaultMax));
    std::vector<Graph> all;
    if (n_max < 1)
        return all;

    // Every connected graph has a vertex whose removal keeps it connected, so
    // each class of order n extends some class of order n - 1 by one vertex
    // joined to 1..3 vertices of degree <= 2.
    std::vector<Graph> level{Graph(1)};
    all.push_back(level.front());
    for (int n = 2; n <= n_max; ++n) {
        std::map<std::vector<int>, std::vector<Graph>> buckets;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            VertexSet open;
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.degree(v) < 3)
                    open.push_back(v);
            const auto edges = g.edges();
            const std::size_t count = open.size();
            for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
                if (std::popcount(mask) > 3)
                    continue;
                std::vector<Edge> grown = edges;
                for (std::size_t i = 0; i < count; ++i)
                    if (mask & (1u << i))
                        grown.emplace_back(open[i], n - 1);
                Graph h = Graph::from_edges(n, grown);
                auto& bucket = buckets[invariant_key(h)];
                bool seen = std::any_of(bucket.begin(), bucket.end(),
                                        [&](const Graph& kept) { return is_isomorphic(kept, h); });
                if (!seen) {
                    bucket.push_back(h);
                    next.push_back(std::move(h));
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

Graph random_subcubic(int n, std::uint64_t seed, Requirement require)
{
    if (n < 1)
        throw DomainError("random_subcubic needs n >= 1");
    if (require == Requirement::MinDegree2 && n < 3)
        throw DomainError("no simple graph on fewer than 3 vertices has minimum degree 2");
    if (require == Requirement::TwoConnected && n < 3)
        throw DomainError("2-connected graphs need at least 3 vertices");

    std::mt19937_64 rng(seed);
    constexpr int kRetries = 1000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        const int max_edges = std::min(3 * n / 2, n * (n - 1) / 2);
        int target = 0;
        if (require == Requirement::None) {
            target = static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_edges + 1)));
        } else {
            const int low = std::min(n, max_edges);
            target = low + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_edges - low + 1)));
        }

        std::vector<int> degree(idx(n), 0);
        std::vector<std::vector<char>> adj(idx(n), std::vector<char>(idx(n), 0));
        std::vector<Edge> edges;
        while (static_cast<int>(edges.size()) < target) {
            // With a degree requirement the first endpoint is a random vertex
            // of smallest degree among those that still have a free partner.
            std::vector<Vertex> first;
            int best = 4;
            for (Vertex v = 0; v < n; ++v) {
                if (degree[idx(v)] >= 3)
                    continue;
                bool has_partner = false;
                for (Vertex w = 0; w < n && !has_partner; ++w)
                    has_partner = w != v && degree[idx(w)] < 3 && !adj[idx(v)][idx(w)];
                if (!has_partner)
                    continue;
                if (require != Requirement::None && degree[idx(v)] < best) {
                    best = degree[idx(v)];
                    first.clear();
                }
                if (require == Requirement::None || degree[idx(v)] == best)
                    first.push_back(v);
            }
            if (first.empty())
                break;
            Vertex a = first[draw(rng, first.size())];
            std::vector<Vertex> second;
            for (Vertex w = 0; w < n; ++w)
                if (w != a && degree[idx(w)] < 3 && !adj[idx(a)][idx(w)])
                    second.push_back(w);
            Vertex b = second[draw(rng, second.size())];
            adj[idx(a)][idx(b)] = adj[idx(b)][idx(a)] = 1;
            ++degree[idx(a)];
            ++degree[idx(b)];
            edges.emplace_back(a, b);
        }
        Graph g = Graph::from_edges(n, edges);
        bool ok = true;
        if (require == Requirement::MinDegree2)
            ok = min_degree(g) >= 2;
        if (require == Requirement::TwoConnected)
            ok = is_two_connected(g);
        if (ok)
            return g;
    }
    throw BudgetError("random_subcubic: requirement not met after " + std::to_string(kRetries) + " attempts");
}

void VerifySummary::add(const VerifyRecord& r)
{
    ++records;
    if (r.parse_error) {
        ++parse_errors;
        return;
    }
    if (r.internal_error)
        ++internal_errors;
    if (r.skip_reason)
        ++skipped;
    if (r.decision) {
        ++decided;
        if (r.decision->equal)
            ++equal;
    }
    if (r.in_b)
        ++in_b;
    if (r.oracle)
        ++oracle_checked;
    if (r.theorem1_ok)
        ++theorem1_checked;
    if (r.mismatch())
        ++mismatches;
}

VerifyRecord verify_graph(std::size_t index, const Graph& g, const VerifyOptions& options)
{
    VerifyRecord rec;
    rec.index = index;
    rec.n = g.order();
    rec.m = g.size();
    rec.subcubic = is_subcubic(g);
    rec.two_connected = is_two_connected(g);
    try {
        rec.in_b = in_b(g).has_value();
        if (rec.subcubic)
            rec.decision = decide_equality(g, DecideOptions{options.budget, false});
        else
            rec.skip_reason = "not subcubic";

        if (options.run_oracle && g.order() <= options.oracle_max_n) {
            SolveBudget ob = SolveBudget::oracle_default();
            ob.max_order = std::max(ob.max_order, options.oracle_max_n);
            rec.oracle = oracle_equality(g, ob);
            if (rec.decision) {
                rec.agree = rec.decision->equal == rec.oracle->equal;
                if (rec.decision->nu_ur)
                    rec.nu_ur_agree = *rec.decision->nu_ur == rec.oracle->nu_ur;
            }
        }
        if (options.check_theorem1 && rec.decision && rec.two_connected && g.order() >= 21)
            rec.theorem1_ok = rec.decision->equal == rec.in_b;
    } catch (const std::exception& e) {
        rec.internal_error = e.what();
    }
    return rec;
}

VerifySummary verify_stream(std::istream& in, const VerifyOptions& options,
                            const std::function<void(const VerifyRecord&)>& sink)
{
    VerifySummary summary;
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
    const std::size_t batch_size = 64 * jobs;

    std::size_t index = 0;
    std::string line;
    bool more = true;
    while (more) {
        std::vector<std::pair<std::size_t, std::string>> batch;
        while (batch.size() < batch_size && (more = static_cast<bool>(std::getline(in, line)))) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                continue;
            if (line.compare(first, 10, ">>graph6<<") == 0 &&
                line.find_first_not_of(" \t\r", first + 10) == std::string::npos)
                continue;
            batch.emplace_back(index++, line);
        }
        std::vector<VerifyRecord> out(batch.size());
        auto work = [&](std::size_t i) {
            VerifyRecord& rec = out[i];
            try {
                Graph g = parse_graph6(batch[i].second);
                rec = verify_graph(batch[i].first, g, options);
            } catch (const std::exception& e) {
                rec = VerifyRecord{};
                rec.index = batch[i].first;
                rec.parse_error = e.what();
            }
        };
        if (jobs == 1 || batch.size() < 2) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                work(i);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < std::min(jobs, batch.size()); ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = cursor++; i < batch.size(); i = cursor++)
                        work(i);
                });
            for (auto& th : pool)
                th.join();
        }
        for (const auto& rec : out) {
            summary.add(rec);
            sink(rec);
        }
    }
    return summary;
}

} // namespace ureq
