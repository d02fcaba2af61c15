// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 on any FAIL.

#include "oracles.hpp"

#include "ureq/decide.hpp"
#include "ureq/exact.hpp"
#include "ureq/family.hpp"
#include "ureq/graph_io.hpp"
#include "ureq/harness.hpp"
#include "ureq/matching.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ureq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    std::size_t failures = 0;

    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok) {
            ++failures;
            pass = false;
            if (failures <= 5)
                detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int run_criterion(int id, const char* title, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %d: %s  [%zu checks, %zu failures, %.2fs]%s%s\n", o.pass ? "PASS" : "FAIL", id, title,
                o.checked, o.failures, secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    return o.pass ? 0 : 1;
}

const EndType kEnds[] = {EndType::Open, EndType::EdgeClose, EndType::CapVertex};

std::vector<FamilyGraph> family_members(int k)
{
    std::vector<FamilyGraph> out;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b)
            out.push_back(generate_b1(k, kEnds[a], kEnds[b]));
    if (k >= 3)
        out.push_back(generate_b2(k));
    return out;
}

std::string name(const FamilyGraph& f)
{
    if (const auto* b1 = std::get_if<B1Variant>(&f.spec.variant))
        return "B1(" + std::to_string(b1->k) + "," + to_string(b1->left) + "," + to_string(b1->right) + ")";
    return "B2(" + std::to_string(f.spec.k()) + ")";
}

Outcome family_equality()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    SolveBudget forced;
    forced.force = true;
    for (int k = 3; k <= 12; ++k)
        for (const FamilyGraph& f : family_members(k)) {
            DecisionReport r = decide_equality(f.graph);
            o.expect(r.equal && r.nu_s == k && r.nu_ur == k, name(f) + " decide");
            const int s = max_induced_matching(f.graph, forced).size;
            const int u = max_uniquely_restricted_matching(f.graph, forced).size;
            o.expect(s == k && u == k, name(f) + " exact " + std::to_string(s) + "/" + std::to_string(u));
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
    return o;
}

void check_against_oracle(Outcome& o, const Graph& g, const std::string& label)
{
    const OracleResult truth = oracle_equality(g);
    const AlgorithmOutcome ur = murm(g);
    const DecisionReport r = decide_equality(g);
    o.expect(r.equal == truth.equal, label + " verdict");
    if (ur.has_matching())
        o.expect(static_cast<int>(ur.matching().size()) == truth.nu_ur, label + " murm size");
}

Outcome oracle_agreement()
{
    Outcome o;
    for (const Graph& g : exhaustive_connected_subcubic(9))
        check_against_oracle(o, g, to_graph6(g));
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int n = 1 + static_cast<int>(seed % 14);
        check_against_oracle(o, random_subcubic(n, seed), "random n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    }
    return o;
}

Outcome theorem_probe()
{
    Outcome o;
    for (int n = 21; n <= 36; ++n)
        for (const FamilyGraph& f : enumerate_b_of_order(n)) {
            DecisionReport r = decide_equality(f.graph);
            o.expect(r.equal, name(f) + " decide");
            o.expect(in_b(f.graph).has_value(), name(f) + " in_b");
        }

    std::ostringstream stream;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int n = 21 + static_cast<int>(seed % 20);
        stream << to_graph6(random_subcubic(n, 1'000'000 + seed, Requirement::TwoConnected)) << '\n';
    }
    std::istringstream in(stream.str());
    VerifyOptions options;
    options.check_theorem1 = true;
    options.jobs = 4;
    std::size_t equal = 0;
    VerifySummary summary = verify_stream(in, options, [&](const VerifyRecord& r) {
        o.expect(r.theorem1_ok == true, "record " + std::to_string(r.index) + " equal/in_b mismatch");
        if (r.decision && r.decision->equal)
            ++equal;
    });
    o.expect(summary.records == 500 && summary.ok(), "summary not clean");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(equal) + "/500 sampled graphs decide equal";
    return o;
}

struct Pair {
    Graph g;
    std::vector<Edge> m;
};

std::vector<Pair> random_pairs()
{
    std::vector<Pair> out;
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 2000; ++i) {
        const int n = 2 + static_cast<int>(rng() % 11);
        // Half subcubic, half denser general graphs with odd cycles everywhere.
        Graph g = i % 2 == 0 ? random_subcubic(n, rng()) : oracle::random_graph(n, rng, 2, 5);
        out.push_back({g, oracle::random_matching(g, rng)});
    }
    return out;
}

Outcome uniqueness_checker()
{
    Outcome o;
    std::size_t cycles = 0;
    for (const Pair& p : random_pairs()) {
        const Matching m(p.m);
        const bool truth = oracle::uniquely_restricted(p.g, p.m);
        o.expect(is_uniquely_restricted(p.g, m) == truth, to_graph6(p.g) + " verdict");
        const auto c = find_alternating_cycle(p.g, m);
        o.expect(c.has_value() == !truth, to_graph6(p.g) + " witness presence");
        if (c) {
            ++cycles;
            o.expect(is_valid_alternating_cycle(p.g, m, *c), to_graph6(p.g) + " witness invalid");
        }
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cycles) + " alternating cycles re-validated";
    return o;
}

Outcome hereditarity_and_chain()
{
    Outcome o;
    for (const Pair& p : random_pairs()) {
        const Matching m(p.m);
        const bool ind = is_induced_matching(p.g, m);
        const bool ur = is_uniquely_restricted(p.g, m);
        const std::size_t k = p.m.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<Edge> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i))
                    sub.push_back(p.m[i]);
            if (ind)
                o.expect(is_induced_matching(p.g, Matching(sub)), to_graph6(p.g) + " induced subset");
            if (ur)
                o.expect(is_uniquely_restricted(p.g, Matching(sub)), to_graph6(p.g) + " ur subset");
        }
        const int s = max_induced_matching(p.g).size;
        const int u = max_uniquely_restricted_matching(p.g).size;
        const int nu = max_matching(p.g).size;
        o.expect(s <= u && u <= nu, to_graph6(p.g) + " chain");
    }
    return o;
}

Outcome min_degree_two_equality_graphs()
{
    Outcome o;
    std::size_t relevant = 0;
    for (const Graph& g : exhaustive_connected_subcubic(9)) {
        if (min_degree(g) < 2 || !oracle_equality(g).equal)
            continue;
        ++relevant;
        o.expect(is_two_connected(g), to_graph6(g));
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(relevant) + " graphs with min degree >= 2 and equality";
    return o;
}

Outcome graph6_fidelity()
{
    Outcome o;
    std::mt19937_64 rng(6);
    for (int i = 0; i < 1000; ++i) {
        const int n = static_cast<int>(rng() % 41);
        Graph g = oracle::random_graph(n, rng, 1 + static_cast<unsigned>(rng() % 4), 8);
        const std::string bytes = to_graph6(g);
        o.expect(parse_graph6(bytes) == g && to_graph6(parse_graph6(bytes)) == bytes, "random n=" + std::to_string(n));
    }
    for (int k = 1; k <= 12; ++k) {
        std::vector<FamilyGraph> members{generate_lk(k)};
        if (k >= 2)
            for (auto& f : family_members(k))
                members.push_back(std::move(f));
        for (const FamilyGraph& f : members) {
            const std::string bytes = to_graph6(f.graph);
            o.expect(parse_graph6(bytes) == f.graph && to_graph6(parse_graph6(bytes)) == bytes, name(f));
        }
    }
    return o;
}

} // namespace

int main()
{
    int failed = 0;
    failed += run_criterion(1, "family members decide equal with value k (k = 3..12)", family_equality);
    failed += run_criterion(2, "decision and murm agree with brute force (exhaustive n <= 9, 1000 random n <= 14)",
                            oracle_agreement);
    failed += run_criterion(3, "equal <=> in B on family controls (n = 21..36) and 500 random 2-connected graphs",
                            theorem_probe);
    failed += run_criterion(4, "unique-restriction check matches perfect-matching count on 2000 pairs",
                            uniqueness_checker);
    failed += run_criterion(5, "hereditarity and nu_s <= nu_ur <= nu on 2000 pairs", hereditarity_and_chain);
    failed += run_criterion(6, "min degree >= 2 equality graphs (n <= 9) are 2-connected",
                            min_degree_two_equality_graphs);
    failed += run_criterion(7, "graph6 round trip on 1000 random graphs and all family graphs k <= 12",
                            graph6_fidelity);
    std::printf("%s: %d of 7 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
