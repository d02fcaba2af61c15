#include "helpers.hpp"
#include "oracles.hpp"

#include "ureq/decide.hpp"
#include "ureq/error.hpp"
#include "ureq/family.hpp"
#include "ureq/harness.hpp"

#include "doctest.h"

#include <random>

using namespace ureq;
using namespace testing;

TEST_CASE("murm")
{
    AlgorithmOutcome p4 = murm(path(4));
    REQUIRE(p4.has_matching());
    CHECK(p4.matching() == Matching({{0, 1}, {2, 3}}));
    CHECK(p4.pendant_edges == std::vector<Edge>{{0, 1}, {2, 3}});

    AlgorithmOutcome c5 = murm(cycle(5));
    REQUIRE_FALSE(c5.has_matching());
    CHECK(c5.verdict().failing_component == VertexSet{0, 1, 2, 3, 4});

    AlgorithmOutcome b8 = murm(generate_b2(8).graph);
    REQUIRE(b8.has_matching());
    CHECK(b8.matching().size() == 8);
    CHECK(is_uniquely_restricted(generate_b2(8).graph, b8.matching()));

    CHECK_THROWS_AS(murm(complete(5)), DomainError);
}

TEST_CASE("msm")
{
    AlgorithmOutcome p4 = msm(path(4));
    REQUIRE(p4.has_matching());
    CHECK(p4.matching() == Matching({{0, 1}}));

    AlgorithmOutcome c4 = msm(cycle(4));
    REQUIRE(c4.has_matching());
    CHECK(c4.matching().size() == 1);

    Graph caps = generate_b1(7, EndType::CapVertex, EndType::CapVertex).graph;
    AlgorithmOutcome b = msm(caps);
    REQUIRE(b.has_matching());
    CHECK(b.matching().size() == 7);
    CHECK(is_induced_matching(caps, b.matching()));

    CHECK_THROWS_AS(msm(complete(5)), DomainError);
}

TEST_CASE("decide_equality examples")
{
    DecisionReport p4 = decide_equality(path(4));
    CHECK_FALSE(p4.equal);
    CHECK(p4.nu_ur == 2);
    REQUIRE(p4.refutation);
    auto* sizes = std::get_if<SizeMismatch>(&*p4.refutation);
    REQUIRE(sizes);
    CHECK(sizes->ur_size == 2);
    CHECK(sizes->induced_size == 1);

    DecisionReport c4 = decide_equality(cycle(4));
    CHECK(c4.equal);
    CHECK(c4.nu_s == 1);
    CHECK(c4.nu_ur == 1);
    CHECK_FALSE(c4.refutation);

    DecisionReport c5 = decide_equality(cycle(5));
    CHECK_FALSE(c5.equal);
    REQUIRE(c5.refutation);
    CHECK(std::get<FailingComponent>(*c5.refutation).algorithm == "murm");

    DecisionReport k1 = decide_equality(Graph(1));
    CHECK(k1.equal);
    CHECK(k1.nu_s == 0);

    CHECK_THROWS_AS(decide_equality(complete(5)), DomainError);
}

TEST_CASE("decide_equality with exact follow-up")
{
    DecisionReport p4 = decide_equality(path(4), DecideOptions{{}, true});
    CHECK(p4.nu_s == 1);
    CHECK(p4.nu_ur == 2);
    REQUIRE(p4.refutation);
    CHECK(std::holds_alternative<Lemma0Violation>(*p4.refutation));

    DecisionReport c5 = decide_equality(cycle(5), DecideOptions{{}, true});
    CHECK(c5.nu_s == 1);
    CHECK(c5.nu_ur == 2);
}

TEST_CASE("family graphs decide equal with value k")
{
    for (int n = 21; n <= 36; ++n)
        for (const auto& f : enumerate_b_of_order(n)) {
            DecisionReport r = decide_equality(f.graph);
            CHECK(r.equal);
            CHECK(r.nu_s == n / 3);
            CHECK(r.nu_ur == n / 3);
            REQUIRE(r.induced_witness);
            REQUIRE(r.ur_witness);
            CHECK(is_induced_matching(f.graph, *r.induced_witness));
            CHECK(is_uniquely_restricted(f.graph, *r.ur_witness));
        }
}

TEST_CASE("local violations")
{
    auto p4 = lemma0_violations(path(4), Matching({{1, 2}}));
    REQUIRE(p4.size() == 1);
    auto* pair = std::get_if<Lemma0Violation::LocalPair>(&p4[0].kind);
    REQUIRE(pair);
    CHECK(pair->matched == Edge(1, 2));
    CHECK(pair->first == Edge(0, 1));
    CHECK(pair->second == Edge(2, 3));
    CHECK(p4[0].implied_better_matching == Matching({{0, 1}, {2, 3}}));

    CHECK(lemma0_violations(cycle(4), Matching({{0, 1}})).empty());

    // K2 + K2: the second edge is uncovered.
    Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
    auto un = lemma0_violations(two, Matching({{0, 1}}));
    REQUIRE(un.size() == 1);
    CHECK(std::get<Lemma0Violation::UncoveredEdge>(un[0].kind).edge == Edge(2, 3));

    CHECK_THROWS_AS(lemma0_violations(path(4), Matching({{0, 1}, {2, 3}})), GraphError);

    const EndType ends[] = {EndType::Open, EndType::EdgeClose, EndType::CapVertex};
    for (int k = 2; k <= 10; ++k) {
        for (EndType a : ends)
            for (EndType b : ends) {
                FamilyGraph f = generate_b1(k, a, b);
                CHECK(lemma0_violations(f.graph, canonical_induced_matching(f.spec)).empty());
            }
        if (k >= 3) {
            FamilyGraph f = generate_b2(k);
            CHECK(lemma0_violations(f.graph, canonical_induced_matching(f.spec)).empty());
        }
    }
}

TEST_CASE("violations imply larger uniquely restricted matchings")
{
    std::mt19937_64 rng(17);
    std::size_t seen = 0;
    for (const Graph& g : exhaustive_connected_subcubic(8)) {
        SolveResult s = max_induced_matching(g);
        auto values = oracle::values(g);
        auto found = lemma0_violations(g, s.witness);
        for (const auto& v : found) {
            CHECK(v.implied_better_matching.size() == s.witness.size() + 1);
            CHECK(oracle::uniquely_restricted(g, v.implied_better_matching.edges()));
        }
        // A violation exists only when nu_ur > nu_s.
        if (values.nu_s == values.nu_ur)
            CHECK(found.empty());
        seen += found.size();
    }
    CHECK(seen > 0);
}

TEST_CASE("decision agrees with brute force on small graphs")
{
    for (const Graph& g : exhaustive_connected_subcubic(8)) {
        auto values = oracle::values(g);
        DecisionReport r = decide_equality(g);
        CHECK(r.equal == (values.nu_s == values.nu_ur));
        if (r.nu_ur)
            CHECK(*r.nu_ur == values.nu_ur);
        if (r.equal)
            CHECK(r.nu_s == values.nu_s);
    }
    // Disconnected inputs decide component-wise.
    Graph two = Graph::from_edges(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    DecisionReport r = decide_equality(two);
    CHECK(r.equal);
    CHECK(r.nu_s == 2);
}
