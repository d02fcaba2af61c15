#include "helpers.hpp"
#include "oracles.hpp"

#include "ureq/error.hpp"
#include "ureq/matching.hpp"

#include "doctest.h"

#include <random>

using namespace ureq;
using namespace testing;

namespace {

Matching mk(std::vector<Edge> e) { return Matching(std::move(e)); }

} // namespace

TEST_CASE("matching value type")
{
    Matching m = mk({{3, 2}, {0, 1}});
    CHECK(m.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(m.contains(Edge(2, 3)));
    CHECK(m.vertices() == VertexSet{0, 1, 2, 3});
    CHECK(m.partners(5) == std::vector<Vertex>{1, 0, 3, 2, -1});
    CHECK_THROWS_AS(mk({{0, 1}, {1, 2}}), GraphError);
    CHECK_THROWS_AS(mk({{1, 1}}), GraphError);
    CHECK(mk({{0, 1}}) < mk({{0, 2}}));
    CHECK(mk({{0, 1}}).merged(mk({{2, 3}})) == m);
}

TEST_CASE("is_matching")
{
    CHECK(is_matching(path(4), std::vector<Edge>{{0, 1}, {2, 3}}));
    CHECK_FALSE(is_matching(path(4), std::vector<Edge>{{0, 1}, {1, 2}}));
    CHECK_FALSE(is_matching(cycle(4), std::vector<Edge>{{0, 2}}));
    CHECK(is_matching(path(4), std::vector<Edge>{}));
    CHECK(matching_problem(cycle(4), std::vector<Edge>{{0, 2}}).has_value());
    CHECK_THROWS_AS(require_matching(cycle(4), mk({{0, 2}})), GraphError);
}

TEST_CASE("matched subgraph")
{
    CHECK(matched_subgraph(path(4), mk({{1, 2}})).graph == complete(2));
    CHECK(matched_subgraph(path(4), mk({{0, 1}, {2, 3}})).graph == path(4));
    CHECK(matched_subgraph(path(4), Matching{}).graph.order() == 0);
}

TEST_CASE("induced matchings")
{
    CHECK_FALSE(is_induced_matching(path(4), mk({{0, 1}, {2, 3}})));
    CHECK(is_induced_matching(path(4), mk({{1, 2}})));
    CHECK(is_induced_matching(cycle(6), mk({{0, 1}, {3, 4}})));
    CHECK_FALSE(is_induced_matching(cycle(6), mk({{0, 1}, {2, 3}})));
    CHECK(is_induced_matching(cycle(6), Matching{}));
}

TEST_CASE("uniquely restricted matchings")
{
    CHECK_FALSE(is_uniquely_restricted(cycle(4), mk({{0, 1}, {2, 3}})));
    CHECK(is_uniquely_restricted(path(4), mk({{0, 1}, {2, 3}})));
    CHECK_FALSE(is_uniquely_restricted(complete(4), mk({{0, 1}, {2, 3}})));
    CHECK_FALSE(is_uniquely_restricted(complete(4), mk({{0, 2}, {1, 3}})));
    CHECK(is_uniquely_restricted(complete(4), mk({{0, 1}})));
}

TEST_CASE("alternating cycle witnesses")
{
    Matching opp = mk({{0, 1}, {2, 3}});
    auto c4 = find_alternating_cycle(cycle(4), opp);
    REQUIRE(c4);
    CHECK(c4->cycle.size() == 4);
    CHECK(is_valid_alternating_cycle(cycle(4), opp, *c4));
    CHECK(opp.contains(Edge(c4->cycle[0], c4->cycle[1])));
    CHECK_FALSE(opp.contains(Edge(c4->cycle[1], c4->cycle[2])));

    CHECK_FALSE(find_alternating_cycle(path(6), mk({{0, 1}, {2, 3}, {4, 5}})));

    Matching alt = mk({{0, 1}, {2, 3}, {4, 5}});
    auto c6 = find_alternating_cycle(cycle(6), alt);
    REQUIRE(c6);
    CHECK(c6->cycle.size() == 6);
    CHECK(is_valid_alternating_cycle(cycle(6), alt, *c6));

    CHECK_FALSE(is_valid_alternating_cycle(cycle(4), opp, AlternatingCycle{{0, 1, 2}}));
    CHECK_FALSE(is_valid_alternating_cycle(cycle(4), opp, AlternatingCycle{{1, 2, 3, 0}}));
}

TEST_CASE("two triangles joined by an edge: unique perfect matching, no alternating cycle")
{
    // A partner-digraph test would report the closed walk 0-2-3-5-0 here, but
    // that walk is not an alternating cycle: G(M) has exactly one perfect matching.
    Graph g = two_triangles();
    Matching m = mk({{0, 3}, {1, 2}, {4, 5}});
    CHECK(oracle::uniquely_restricted(g, m.edges()));
    CHECK(is_uniquely_restricted(g, m));
    CHECK_FALSE(find_alternating_cycle(g, m));
}

TEST_CASE("unique restriction agrees with perfect-matching counting")
{
    std::mt19937_64 rng(2024);
    int with_cycle = 0;
    for (int i = 0; i < 1500; ++i) {
        const int n = 2 + static_cast<int>(rng() % 11);
        Graph g = oracle::random_graph(n, rng, 1 + static_cast<unsigned>(rng() % 3), 5);
        Matching m(oracle::random_matching(g, rng));
        const bool expected = oracle::uniquely_restricted(g, m.edges());
        CHECK(is_uniquely_restricted(g, m) == expected);
        auto c = find_alternating_cycle(g, m);
        CHECK(c.has_value() == !expected);
        if (c) {
            ++with_cycle;
            CHECK(is_valid_alternating_cycle(g, m, *c));
        }
    }
    CHECK(with_cycle > 100);
}

TEST_CASE("induced implies uniquely restricted, and both are hereditary")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 400; ++i) {
        Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 8), rng, 1, 3);
        Matching m(oracle::random_matching(g, rng));
        const bool ind = is_induced_matching(g, m);
        const bool ur = is_uniquely_restricted(g, m);
        CHECK(ind == oracle::induced(g, m.edges()));
        if (ind)
            CHECK(ur);
        for (std::size_t drop = 0; drop < m.size(); ++drop) {
            std::vector<Edge> sub;
            for (std::size_t j = 0; j < m.size(); ++j)
                if (j != drop)
                    sub.push_back(m.edges()[j]);
            if (ind)
                CHECK(is_induced_matching(g, Matching(sub)));
            if (ur)
                CHECK(is_uniquely_restricted(g, Matching(sub)));
        }
    }
}

TEST_CASE("checks reject non-matchings")
{
    CHECK_THROWS_AS(is_uniquely_restricted(cycle(4), mk({{0, 2}})), GraphError);
    CHECK_THROWS_AS(is_induced_matching(cycle(4), mk({{0, 2}})), GraphError);
    CHECK_THROWS_AS(find_alternating_cycle(cycle(4), mk({{0, 2}})), GraphError);
}
