#include "helpers.hpp"
#include "oracles.hpp"

#include "ureq/error.hpp"
#include "ureq/graph.hpp"

#include "doctest.h"

#include <random>

using namespace ureq;
using namespace testing;

TEST_CASE("graph construction validates edges")
{
    Graph p4 = path(4);
    CHECK(p4.order() == 4);
    CHECK(p4.size() == 3);
    CHECK(p4.adjacent(1, 2));
    CHECK_FALSE(p4.adjacent(0, 2));

    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{-1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(-1), GraphError);

    Graph dup = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.size() == 1);
    CHECK(Graph(0).order() == 0);
}

TEST_CASE("degrees")
{
    CHECK(max_degree(Graph(1)) == 0);
    CHECK(is_subcubic(Graph(1)));
    CHECK(max_degree(complete(4)) == 3);
    CHECK(is_subcubic(complete(4)));
    CHECK(max_degree(complete(5)) == 4);
    CHECK_FALSE(is_subcubic(complete(5)));
    CHECK(min_degree(path(4)) == 1);
}

TEST_CASE("connected components")
{
    CHECK(connected_components(path(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    Graph k1k2 = Graph::from_edges(3, std::vector<Edge>{{1, 2}});
    CHECK(connected_components(k1k2) == std::vector<VertexSet>{{0}, {1, 2}});
    CHECK(connected_components(Graph(0)).empty());
    CHECK(is_connected(path(4)));
    CHECK_FALSE(is_connected(k1k2));
}

TEST_CASE("2-connectivity")
{
    CHECK(is_two_connected(cycle(4)));
    CHECK_FALSE(is_two_connected(path(4)));
    CHECK_FALSE(is_two_connected(complete(2)));
    CHECK_FALSE(is_two_connected(Graph(1)));
    CHECK(is_two_connected(complete(3)));
    CHECK_FALSE(is_two_connected(two_triangles()));
    CHECK(is_two_connected(petersen()));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 8), rng, 1, 3);
        CHECK(is_two_connected(g) == oracle::two_connected(g));
    }
}

TEST_CASE("induced subgraph and deletion")
{
    Subgraph s = induced_subgraph(cycle(4), std::vector<Vertex>{0, 1, 2});
    CHECK(s.graph == path(3));
    CHECK(s.to_host == std::vector<Vertex>{0, 1, 2});
    CHECK(s.from_host[3] == -1);

    Subgraph all = induced_subgraph(path(4), std::vector<Vertex>{3, 1, 2, 0});
    CHECK(all.graph == path(4));
    CHECK(all.to_host == std::vector<Vertex>{0, 1, 2, 3});

    CHECK(induced_subgraph(path(4), std::vector<Vertex>{}).graph.order() == 0);

    Subgraph d = delete_vertices(path(4), std::vector<Vertex>{0, 1});
    CHECK(d.graph == complete(2));
    CHECK(d.to_host == std::vector<Vertex>{2, 3});
    CHECK(d.lift(Edge(0, 1)) == Edge(2, 3));
    CHECK(delete_vertices(path(4), std::vector<Vertex>{}).graph == path(4));
    CHECK(delete_vertices(path(4), std::vector<Vertex>{0, 1, 2, 3}).graph.order() == 0);

    CHECK_THROWS_AS(induced_subgraph(path(4), std::vector<Vertex>{4}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(path(4), std::vector<Vertex>{1, 1}), GraphError);
}

TEST_CASE("closed neighbourhood")
{
    CHECK(closed_neighborhood(path(4), 1) == VertexSet{0, 1, 2});
    CHECK(closed_neighborhood(Graph(3), 2) == VertexSet{2});
    for (Vertex v = 0; v < 4; ++v)
        CHECK(closed_neighborhood(complete(4), v) == VertexSet{0, 1, 2, 3});
    CHECK_THROWS_AS(closed_neighborhood(path(4), 7), GraphError);
}

TEST_CASE("relabel")
{
    Graph g = relabel(path(3), std::vector<Vertex>{2, 0, 1});
    CHECK(g.adjacent(2, 0));
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(2, 1));
    CHECK_THROWS_AS(relabel(path(3), std::vector<Vertex>{0, 0, 1}), GraphError);
    CHECK_THROWS_AS(relabel(path(3), std::vector<Vertex>{0, 1}), GraphError);
}
