#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "venergy/edge_list.hpp"
#include "venergy/graph.hpp"

using namespace venergy;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        out.push_back(g.degree(x));
    }
    return out;
}

} // namespace

TEST(Builders, Paths) {
    EXPECT_EQ(path_graph(1).order(), 1u);
    EXPECT_EQ(path_graph(1).size(), 0u);
    EXPECT_EQ(path_graph(2), complete_graph(2));
    const Graph p4 = path_graph(4);
    EXPECT_EQ(p4.size(), 3u);
    EXPECT_EQ(degrees(p4), (std::vector<std::size_t>{1, 2, 2, 1}));
    EXPECT_THROW(path_graph(0), GraphError);
}

TEST(Builders, Stars) {
    EXPECT_EQ(star_graph(2), complete_graph(2));
    EXPECT_TRUE(oracle::isomorphic(star_graph(3), path_graph(3)));
    const Graph s5 = star_graph(5);
    EXPECT_EQ(s5.degree(0), 4u);
    for (Vertex leaf = 1; leaf < 5; ++leaf) {
        EXPECT_EQ(s5.degree(leaf), 1u);
    }
    EXPECT_THROW(star_graph(1), GraphError);
}

TEST(Builders, RejectsBadEdges) {
    EXPECT_THROW(Graph(2, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST(EdgeList, Parses) {
    EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2"), path_graph(3));
    EXPECT_EQ(parse_edge_list("4 3\n0 1\n0 2\n0 3"), star_graph(4));
    EXPECT_EQ(parse_edge_list("# comment\n3 2\n# another\n1 2\n0 1\n"), path_graph(3));
    EXPECT_EQ(parse_edge_list("1 0\n"), path_graph(1));
}

TEST(EdgeList, Rejects) {
    EXPECT_THROW(parse_edge_list("2 1\n0 0"), GraphError);
    EXPECT_THROW(parse_edge_list("2 1\n0 2"), GraphError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0"), GraphError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1"), GraphError);
    EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2"), GraphError);
    EXPECT_THROW(parse_edge_list("three 1\n0 1"), GraphError);
    EXPECT_THROW(parse_edge_list(""), GraphError);
}

TEST(EdgeList, RoundTrips) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = random_bipartite(3, 4, 0.5, s);
        EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
    }
}

TEST(Coalesce, SmallCases) {
    const auto p3 = coalesce(complete_graph(2), 0, complete_graph(2), 0);
    EXPECT_EQ(p3.graph.order(), 3u);
    EXPECT_EQ(p3.graph.size(), 2u);
    EXPECT_TRUE(oracle::isomorphic(p3.graph, path_graph(3)));

    for (Vertex v : {0, 1}) {
        EXPECT_TRUE(oracle::isomorphic(coalesce(path_graph(3), 0, path_graph(2), v).graph, path_graph(4)));
    }
    EXPECT_TRUE(oracle::isomorphic(coalesce(star_graph(3), 0, star_graph(3), 0).graph, star_graph(5)));
    EXPECT_THROW(coalesce(path_graph(2), 2, path_graph(2), 0), GraphError);
}

TEST(Coalesce, CountsAndMaps) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_tree(1 + rng() % 8, rng());
        const Graph h = random_bipartite(1 + rng() % 4, 1 + rng() % 4, 0.5, rng());
        const Vertex u = rng() % g.order();
        const Vertex v = rng() % h.order();
        const auto c = coalesce(g, u, h, v);
        EXPECT_EQ(c.graph.order(), g.order() + h.order() - 1);
        EXPECT_EQ(c.graph.size(), g.size() + h.size());
        EXPECT_EQ(c.map_right[v], u);
        EXPECT_EQ(c.merged, u);
        for (const Edge& e : h.edges()) {
            EXPECT_TRUE(c.graph.has_edge(c.map_right[e.a], c.map_right[e.b]));
        }
        for (const Edge& e : g.edges()) {
            EXPECT_TRUE(c.graph.has_edge(c.map_left[e.a], c.map_left[e.b]));
        }
    }
}

TEST(Distance, Basic) {
    EXPECT_EQ(distance(path_graph(4), 0, 3), 3u);
    EXPECT_EQ(distance(star_graph(5), 2, 2), 0u);
    const Graph two = disjoint_union(complete_graph(2), complete_graph(2));
    EXPECT_FALSE(distance(two, 0, 3).has_value());
}

TEST(Bipartition, Canonical) {
    const auto p4 = bipartition(path_graph(4));
    ASSERT_TRUE(p4);
    EXPECT_EQ(p4->part1, (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(p4->part2, (std::vector<Vertex>{1, 3}));
    EXPECT_FALSE(bipartition(complete_graph(3)));
    const auto s5 = bipartition(star_graph(5));
    ASSERT_TRUE(s5);
    EXPECT_EQ(s5->part1, (std::vector<Vertex>{0}));
    EXPECT_EQ(s5->part2, (std::vector<Vertex>{1, 2, 3, 4}));
    // lowest vertex of each component lands in part1
    const Graph g(5, {{1, 2}, {3, 4}});
    const auto parts = bipartition(g);
    ASSERT_TRUE(parts);
    EXPECT_EQ(parts->part1, (std::vector<Vertex>{0, 1, 3}));
}

TEST(Deletion, Vertices) {
    const Graph p3 = path_graph(3);
    const Vertex center[] = {1};
    const auto del = delete_vertices(p3, center);
    EXPECT_EQ(del.graph, empty_graph(2));
    EXPECT_EQ(del.new_to_old, (std::vector<Vertex>{0, 2}));
    EXPECT_FALSE(del.old_to_new[1]);
    EXPECT_EQ(delete_vertices(p3, {}).graph, p3);
}

TEST(Deletion, Edges) {
    const Edge middle[] = {{1, 2}};
    const Graph two = delete_edges(path_graph(4), middle);
    EXPECT_EQ(two, Graph(4, {{0, 1}, {2, 3}}));
    const Edge absent[] = {{0, 3}};
    EXPECT_THROW(delete_edges(path_graph(4), absent), GraphError);
}

TEST(TreePath, Basic) {
    EXPECT_EQ(tree_path(path_graph(4), 0, 3), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(tree_path(path_graph(4), 2, 2), (std::vector<Vertex>{2}));
    EXPECT_EQ(tree_path(star_graph(5), 1, 4), (std::vector<Vertex>{1, 0, 4}));
    EXPECT_THROW(tree_path(cycle_graph(4), 0, 2), GraphError);
}

TEST(Bridges, Basic) {
    const Graph t = random_tree(9, 3);
    EXPECT_EQ(bridges(t), t.edges());
    EXPECT_TRUE(bridges(cycle_graph(4)).empty());
    const Graph pendant = coalesce(cycle_graph(4), 0, path_graph(2), 0).graph;
    EXPECT_EQ(bridges(pendant), (std::vector<Edge>{{0, 4}}));
}

TEST(EdgeCut, Basic) {
    const Vertex side[] = {0, 1};
    EXPECT_EQ(edge_cut(path_graph(4), side), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(edge_cut(cycle_graph(4), side), (std::vector<Edge>{{0, 3}, {1, 2}}));
}

TEST(RandomTree, Structure) {
    EXPECT_EQ(random_tree(1, 5).order(), 1u);
    EXPECT_EQ(random_tree(2, 5), complete_graph(2));
    EXPECT_EQ(random_tree(8, 99), random_tree(8, 99));
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph t = random_tree(8, s);
        EXPECT_EQ(t.size(), 7u);
        EXPECT_EQ(component_count(t), 1u);
        EXPECT_TRUE(is_tree(t));
    }
}

TEST(RandomTree, AllLabeledTreesAppear) {
    // 4^2 = 16 labeled trees on 4 vertices
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t s = 0; s < 2000; ++s) {
        seen.insert(random_tree(4, s).edges());
    }
    EXPECT_EQ(seen.size(), 16u);
}

TEST(RandomBipartite, Structure) {
    EXPECT_EQ(random_bipartite(1, 1, 1.0, 0), complete_graph(2));
    EXPECT_EQ(random_bipartite(3, 4, 0.4, 11), random_bipartite(3, 4, 0.4, 11));
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph g = random_bipartite(4, 3, 0.3, s);
        EXPECT_TRUE(is_bipartite(g));
        EXPECT_GE(g.degree(0), 1u);
        for (const Edge& e : g.edges()) {
            EXPECT_LT(e.a, 4u);
            EXPECT_GE(e.b, 4u);
        }
    }
}

TEST(Permute, PreservesStructure) {
    const Graph g = random_tree(6, 4);
    const Vertex perm[] = {5, 3, 1, 0, 2, 4};
    const Graph h = permute(g, perm);
    EXPECT_TRUE(oracle::isomorphic(g, h));
    for (const Edge& e : g.edges()) {
        EXPECT_TRUE(h.has_edge(perm[e.a], perm[e.b]));
    }
}
