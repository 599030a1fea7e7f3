#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "treeramsey/embedding.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/graph.hpp"
#include "treeramsey/graph6.hpp"
#include "treeramsey/graph_expr.hpp"
#include "treeramsey/trees.hpp"

using namespace treeramsey;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

std::vector<Graph> sample_graphs() {
    return {Graph(0),
            Graph(1),
            Graph(5),
            Graph::complete(1),
            Graph::complete(2),
            Graph::complete(6),
            Graph::complete_bipartite(3, 4),
            Graph::complete_bipartite(1, 5),
            path_graph(7),
            circulant_regular(8, 3),
            circulant_regular(9, 4)};
}

}  // namespace

TEST_CASE("complete graphs") {
    Graph k5 = Graph::complete(5);
    CHECK(k5.order() == 5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.max_degree() == 4);
    CHECK(k5.is_connected());
    CHECK_FALSE(k5.is_tree());
    for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
    CHECK(k5.has_edge(0, 4));
    CHECK(k5.has_edge(4, 0));
    CHECK_FALSE(k5.has_edge(2, 2));
}

TEST_CASE("complete bipartite graphs") {
    Graph g = Graph::complete_bipartite(3, 4);
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 12);
    CHECK(g.max_degree() == 4);
    std::vector<int> ds = g.degree_sequence();
    CHECK(std::is_sorted(ds.rbegin(), ds.rend()));
    CHECK(ds.front() == 4);
    CHECK(ds.back() == 3);
}

TEST_CASE("from_edges and accessors") {
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    Graph c4 = Graph::from_edges(4, e);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(3, 0));
    CHECK_FALSE(c4.has_edge(0, 2));
    auto back = c4.edges();
    CHECK(back.size() == 4);
    for (auto [u, v] : back) CHECK(c4.has_edge(u, v));
}

TEST_CASE("complement is an involution") {
    for (const Graph& g : sample_graphs()) {
        Graph c = g.complement();
        CHECK(c.complement() == g);
        long long n = g.order();
        CHECK(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("disjoint union") {
    std::array<Graph, 3> parts{Graph::complete(4), Graph::complete(3), Graph(2)};
    Graph u = disjoint_union(parts);
    CHECK(u.order() == 9);
    CHECK(u.edge_count() == 6 + 3 + 0);
    CHECK_FALSE(u.is_connected());
    auto comps = u.components();
    REQUIRE(comps.size() == 4);  // K4, K3 and two isolated vertices
    CHECK(comps[0].size() == 4);
    CHECK(comps[1].size() == 3);
}

TEST_CASE("trees and connectivity") {
    Graph p6 = path_graph(6);
    CHECK(p6.is_tree());
    CHECK(p6.is_connected());
    CHECK(p6.edge_count() == 5);
    Graph two = disjoint_union(std::array<Graph, 2>{path_graph(3), path_graph(3)});
    CHECK_FALSE(two.is_tree());
    CHECK_FALSE(two.is_connected());
    CHECK(Graph(1).is_tree());
    CHECK_FALSE(Graph(0).is_connected());
}

TEST_CASE("breadth-first distances") {
    Graph p5 = path_graph(5);
    auto d = p5.distances_from(0);
    CHECK(d == std::vector<int>{0, 1, 2, 3, 4});
    Graph two = disjoint_union(std::array<Graph, 2>{Graph::complete(2), Graph(1)});
    auto d2 = two.distances_from(0);
    CHECK(d2[1] == 1);
    CHECK(d2[2] == -1);
}

TEST_CASE("dot rendering mentions every edge") {
    Graph g = Graph::complete(3);
    std::string dot = to_dot(g, "k3");
    CHECK(dot.find("k3") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("graph6 round trip") {
    for (const Graph& g : sample_graphs()) {
        if (g.order() == 0) continue;  // graph6 encodes orders >= 1
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 known encodings") {
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph::complete(2)) == "A_");
    CHECK(from_graph6("A_") == Graph::complete(2));
}

TEST_CASE("graph expressions evaluate to the right graphs") {
    GraphExpr e = GraphExpr::disjoint_union(
        {GraphExpr::copies(2, GraphExpr::complete(5)), GraphExpr::complete_bipartite(4, 4)});
    CHECK(e.order() == 18);
    Graph g = e.eval();
    CHECK(g.order() == 18);
    CHECK(g.edge_count() == 2 * 10 + 16);
    CHECK_FALSE(e.describe().empty());

    Graph comp = GraphExpr::complement(GraphExpr::complete(4)).eval();
    CHECK(comp == Graph(4));
}

TEST_CASE("regular circulants") {
    Graph g = circulant_regular(10, 4);
    CHECK(g.order() == 10);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
    Graph h = circulant_regular(8, 5);  // odd degree needs the antipode
    for (int v = 0; v < 8; ++v) CHECK(h.degree(v) == 5);
    CHECK_THROWS_AS(circulant_regular(7, 5), parity_error);  // 2 does not divide kp
    CHECK_THROWS_AS(circulant_regular(4, 4), std::invalid_argument);  // p < k+1
}

TEST_CASE("tree containment basics") {
    Graph k5 = Graph::complete(5);
    CHECK(contains_tree(k5, path_graph(5)));
    CHECK(contains_tree(k5, TreeFamily::parse("star:5").realize()));
    CHECK_FALSE(contains_tree(k5, path_graph(6)));

    Graph p4 = path_graph(4);
    CHECK(contains_tree(p4, path_graph(3)));
    CHECK_FALSE(contains_tree(p4, TreeFamily::parse("star:4").realize()));
}

TEST_CASE("embeddings map tree edges onto host edges") {
    Graph host = Graph::complete_bipartite(3, 4);
    Graph tree = TreeFamily::parse("tstar:6").realize();
    auto emb = find_tree_embedding(host, tree);
    REQUIRE(emb.has_value());
    std::vector<int> sorted = *emb;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (auto [u, v] : tree.edges()) CHECK(host.has_edge((*emb)[u], (*emb)[v]));

    // K_{2,2} has no vertex of degree 3, so the 4-star cannot embed.
    CHECK_FALSE(find_tree_embedding(Graph::complete_bipartite(2, 2),
                                    TreeFamily::parse("star:4").realize())
                    .has_value());
}

TEST_CASE("embedding respects component boundaries") {
    Graph two_k3 = disjoint_union(std::array<Graph, 2>{Graph::complete(3), Graph::complete(3)});
    CHECK(contains_tree(two_k3, path_graph(3)));
    CHECK_FALSE(contains_tree(two_k3, path_graph(4)));
}
