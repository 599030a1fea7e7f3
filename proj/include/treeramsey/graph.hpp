#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treeramsey {

// Simple undirected graph on vertices 0..n-1, stored as one bit row per
// vertex. Instances are immutable values: every operation that would change
// a graph returns a new one. Orders up to kMaxOrder are supported.
class Graph {
public:
    static constexpr int kMaxOrder = 4096;

    Graph() = default;
    explicit Graph(int n);  // edgeless graph on n vertices

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);

    int order() const { return n_; }
    int row_words() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    bool has_edge(int u, int v) const;
    long long edge_count() const;
    int degree(int v) const;
    int max_degree() const;
    std::vector<int> degree_sequence() const;  // sorted descending

    Graph complement() const;
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    bool is_tree() const;
    // Vertex sets of connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<int>> components() const;
    // Breadth-first distances from v (-1 for unreachable vertices).
    std::vector<int> distances_from(int v) const;

    bool operator==(const Graph&) const = default;

private:
    void set_edge(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph disjoint_union(std::span<const Graph> parts);

// DOT rendering of an undirected graph (one edge per line, lone vertices listed).
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace treeramsey
