#include "treeramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "treeramsey/errors.hpp"

namespace treeramsey {

namespace {
int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }
}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (n > kMaxOrder) throw capacity_error("graph order exceeds supported maximum");
    n_ = n;
    words_ = words_for(n);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        g.set_edge(u, v);
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("part sizes must be non-negative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.set_edge(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v / 64] >> (v % 64)) & 1;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (std::uint64_t w : bits_) twice += std::popcount(w);
    return twice / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> ds(n_);
    for (int v = 0; v < n_; ++v) ds[v] = degree(v);
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) {
        std::uint64_t* out = g.bits_.data() + static_cast<std::size_t>(v) * words_;
        const std::uint64_t* in = row(v);
        for (int w = 0; w < words_; ++w) out[w] = ~in[w];
        // clear the diagonal bit and the padding beyond vertex n-1
        out[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        int tail = n_ % 64;
        if (tail != 0) out[words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        for (int w = u / 64; w < words_; ++w) {
            std::uint64_t bitsw = r[w];
            if (w == u / 64) bitsw &= ~((std::uint64_t{2} << (u % 64)) - 1);  // keep v > u only
            while (bitsw) {
                int v = w * 64 + std::countr_zero(bitsw);
                out.emplace_back(u, v);
                bitsw &= bitsw - 1;
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            const std::uint64_t* r = row(u);
            for (int w = 0; w < words_; ++w) {
                std::uint64_t bitsw = r[w];
                while (bitsw) {
                    int v = w * 64 + std::countr_zero(bitsw);
                    bitsw &= bitsw - 1;
                    if (!seen[v]) {
                        seen[v] = 1;
                        q.push(v);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    return components().size() == 1;
}

bool Graph::is_tree() const {
    return n_ >= 1 && is_connected() && edge_count() == n_ - 1;
}

std::vector<int> Graph::distances_from(int v) const {
    check_vertex(v);
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const std::uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsw = r[w];
            while (bitsw) {
                int x = w * 64 + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                if (dist[x] < 0) {
                    dist[x] = dist[u] + 1;
                    q.push(x);
                }
            }
        }
    }
    return dist;
}

Graph disjoint_union(std::span<const Graph> parts) {
    long long total = 0;
    for (const Graph& g : parts) total += g.order();
    if (total > Graph::kMaxOrder) throw capacity_error("disjoint union exceeds supported order");
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
        offset += g.order();
    }
    return Graph::from_edges(static_cast<int>(total), edges);
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    std::vector<char> touched(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v << ";\n";
        touched[u] = touched[v] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!touched[v]) out << "  " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace treeramsey
