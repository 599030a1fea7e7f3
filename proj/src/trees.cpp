#include "treeramsey/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

#include "treeramsey/errors.hpp"
#include "treeramsey/graph6.hpp"

namespace treeramsey {

namespace {

const char* family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path:
            return "path";
        case FamilyKind::Star:
            return "star";
        case FamilyKind::TPrime:
            return "tprime";
        case FamilyKind::TStar:
            return "tstar";
        case FamilyKind::Explicit:
            return "g6";
    }
    return "?";
}

int min_order(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path:
        case FamilyKind::Star:
            return 2;
        case FamilyKind::TPrime:
            return 4;
        case FamilyKind::TStar:
            return 5;
        case FamilyKind::Explicit:
            return 1;
    }
    return 1;
}

Graph realize_named(FamilyKind kind, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case FamilyKind::Path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case FamilyKind::Star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case FamilyKind::TPrime:
            // center 0 keeps degree n-2; the leg through n-2 has length two
            for (int i = 1; i <= n - 2; ++i) edges.emplace_back(0, i);
            edges.emplace_back(n - 2, n - 1);
            break;
        case FamilyKind::TStar:
            // center 0 keeps degree n-3; the leg through n-3 has length three
            for (int i = 1; i <= n - 3; ++i) edges.emplace_back(0, i);
            edges.emplace_back(n - 3, n - 2);
            edges.emplace_back(n - 2, n - 1);
            break;
        case FamilyKind::Explicit:
            throw std::invalid_argument("realize_named: explicit kind has no formula");
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

TreeFamily TreeFamily::make(FamilyKind kind, int order) {
    if (kind == FamilyKind::Explicit)
        throw std::invalid_argument("TreeFamily::make: use explicit_tree for explicit trees");
    if (order < min_order(kind))
        throw std::invalid_argument("TreeFamily::make: order " + std::to_string(order) +
                                    " below minimum for family " + family_name(kind));
    return TreeFamily(kind, order, realize_named(kind, order));
}

TreeFamily TreeFamily::explicit_tree(const Graph& tree) {
    if (!tree.is_tree())
        throw std::invalid_argument("TreeFamily::explicit_tree: graph is not a tree");
    return TreeFamily(FamilyKind::Explicit, tree.order(), tree);
}

TreeFamily TreeFamily::parse(const std::string& tag) {
    auto colon = tag.find(':');
    if (colon != std::string::npos) {
        std::string name = tag.substr(0, colon);
        std::string rest = tag.substr(colon + 1);
        if (name == "g6") return explicit_tree(from_graph6(rest));
        FamilyKind kind;
        if (name == "path")
            kind = FamilyKind::Path;
        else if (name == "star")
            kind = FamilyKind::Star;
        else if (name == "tprime")
            kind = FamilyKind::TPrime;
        else if (name == "tstar")
            kind = FamilyKind::TStar;
        else
            throw std::invalid_argument("TreeFamily::parse: unknown family '" + name + "'");
        int order = 0;
        try {
            std::size_t used = 0;
            order = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("TreeFamily::parse: bad order in '" + tag + "'");
        }
        return make(kind, order);
    }
    try {
        return explicit_tree(from_graph6(tag));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("TreeFamily::parse: unrecognized tree tag '" + tag + "'");
    }
}

std::string TreeFamily::tag() const {
    if (kind_ == FamilyKind::Explicit) return "g6:" + to_graph6(tree_);
    return std::string(family_name(kind_)) + ":" + std::to_string(order_);
}

Graph TreeFamily::realize() const { return tree_; }

std::pair<int, int> bipartition_sizes(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("bipartition_sizes: graph is not a tree");
    const int n = tree.order();
    std::vector<int> color(n, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    int count[2] = {0, 0};
    count[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u = 0; u < n; ++u) {
            if (tree.has_edge(v, u) && color[u] < 0) {
                color[u] = 1 - color[v];
                ++count[color[u]];
                q.push(u);
            }
        }
    }
    return {std::max(count[0], count[1]), std::min(count[0], count[1])};
}

int alpha2(const Graph& tree) { return bipartition_sizes(tree).first; }

bool has_max_degree_vertex_at_distance3(const Graph& tree) {
    const int n = tree.order();
    int delta = tree.max_degree();
    for (int v = 0; v < n; ++v) {
        if (tree.degree(v) != delta) continue;
        for (int d : tree.distances_from(v)) {
            if (d == 3) return true;
        }
    }
    return false;
}

namespace {

std::string ahu_string(const Graph& tree, int v, int parent) {
    const int n = tree.order();
    std::vector<std::string> kids;
    for (int u = 0; u < n; ++u) {
        if (u != parent && tree.has_edge(v, u)) kids.push_back(ahu_string(tree, u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

std::vector<int> centroids(const Graph& tree) {
    const int n = tree.order();
    if (n == 1) return {0};
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    parent[0] = -1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int u = 0; u < n; ++u) {
            if (tree.has_edge(v, u) && parent[u] == -2) {
                parent[u] = v;
                q.push(u);
            }
        }
    }
    std::vector<int> size(n, 1), maxcomp(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        if (parent[v] >= 0) {
            size[parent[v]] += size[v];
            maxcomp[parent[v]] = std::max(maxcomp[parent[v]], size[v]);
        }
    }
    int best = n;
    std::vector<int> result;
    for (int v = 0; v < n; ++v) {
        int m = std::max(maxcomp[v], n - size[v]);
        if (m < best) {
            best = m;
            result.clear();
        }
        if (m == best) result.push_back(v);
    }
    return result;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("tree_canonical_form: graph is not a tree");
    std::vector<int> c = centroids(tree);
    if (c.size() == 1) return "C" + ahu_string(tree, c[0], -1);
    std::string a = ahu_string(tree, c[0], c[1]);
    std::string b = ahu_string(tree, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return "B" + a + b;
}

bool trees_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return tree_canonical_form(a) == tree_canonical_form(b);
}

TreeFamily classify_tree(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("classify_tree: graph is not a tree");
    const int n = tree.order();
    std::string canon = tree_canonical_form(tree);
    for (FamilyKind kind :
         {FamilyKind::Path, FamilyKind::Star, FamilyKind::TPrime, FamilyKind::TStar}) {
        if (n < min_order(kind)) continue;
        if (tree_canonical_form(realize_named(kind, n)) == canon)
            return TreeFamily::make(kind, n);
    }
    return TreeFamily::explicit_tree(tree);
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: order must be positive");
    if (n > 10)
        throw capacity_error("enumerate_trees: capped at order 10; use an external generator");
    if (n == 1) return {Graph(1)};

    // Walk all canonical level sequences of rooted trees (each sequence lists
    // 1-based depths in preorder, starting [1,2,3,...,n] and ending
    // [1,2,2,...,2]), then keep one representative per free-tree class.
    std::map<std::string, Graph> classes;
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    while (true) {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> last_at_level(n + 2, -1);
        for (int i = 0; i < n; ++i) {
            if (i > 0) edges.emplace_back(last_at_level[level[i] - 1], i);
            last_at_level[level[i]] = i;
        }
        Graph g = Graph::from_edges(n, edges);
        classes.emplace(tree_canonical_form(g), g);

        int p = -1;
        for (int i = n - 1; i >= 1; --i) {
            if (level[i] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }

    std::vector<Graph> result;
    result.reserve(classes.size());
    for (auto& [canon, g] : classes) result.push_back(std::move(g));
    return result;
}

}  // namespace treeramsey
