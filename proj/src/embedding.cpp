#include "treeramsey/embedding.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace treeramsey {

namespace {

// Rooted shape string of each subtree when the tree hangs from `root`:
// children strings are sorted, so equal strings mean interchangeable subtrees.
void rooted_shapes(const Graph& tree, int root, std::vector<int>& parent,
                   std::vector<int>& bfs_order, std::vector<std::string>& shape,
                   std::vector<int>& subtree_size) {
    const int n = tree.order();
    parent.assign(n, -2);
    bfs_order.clear();
    bfs_order.reserve(n);
    parent[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        bfs_order.push_back(v);
        for (int u = 0; u < n; ++u) {
            if (tree.has_edge(v, u) && parent[u] == -2) {
                parent[u] = v;
                q.push(u);
            }
        }
    }
    shape.assign(n, "");
    subtree_size.assign(n, 1);
    for (int i = n - 1; i >= 0; --i) {
        int v = bfs_order[i];
        std::vector<std::string> kids;
        for (int u = 0; u < n; ++u) {
            if (parent[u] == v) {
                kids.push_back(shape[u]);
                subtree_size[v] += subtree_size[u];
            }
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        shape[v] = std::move(s);
    }
}

}  // namespace

TreePlan TreePlan::build(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("TreePlan::build: graph is not a tree");
    const int n = tree.order();
    int root = 0;
    for (int v = 1; v < n; ++v) {
        if (tree.degree(v) > tree.degree(root)) root = v;
    }

    std::vector<int> parent, bfs_order, subtree_size;
    std::vector<std::string> shape;
    rooted_shapes(tree, root, parent, bfs_order, shape, subtree_size);

    TreePlan plan;
    plan.order = n;
    plan.slot_vertex.reserve(n);
    plan.parent_slot.reserve(n);
    plan.tree_degree.reserve(n);
    plan.same_shape_prev.reserve(n);

    std::vector<int> slot_of(n, -1);
    std::queue<int> q;
    auto emit = [&](int v, int pslot, int prev_slot) {
        int s = static_cast<int>(plan.slot_vertex.size());
        slot_of[v] = s;
        plan.slot_vertex.push_back(v);
        plan.parent_slot.push_back(pslot);
        plan.tree_degree.push_back(tree.degree(v));
        plan.same_shape_prev.push_back(prev_slot);
        q.push(v);
        return s;
    };
    emit(root, -1, -1);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        std::vector<int> kids;
        for (int u = 0; u < n; ++u) {
            if (parent[u] == v) kids.push_back(u);
        }
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            if (subtree_size[a] != subtree_size[b]) return subtree_size[a] > subtree_size[b];
            if (shape[a] != shape[b]) return shape[a] < shape[b];
            return a < b;
        });
        int prev_slot = -1;
        const std::string* prev_shape = nullptr;
        for (int u : kids) {
            int link = (prev_shape != nullptr && *prev_shape == shape[u]) ? prev_slot : -1;
            prev_slot = emit(u, slot_of[v], link);
            prev_shape = &shape[u];
        }
    }
    return plan;
}

bool embeds_small(const TreePlan& plan, const std::uint64_t* rows, const int* host_degree,
                  int host_order) {
    const int n = plan.order;
    if (n > host_order) return false;
    if (n == 0) return true;

    std::uint64_t cand[64];
    int img[64];
    std::uint64_t used = 0;

    std::uint64_t root_cand = 0;
    for (int v = 0; v < host_order; ++v) {
        if (host_degree[v] >= plan.tree_degree[0]) root_cand |= std::uint64_t{1} << v;
    }
    cand[0] = root_cand;
    int pos = 0;
    while (true) {
        bool advanced = false;
        while (cand[pos] != 0) {
            int v = std::countr_zero(cand[pos]);
            cand[pos] &= cand[pos] - 1;
            if (host_degree[v] < plan.tree_degree[pos]) continue;
            img[pos] = v;
            if (pos == n - 1) return true;
            used |= std::uint64_t{1} << v;
            ++pos;
            std::uint64_t base = rows[img[plan.parent_slot[pos]]] & ~used;
            int prev = plan.same_shape_prev[pos];
            if (prev >= 0) {
                int pv = img[prev];
                base = (pv >= 63) ? 0 : (base & (~std::uint64_t{0} << (pv + 1)));
            }
            cand[pos] = base;
            advanced = true;
            break;
        }
        if (advanced) continue;
        if (pos == 0) return false;
        --pos;
        used &= ~(std::uint64_t{1} << img[pos]);
    }
}

std::optional<std::vector<int>> find_tree_embedding(const Graph& host, const Graph& tree) {
    TreePlan plan = TreePlan::build(tree);
    const int n = plan.order;
    const int hn = host.order();
    if (n > hn) return std::nullopt;

    const int words = host.row_words();
    std::vector<std::uint64_t> used(words, 0);
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(n) * words, 0);
    std::vector<int> img(n, -1);
    std::vector<int> hdeg(hn);
    for (int v = 0; v < hn; ++v) hdeg[v] = host.degree(v);

    auto first_from = [&](std::uint64_t* w, int start) {
        for (int wi = start >> 6; wi < words; ++wi) {
            std::uint64_t masked = w[wi];
            if (wi == start >> 6) masked &= ~std::uint64_t{0} << (start & 63);
            if (masked != 0) return (wi << 6) + std::countr_zero(masked);
        }
        return -1;
    };

    std::vector<int> scan(n, 0);  // next candidate vertex to try at each slot
    for (int wi = 0; wi < words; ++wi) {
        std::uint64_t w = 0;
        for (int b = 0; b < 64; ++b) {
            int v = (wi << 6) + b;
            if (v < hn && hdeg[v] >= plan.tree_degree[0]) w |= std::uint64_t{1} << b;
        }
        cand[static_cast<std::size_t>(wi)] = w;
    }

    int pos = 0;
    while (true) {
        std::uint64_t* cw = cand.data() + static_cast<std::size_t>(pos) * words;
        int v = -1;
        for (int probe = first_from(cw, scan[pos]); probe >= 0;
             probe = first_from(cw, scan[pos])) {
            scan[pos] = probe + 1;
            if (hdeg[probe] >= plan.tree_degree[pos]) {
                v = probe;
                break;
            }
        }
        if (v < 0) {
            if (pos == 0) return std::nullopt;
            --pos;
            used[img[pos] >> 6] &= ~(std::uint64_t{1} << (img[pos] & 63));
            continue;
        }
        img[pos] = v;
        if (pos == n - 1) {
            std::vector<int> result(n, -1);
            for (int s = 0; s < n; ++s) result[plan.slot_vertex[s]] = img[s];
            return result;
        }
        used[v >> 6] |= std::uint64_t{1} << (v & 63);
        ++pos;
        const std::uint64_t* prow = host.row(img[plan.parent_slot[pos]]);
        std::uint64_t* nw = cand.data() + static_cast<std::size_t>(pos) * words;
        for (int wi = 0; wi < words; ++wi) nw[wi] = prow[wi] & ~used[wi];
        int start = 0;
        int prev = plan.same_shape_prev[pos];
        if (prev >= 0) start = img[prev] + 1;
        scan[pos] = start;
    }
}

bool contains_tree(const Graph& host, const Graph& tree) {
    if (tree.order() > host.order()) return false;
    if (host.order() <= 64) {
        TreePlan plan = TreePlan::build(tree);
        std::uint64_t rows[64];
        int deg[64];
        for (int v = 0; v < host.order(); ++v) {
            rows[v] = host.row(v)[0];
            deg[v] = host.degree(v);
        }
        return embeds_small(plan, rows, deg, host.order());
    }
    return find_tree_embedding(host, tree).has_value();
}

}  // namespace treeramsey
