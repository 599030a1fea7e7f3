#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeramsey/graph.hpp"

namespace treeramsey {

// Precomputed search order for embedding one fixed tree into many hosts.
// Slots are tree vertices in breadth-first order from a maximum-degree root;
// each non-root slot remembers its parent slot. Runs of sibling slots whose
// hanging subtrees have identical shape carry an ordering constraint (each
// must map to a larger host vertex than the previous one), which removes the
// factorial blowup on stars and brooms without losing any embedding.
struct TreePlan {
    int order = 0;
    std::vector<int> slot_vertex;   // tree vertex placed at each slot
    std::vector<int> parent_slot;   // -1 for the root slot
    std::vector<int> tree_degree;   // degree (in the tree) of the slot's vertex
    std::vector<int> same_shape_prev;  // previous identical sibling slot, or -1

    static TreePlan build(const Graph& tree);
};

// Fast path for hosts on at most 64 vertices given as raw bit rows.
bool embeds_small(const TreePlan& plan, const std::uint64_t* rows, const int* host_degree,
                  int host_order);

// Subgraph test: does host contain a (not necessarily induced) copy of tree?
// The tree argument must be a tree; the embedding returned by
// find_tree_embedding maps each tree vertex to its host image.
bool contains_tree(const Graph& host, const Graph& tree);
std::optional<std::vector<int>> find_tree_embedding(const Graph& host, const Graph& tree);

}  // namespace treeramsey
