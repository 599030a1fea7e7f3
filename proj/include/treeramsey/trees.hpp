#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeramsey/graph.hpp"

namespace treeramsey {

// The named tree families the closed formulas cover, plus explicit trees
// given directly as graphs.
//
//   Path   P_n:  the path on n vertices (n >= 2).
//   Star   S_n:  K_{1,n-1}, one center adjacent to n-1 leaves (n >= 2).
//   TPrime T'_n: a star K_{1,n-2} with one edge subdivided, i.e. a spider
//                with legs (2, 1, 1, ..., 1); unique tree of order n with
//                n-3 leaves at distance 1 and one leaf at distance 2 (n >= 4).
//   TStar  T*_n: a star K_{1,n-3} with one edge subdivided twice, i.e. legs
//                (3, 1, 1, ..., 1) (n >= 5).
enum class FamilyKind { Path, Star, TPrime, TStar, Explicit };

class TreeFamily {
  public:
    // tag forms: "path:N", "star:N", "tprime:N", "tstar:N", "g6:<graph6>",
    // or a bare graph6 string (which must decode to a tree).
    static TreeFamily parse(const std::string& tag);
    static TreeFamily make(FamilyKind kind, int order);
    static TreeFamily explicit_tree(const Graph& tree);

    FamilyKind kind() const { return kind_; }
    int order() const { return order_; }
    std::string tag() const;

    // Concrete labeled representative of the family member.
    Graph realize() const;

  private:
    TreeFamily(FamilyKind kind, int order, Graph tree)
        : kind_(kind), order_(order), tree_(std::move(tree)) {}
    FamilyKind kind_;
    int order_;
    Graph tree_;  // stored representative (always populated)
};

// ---- structural helpers on trees -------------------------------------------

// Sizes of the two color classes of the (unique) bipartition, larger first.
std::pair<int, int> bipartition_sizes(const Graph& tree);

// alpha_2: the larger color-class size, i.e. the maximum number of vertices
// that pairwise have even distance.
int alpha2(const Graph& tree);

// True if some maximum-degree vertex has another vertex at distance exactly 3.
bool has_max_degree_vertex_at_distance3(const Graph& tree);

// Canonical form; two trees are isomorphic iff their strings are equal.
std::string tree_canonical_form(const Graph& tree);
bool trees_isomorphic(const Graph& a, const Graph& b);

// If the tree is isomorphic to a named family member, return that family;
// otherwise return an Explicit family wrapping the tree.
TreeFamily classify_tree(const Graph& tree);

// All unlabeled trees on n vertices (1 <= n <= 10), one representative per
// isomorphism class, in a fixed deterministic order. Throws capacity_error
// for n > 10.
std::vector<Graph> enumerate_trees(int n);

}  // namespace treeramsey
