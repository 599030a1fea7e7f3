#pragma once

#include <memory>
#include <string>
#include <vector>

#include "treeramsey/graph.hpp"

namespace treeramsey {

// Symbolic description of the structured graphs the library builds: cliques,
// complete bipartite blocks, disjoint unions, complements, circulants and
// repeated copies. eval() materializes the description as a Graph.
class GraphExpr {
public:
    static GraphExpr complete(int n);
    static GraphExpr complete_bipartite(int a, int b);
    static GraphExpr circulant(int p, int k);
    static GraphExpr disjoint_union(std::vector<GraphExpr> parts);
    static GraphExpr complement(GraphExpr inner);
    static GraphExpr copies(int count, GraphExpr inner);

    Graph eval() const;
    long long order() const;
    std::string describe() const;  // e.g. "2K5 + K4"

private:
    enum class Kind { Complete, CompleteBipartite, Circulant, Union, Complement, Copies };

    GraphExpr(Kind kind) : kind_(kind) {}

    Kind kind_;
    long long a_ = 0, b_ = 0;
    std::vector<GraphExpr> parts_;
    std::shared_ptr<const GraphExpr> inner_;
};

// k-regular circulant graph on p vertices: each vertex is joined to the k/2
// nearest vertices on either side of the cycle, plus its antipode when k is
// odd (which forces p to be even). Exists exactly when p >= k+1 and 2 | k*p;
// otherwise throws parity_error / std::invalid_argument.
Graph circulant_regular(int p, int k);

}  // namespace treeramsey
