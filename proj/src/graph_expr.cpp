#include "treeramsey/graph_expr.hpp"

#include <sstream>
#include <stdexcept>

#include "treeramsey/errors.hpp"

namespace treeramsey {

Graph circulant_regular(int p, int k) {
    if (p < 0 || k < 0) throw std::invalid_argument("circulant: negative parameter");
    if (k >= p && !(k == 0 && p >= 0))
        throw std::invalid_argument("circulant: degree must be below the order");
    if ((static_cast<long long>(k) * p) % 2 != 0)
        throw parity_error("circulant: k*p must be even for a k-regular graph");
    std::vector<std::pair<int, int>> edges;
    for (int offset = 1; offset <= k / 2; ++offset)
        for (int v = 0; v < p; ++v) edges.emplace_back(v, (v + offset) % p);
    if (k % 2 == 1) {
        // odd degree: p is even here, add the diameter chords once
        for (int v = 0; v < p / 2; ++v) edges.emplace_back(v, v + p / 2);
    }
    return Graph::from_edges(p, edges);
}

GraphExpr GraphExpr::complete(int n) {
    GraphExpr e(Kind::Complete);
    e.a_ = n;
    return e;
}

GraphExpr GraphExpr::complete_bipartite(int a, int b) {
    GraphExpr e(Kind::CompleteBipartite);
    e.a_ = a;
    e.b_ = b;
    return e;
}

GraphExpr GraphExpr::circulant(int p, int k) {
    GraphExpr e(Kind::Circulant);
    e.a_ = p;
    e.b_ = k;
    return e;
}

GraphExpr GraphExpr::disjoint_union(std::vector<GraphExpr> parts) {
    GraphExpr e(Kind::Union);
    e.parts_ = std::move(parts);
    return e;
}

GraphExpr GraphExpr::complement(GraphExpr inner) {
    GraphExpr e(Kind::Complement);
    e.inner_ = std::make_shared<const GraphExpr>(std::move(inner));
    return e;
}

GraphExpr GraphExpr::copies(int count, GraphExpr inner) {
    if (count < 0) throw std::invalid_argument("copies: negative count");
    GraphExpr e(Kind::Copies);
    e.a_ = count;
    e.inner_ = std::make_shared<const GraphExpr>(std::move(inner));
    return e;
}

long long GraphExpr::order() const {
    switch (kind_) {
        case Kind::Complete: return a_;
        case Kind::CompleteBipartite: return a_ + b_;
        case Kind::Circulant: return a_;
        case Kind::Complement: return inner_->order();
        case Kind::Copies: return a_ * inner_->order();
        case Kind::Union: {
            long long total = 0;
            for (const GraphExpr& p : parts_) total += p.order();
            return total;
        }
    }
    return 0;
}

Graph GraphExpr::eval() const {
    if (order() > Graph::kMaxOrder) throw capacity_error("graph expression exceeds supported order");
    switch (kind_) {
        case Kind::Complete: return Graph::complete(static_cast<int>(a_));
        case Kind::CompleteBipartite:
            return Graph::complete_bipartite(static_cast<int>(a_), static_cast<int>(b_));
        case Kind::Circulant: return circulant_regular(static_cast<int>(a_), static_cast<int>(b_));
        case Kind::Complement: return inner_->eval().complement();
        case Kind::Copies: {
            std::vector<Graph> parts(static_cast<std::size_t>(a_), inner_->eval());
            return treeramsey::disjoint_union(parts);
        }
        case Kind::Union: {
            std::vector<Graph> parts;
            parts.reserve(parts_.size());
            for (const GraphExpr& p : parts_) parts.push_back(p.eval());
            return treeramsey::disjoint_union(parts);
        }
    }
    return Graph();
}

std::string GraphExpr::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::Complete: out << "K" << a_; break;
        case Kind::CompleteBipartite: out << "K{" << a_ << "," << b_ << "}"; break;
        case Kind::Circulant: out << "C(" << a_ << ";" << b_ << "-regular)"; break;
        case Kind::Complement: out << "~(" << inner_->describe() << ")"; break;
        case Kind::Copies: out << a_ << "*(" << inner_->describe() << ")"; break;
        case Kind::Union: {
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) out << " + ";
                out << parts_[i].describe();
            }
            break;
        }
    }
    return out.str();
}

}  // namespace treeramsey
