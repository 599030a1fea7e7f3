#include "treeramsey/witness.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "treeramsey/embedding.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/graph_expr.hpp"

namespace treeramsey {

namespace {

long long need(const std::map<std::string, long long>& params, const std::string& key,
               const std::string& id) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("build_witness(" + id + "): missing parameter '" +
                                    key + "'");
    return it->second;
}

void require_nonneg(long long v, const std::string& what, const std::string& id) {
    if (v < 0)
        throw infeasible_error("build_witness(" + id + "): " + what + " = " +
                               std::to_string(v) + " is negative");
}

GraphExpr clique_union(std::vector<std::pair<long long, long long>> blocks) {
    // blocks: (count, clique order); zero counts are dropped.
    std::vector<GraphExpr> parts;
    for (auto [count, order] : blocks) {
        if (count == 0) continue;
        parts.push_back(GraphExpr::copies(static_cast<int>(count),
                                          GraphExpr::complete(static_cast<int>(order))));
    }
    if (parts.empty()) parts.push_back(GraphExpr::copies(0, GraphExpr::complete(1)));
    return GraphExpr::disjoint_union(std::move(parts));
}

Witness finish(const std::string& id, const std::map<std::string, long long>& params,
               const GraphExpr& expr, WitnessClaim claim) {
    Witness w;
    w.graph = expr.eval();
    w.construction_id = id;
    w.params = params;
    w.claim = std::move(claim);
    w.implied_lower = w.graph.order() + 1;
    w.description = expr.describe();
    return w;
}

}  // namespace

Witness build_witness(const std::string& id,
                      const std::map<std::string, long long>& params,
                      const std::optional<std::string>& left_tag,
                      const std::optional<std::string>& right_tag) {
    WitnessClaim claim;
    std::optional<GraphExpr> expr;
    std::optional<Graph> direct;  // for gadgets not expressible as GraphExpr
    std::string description;
    // The degree constructions are symmetric in the pair: swap = 1 presents
    // the complement with the two claimed sides exchanged.
    bool swap_sides = params.count("swap") != 0 && params.at("swap") != 0;
    if (swap_sides && id != "lemma2.3i" && id != "lemma2.3ii" && id != "lemma2.3iii")
        throw std::invalid_argument("build_witness(" + id +
                                    "): 'swap' only applies to the degree gadgets");

    if (id == "trivial") {
        long long m = need(params, "m", id), n = need(params, "n", id);
        if (m < 2 || n < 2)
            throw infeasible_error("build_witness(trivial): both orders must be >= 2");
        claim.left_order = m;
        claim.right_order = n;
        if (m >= n)
            expr = GraphExpr::complete(static_cast<int>(m - 1));
        else
            expr = GraphExpr::complement(GraphExpr::complete(static_cast<int>(n - 1)));
    } else if (id == "lemma2.3i") {
        long long d1 = need(params, "d1", id), d2 = need(params, "d2", id);
        if (d1 < 2 || d2 < 2)
            throw infeasible_error("build_witness(lemma2.3i): degrees must be >= 2");
        bool odd = ((d1 - 1) * (d2 - 1)) % 2 != 0;
        long long order = d1 + d2 - 1 - (odd ? 1 : 0);
        direct = circulant_regular(static_cast<int>(order), static_cast<int>(d1 - 1));
        description = std::to_string(d1 - 1) + "-regular circulant on " +
                      std::to_string(order) + " vertices";
        claim.left_delta = d1;
        claim.right_delta = d2;
    } else if (id == "lemma2.3ii") {
        long long d2 = need(params, "d2", id), m = need(params, "m", id);
        if (d2 < 2)
            throw infeasible_error("build_witness(lemma2.3ii): d2 must be >= 2");
        if (d2 > m)
            throw infeasible_error("build_witness(lemma2.3ii): needs d2 <= m");
        expr = clique_union({{2, d2 - 1}});
        claim.left_order = m;
        claim.right_delta = d2;
    } else if (id == "lemma2.3iii") {
        long long d1 = need(params, "d1", id), d2 = need(params, "d2", id);
        long long m = need(params, "m", id);
        if (d1 < 2 || d2 < 2)
            throw infeasible_error("build_witness(lemma2.3iii): degrees must be >= 2");
        if (d2 <= m) throw infeasible_error("build_witness(lemma2.3iii): needs d2 > m");
        if (d1 > m - 1)
            throw infeasible_error(
                "build_witness(lemma2.3iii): a connected order-m graph has max degree "
                "at most m-1");
        bool even = (d1 + d2 - m) % 2 == 0;
        long long clique = even ? m - 1 : m - 2;
        long long gadget_order = d1 + d2 - m + (even ? 0 : 1);
        Graph h = circulant_regular(static_cast<int>(gadget_order),
                                    static_cast<int>(d1 - 1));
        std::vector<Graph> parts{Graph::complete(static_cast<int>(clique)), h};
        direct = disjoint_union(parts);
        description = "K" + std::to_string(clique) + " + " + std::to_string(d1 - 1) +
                      "-regular gadget on " + std::to_string(gadget_order) + " vertices";
        claim.left_order = m;
        claim.left_delta = d1;
        claim.right_delta = d2;
    } else if (id == "lemma2.10") {
        long long m = need(params, "m", id);
        long long x = need(params, "x", id), y = need(params, "y", id);
        require_nonneg(x, "x", id);
        require_nonneg(y, "y", id);
        if (m < 4) throw infeasible_error("build_witness(lemma2.10): needs m >= 4");
        expr = clique_union({{x, m - 1}, {y, m - 2}});
        claim.left_order = m;
        int n = static_cast<int>(x * (m - 1) + y * (m - 2) - m + 5);
        if (n >= 5) {
            // The lemma's claim covers all three high-degree families at once;
            // the double-broom case genuinely needs the embedding search.
            claim.right_trees.push_back(TreeFamily::make(FamilyKind::Star, n));
            claim.right_trees.push_back(TreeFamily::make(FamilyKind::TPrime, n));
            claim.right_trees.push_back(TreeFamily::make(FamilyKind::TStar, n));
        } else {
            throw infeasible_error("build_witness(lemma2.10): implied n < 5");
        }
    } else if (id == "lemma3.1") {
        long long n = need(params, "n", id);
        if (n < 6) throw infeasible_error("build_witness(lemma3.1): needs n >= 6");
        expr = clique_union({{2, n - 3}});
        claim.left_order = n;
        claim.right_trees.push_back(TreeFamily::make(FamilyKind::TStar, static_cast<int>(n)));
    } else if (id == "thm4.1" || id == "thm5.1" || id == "prop6.1") {
        long long m = need(params, "m", id), k = need(params, "k", id);
        require_nonneg(k, "k", id);
        long long min_m = id == "prop6.1" ? 3 : 5;
        if (m < min_m)
            throw infeasible_error("build_witness(" + id + "): needs m >= " +
                                   std::to_string(min_m));
        expr = clique_union({{k + 1, m - 1}});
        claim.left_order = m;
        int n = static_cast<int>(k * (m - 1) + (id == "prop6.1" ? 2 : 3));
        if (id == "thm4.1")
            claim.right_trees.push_back(TreeFamily::make(FamilyKind::TStar, n));
        else if (id == "thm5.1")
            claim.right_trees.push_back(TreeFamily::make(FamilyKind::TPrime, n));
        else
            claim.right_trees.push_back(TreeFamily::make(FamilyKind::Star, n));
    } else if (id == "thm4.5") {
        long long m = need(params, "m", id), n = need(params, "n", id);
        long long k = need(params, "k", id), b = need(params, "b", id);
        if (m < 5) throw infeasible_error("build_witness(thm4.5): needs m >= 5");
        if (n != k * (m - 1) + b || b < 0 || b >= m - 1)
            throw std::invalid_argument(
                "build_witness(thm4.5): need n = k(m-1)+b with 0 <= b < m-1");
        long long x = 2 * k + b - m, y = m + 2 - b - k;
        require_nonneg(x, "2k+b-m", id);
        require_nonneg(y, "m+2-b-k", id);
        expr = clique_union({{x, m - 2}, {y, m - 3}});
        claim.left_order = m;
        claim.right_trees.push_back(TreeFamily::make(FamilyKind::TStar, static_cast<int>(n)));
        if (x * (m - 2) + y * (m - 3) != m + n - 6)
            throw std::logic_error("build_witness(thm4.5): order mismatch");
    } else if (id == "thm6.1") {
        long long m = need(params, "m", id), n = need(params, "n", id);
        long long a = need(params, "a", id), q = need(params, "q", id);
        if (m < 5) throw infeasible_error("build_witness(thm6.1): needs m >= 5");
        if (n != q * (m - 2) + a || a < 2 || a > m - 3)
            throw std::invalid_argument(
                "build_witness(thm6.1): need n = q(m-2)+a with 2 <= a <= m-3");
        require_nonneg(a - 2, "a-2", id);
        require_nonneg(q - (a - 3), "q-(a-3)", id);
        expr = clique_union({{a - 2, m - 1}, {q - (a - 3), m - 2}});
        claim.left_order = m;
        claim.right_trees.push_back(TreeFamily::make(FamilyKind::Star, static_cast<int>(n)));
        if ((a - 2) * (m - 1) + (q - a + 3) * (m - 2) != m + n - 4)
            throw std::logic_error("build_witness(thm6.1): order mismatch");
    } else if (id == "thm6.2") {
        long long m = need(params, "m", id);
        long long x = need(params, "x", id), y = need(params, "y", id);
        long long z = need(params, "z", id);
        require_nonneg(x, "x", id);
        require_nonneg(y, "y", id);
        require_nonneg(z, "z", id);
        if (m < 6) throw infeasible_error("build_witness(thm6.2): needs m >= 6");
        std::vector<GraphExpr> parts;
        if (x > 0)
            parts.push_back(GraphExpr::copies(static_cast<int>(x),
                                              GraphExpr::complete(static_cast<int>(m - 1))));
        if (y > 0)
            parts.push_back(GraphExpr::copies(static_cast<int>(y),
                                              GraphExpr::complete(static_cast<int>(m - 2))));
        if (z > 0)
            parts.push_back(GraphExpr::copies(
                static_cast<int>(z), GraphExpr::complete_bipartite(
                                         static_cast<int>(m - 3), static_cast<int>(m - 3))));
        if (parts.empty())
            throw infeasible_error("build_witness(thm6.2): empty construction");
        expr = GraphExpr::disjoint_union(std::move(parts));
        long long order = x * (m - 1) + y * (m - 2) + 2 * z * (m - 3);
        claim.left_trees.push_back(TreeFamily::make(FamilyKind::TStar, static_cast<int>(m)));
        claim.right_trees.push_back(
            TreeFamily::make(FamilyKind::Star, static_cast<int>(order - m + 4)));
    } else {
        throw std::invalid_argument("build_witness: unknown construction id '" + id + "'");
    }

    if (swap_sides) {
        if (expr) {
            direct = expr->eval();
            description = expr->describe();
            expr.reset();
        }
        direct = direct->complement();
        description = "complement of " + description;
        std::swap(claim.left_trees, claim.right_trees);
        std::swap(claim.left_order, claim.right_order);
        std::swap(claim.left_delta, claim.right_delta);
    }

    if (left_tag) {
        claim.left_trees.clear();
        claim.left_order = 0;
        claim.left_delta = 0;
        claim.left_trees.push_back(TreeFamily::parse(*left_tag));
    }
    if (right_tag) {
        claim.right_trees.clear();
        claim.right_order = 0;
        claim.right_delta = 0;
        claim.right_trees.push_back(TreeFamily::parse(*right_tag));
    }

    if (expr) return finish(id, params, *expr, std::move(claim));
    Witness w;
    w.graph = std::move(*direct);
    w.construction_id = id;
    w.params = params;
    w.claim = std::move(claim);
    w.implied_lower = w.graph.order() + 1;
    w.description = std::move(description);
    return w;
}

namespace {

// Structural avoidance: no component is both large enough and (when a degree
// threshold is part of the claim) rich enough in degree to host the side.
bool structurally_avoids(const Graph& g, const std::vector<std::vector<int>>& comps,
                         long long order, long long delta, std::string* why) {
    for (const auto& comp : comps) {
        bool small = order > 0 && static_cast<long long>(comp.size()) < order;
        bool low = false;
        if (delta > 0) {
            long long best = 0;
            for (int v : comp) best = std::max<long long>(best, g.degree(v));
            low = best < delta;
        }
        if (!small && !low) {
            if (why)
                *why = "component of order " + std::to_string(comp.size()) +
                       " admits the claimed side";
            return false;
        }
    }
    return true;
}

}  // namespace

namespace {

// Checks one half of the claim against `host` (the witness graph for the
// left side, its complement for the right side). Returns false and fills
// `rep` on the first violation.
bool check_side(const Graph& host, const std::vector<TreeFamily>& trees,
                long long order, long long delta, const char* side,
                const char* host_name, ValidationReport& rep) {
    if (trees.empty() && order == 0 && delta == 0) {
        rep.detail = std::string("claim has no ") + side + " side";
        rep.side = side;
        return false;
    }
    for (const TreeFamily& f : trees) {
        if (auto emb = find_tree_embedding(host, f.realize())) {
            rep.detail = std::string(host_name) + " contains " + f.tag();
            rep.side = side;
            rep.embedding = std::move(emb);
            return false;
        }
    }
    if (order > 0 || delta > 0) {
        std::string why;
        if (!structurally_avoids(host, host.components(), order, delta, &why)) {
            rep.detail = std::string(side) + " side: " + why;
            rep.side = side;
            return false;
        }
    }
    return true;
}

}  // namespace

ValidationReport validate_witness(const Witness& w) {
    ValidationReport rep;
    if (w.graph.order() < 1) {
        rep.detail = "witness graph is empty";
        rep.side = "left";
        return rep;
    }
    if (!check_side(w.graph, w.claim.left_trees, w.claim.left_order, w.claim.left_delta,
                    "left", "witness", rep))
        return rep;
    Graph co = w.graph.complement();
    if (!check_side(co, w.claim.right_trees, w.claim.right_order, w.claim.right_delta,
                    "right", "complement", rep))
        return rep;
    rep.ok = true;
    return rep;
}

}  // namespace treeramsey
