#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeramsey/graph.hpp"
#include "treeramsey/trees.hpp"

namespace treeramsey {

// What a witness graph claims to avoid. Each side is a conjunction of
// concrete trees (checked by embedding search) and/or a structural claim:
// every component must be too small to host a connected graph of the given
// order, or have maximum degree below the given delta (zero = that part of
// the claim is absent). A side with no mechanism at all cannot validate.
struct WitnessClaim {
    std::vector<TreeFamily> left_trees;   // each must be absent from the graph
    long long left_order = 0;             // structural: connected graph order
    long long left_delta = 0;             // structural: required max degree
    std::vector<TreeFamily> right_trees;  // each must be absent from the complement
    long long right_order = 0;
    long long right_delta = 0;
};

// A lower-bound construction: a graph G of order p such that G avoids the
// left side and complement(G) avoids the right side, certifying r > p.
struct Witness {
    Graph graph;
    std::string construction_id;
    std::map<std::string, long long> params;
    WitnessClaim claim;
    long long implied_lower = 0;  // order + 1
    std::string description;      // e.g. "2K5 + K4"
};

// Builds the witness a proof recipe describes. Supported construction ids:
//   trivial      {m, n}          K_{m-1} (m >= n) or the empty graph (n > m)
//   lemma2.3i    {d1, d2}        (d1-1)-regular circulant, order d1+d2-1 or -2
//   lemma2.3ii   {d2, m}         2K_{d2-1}
//   lemma2.3iii  {d1, d2, m}     K_{m-1} u H1 or K_{m-2} u H2 (regular gadget)
//   lemma2.10    {m, x, y}       xK_{m-1} u yK_{m-2}
//   lemma3.1     {n}             2K_{n-3}, right T_n*
//   thm4.1       {m, k}          (k+1)K_{m-1}, right T_n*, n = k(m-1)+3
//   thm4.5       {m, n, k, b}    (2k+b-m)K_{m-2} u (m+2-b-k)K_{m-3}, right T_n*
//   thm5.1       {m, k}          (k+1)K_{m-1}, right T_n', n = k(m-1)+3
//   thm6.1       {m, n, a, q}    (a-2)K_{m-1} u (q-(a-3))K_{m-2}, right star
//   thm6.2       {m, x, y, z}    xK_{m-1} u yK_{m-2} u zK_{m-3,m-3}, left T_m*,
//                                right star
//   prop6.1      {m, k}          (k+1)K_{m-1}, right star, n = k(m-1)+2
// The three degree gadgets additionally accept swap = 1, meaning the recipe
// was derived on the reversed pair: the builder then returns the complement
// with the two claimed sides exchanged.
// The optional tags replace the corresponding side of the default claim with
// one concrete tree ("name:order" grammar). Throws infeasible_error when a
// multiplicity would be negative or an arithmetic side condition fails,
// invalid_argument on missing/inconsistent parameters.
Witness build_witness(const std::string& construction_id,
                      const std::map<std::string, long long>& params,
                      const std::optional<std::string>& left_tag = std::nullopt,
                      const std::optional<std::string>& right_tag = std::nullopt);

struct ValidationReport {
    bool ok = false;
    std::string detail;  // failure reason; empty when ok
    std::string side;    // "left" | "right" on failure
    // The offending embedding (tree vertex -> witness/complement vertex),
    // when the failure was found by search.
    std::optional<std::vector<int>> embedding;
};

// Checks both halves of the claim: the graph must not contain the left side,
// and its complement must not contain the right side. A failed validation is
// a report, not an error.
ValidationReport validate_witness(const Witness& w);

}  // namespace treeramsey
