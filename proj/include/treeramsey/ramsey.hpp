#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeramsey/graph.hpp"
#include "treeramsey/trees.hpp"

namespace treeramsey {

// Nonnegative solution of n = ax + by (smallest x first), if any.
std::optional<std::pair<long long, long long>> frobenius_rep(long long a, long long b,
                                                             long long n);

// Nonnegative solution of n = ax + by + cz (smallest z, then smallest x), if any.
struct Rep3 {
    long long x, y, z;
};
std::optional<Rep3> frobenius_rep3(long long a, long long b, long long c, long long n);

// Best lower bound from the degree constructions: d1, d2 are the maximum
// degrees of the two sides (both >= 2), m the order of the connected left
// graph, has_dist3 whether the right graph has a maximum-degree vertex with
// another vertex at distance exactly 3.
long long degree_lower_bound(long long d1, long long d2, long long m, bool has_dist3);

// p itself when ex1 + ex2 < C(p,2), i.e. when the counting argument forces
// every 2-coloring of K_p to contain one of the two sides.
std::optional<long long> counting_upper_bound(long long ex1, long long ex2, long long p);

// m+n-4 when m+n-5 is representable as (m-1)x + (m-2)y (clique-union witness).
std::optional<long long> clique_union_lower(int m, int n);

// How a witness graph for a lower bound is to be rebuilt: a construction id
// understood by the witness module plus its integer parameters.
struct WitnessRecipe {
    std::string construction_id;
    std::map<std::string, long long> params;
};

// One statement application contributing to a Ramsey result.
struct ProvenanceEntry {
    std::string id;        // statement id from the citation catalog
    std::string quote;     // the statement text
    std::string role;      // "lower" | "upper" | "exact" | "note"
    long long value = 0;   // the bound contributed (0 for pure notes)
    std::map<std::string, long long> params;
    std::optional<WitnessRecipe> witness;
};

struct RamseyBounds {
    std::string left;   // tag of the left side as analyzed
    std::string right;  // tag of the right side as analyzed
    long long lower = 0;
    std::optional<long long> upper;  // absent when no statement caps the value
    bool exact() const { return upper.has_value() && *upper == lower; }
    std::vector<ProvenanceEntry> provenance;
    std::string note;  // set when the result is not exact
};

// Bounds/exact value for a pair of tree families, with full provenance.
// Explicit trees isomorphic to a named family are normalized to it first;
// genuinely unnamed trees get only the statements valid for arbitrary trees.
RamseyBounds ramsey_bounds(const TreeFamily& left, const TreeFamily& right);

// Advanced entry: arbitrary connected left graph plus caller-certified upper
// bounds on ex(p; left). Certificates with left a tree and p small enough are
// verified against the brute-force oracle; larger ones are trusted and marked
// so in the provenance.
struct CertifiedExBound {
    int p;
    long long bound;
};
RamseyBounds ramsey_bounds_general(const Graph& left, const TreeFamily& right,
                                   std::span<const CertifiedExBound> certs = {});

}  // namespace treeramsey
