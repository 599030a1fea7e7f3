#pragma once

#include <string>

#include "treeramsey/graph.hpp"
#include "treeramsey/trees.hpp"

namespace treeramsey {

// p = k*(n-1) + r with 0 <= r <= n-2 (division by n-1; n is the tree order).
struct Decomposition {
    int k;
    int r;
};
Decomposition decompose(int p, int n);

// Result of a closed-form extremal-number evaluation. `branch` names the case
// of the formula that fired; `citation` is the statement id backing it.
struct ExtremalValue {
    long long edges;
    std::string branch;
    std::string citation;
};

// Maximum edge counts of graphs on p vertices containing no copy of the tree.
ExtremalValue ex_path(int p, int n);    // no P_n;  p >= n >= 2
ExtremalValue ex_star(int p, int n);    // no K_{1,n-1};  p >= n-1, n >= 2
ExtremalValue ex_tprime(int p, int n);  // no T_n';  p >= n >= 5
ExtremalValue ex_tstar(int p, int n);   // no T_n*;  p >= n >= 6

// Dispatch on the family kind. The degenerate members T_4' (= P_4) and
// T_5* (= P_5) sit outside the closed forms' validity ranges and throw, as
// do Explicit families; use ex_generic_bounds or the oracle for those.
ExtremalValue ex_formula(const TreeFamily& family, int p);

// Upper bound floor((m-2)p/2) for the four named families of order m >= 5;
// the sharper floor((m-2)(p-1)/2) applies when m-1 does not divide p and the
// family is a path, T', or T* member.
ExtremalValue ex_tree_upper(int m, int p, bool path_tprime_tstar);

// Sandwich for a named family member: the clique-union construction value
// below, the general cap above. This is the only exact-value route for
// TStar(5), where the two sides coincide for every p.
struct ExBounds {
    long long lower;
    long long upper;
    std::string lower_citation;
    std::string upper_citation;
};
ExBounds ex_generic_bounds(const TreeFamily& family, int p);  // p >= order >= 5

}  // namespace treeramsey
