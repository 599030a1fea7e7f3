#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeramsey/graph.hpp"

namespace treeramsey {

// Caps for the exhaustive searches. Exceeding any cap yields a
// budget-exceeded status, never a wrong answer.
struct SearchBudget {
    int max_order = 8;           // cap on p (Turán) or the candidate N (Ramsey)
    long long max_nodes = -1;    // cap on search nodes; -1 = unlimited
    double max_seconds = 600.0;  // wall-clock cap
    int workers = 0;             // 0 = library default
};

enum class OracleStatus { Exact, BudgetExceeded };

struct OracleResult {
    long long value = -1;  // meaningful only when status == Exact
    OracleStatus status = OracleStatus::Exact;
    long long nodes = 0;
    double seconds = 0.0;
    // Turán: an extremal graph. Ramsey: the red part of a critical coloring
    // of K_{r-1} (its complement within K_{r-1} is the blue part).
    std::optional<Graph> witness;
};

// Exhaustive ex(p; tree): maximum edge count over all graphs on p labeled
// vertices containing no subgraph copy of `tree`. Edge masks are enumerated
// in descending-popcount bands, so the first tree-free mask settles the band.
OracleResult ex_brute(int p, const Graph& tree, const SearchBudget& budget = {});
// Single-threaded variant of the same banded search (reference for the
// parallel kernel, and the benchmark baseline).
OracleResult ex_brute_serial(int p, const Graph& tree, const SearchBudget& budget = {});
// No banding, no early exit: scans all 2^C(p,2) masks. Practical for p <= 6;
// exists to cross-check the pruned kernels.
OracleResult ex_brute_unpruned(int p, const Graph& tree, const SearchBudget& budget = {});

// Exhaustive r(left, right) for trees: smallest N such that every red/blue
// coloring of K_N contains a red `left` or a blue `right`. Backtracking over
// edges with monotone pruning (a partial color class already containing its
// tree kills the branch).
OracleResult ramsey_brute(const Graph& left, const Graph& right,
                          const SearchBudget& budget = {});
OracleResult ramsey_brute_serial(const Graph& left, const Graph& right,
                                 const SearchBudget& budget = {});

// One checked instance of a conjecture scan.
struct ScanRecord {
    std::string conjecture;  // "C2.1" | "C2.2" | "C3.1"
    int n = 0;
    int p = 0;               // 0 for the Ramsey-based scan
    std::string tree;        // graph6
    std::string tree2;       // graph6 of the second tree (C2.2 only)
    long long value = 0;
    long long bound = 0;
    bool pass = false;
    bool budget_exceeded = false;  // value/pass not meaningful when set
};

// Evaluates one conjecture over all eligible trees of order n:
//   C2.1: every tree except the star and the broom has ex(p;T) <= ex(p;T_n*),
//         checked for n <= p <= p_max.
//   C2.2: alpha2(T1) < alpha2(T2) implies ex(p;T1) <= ex(p;T2), over all
//         ordered pairs, n <= p <= p_max.
//   C3.1: every tree except the star has r(T, T_n*) = 2n-5 (p_max ignored).
// Failures are reported as records with pass = false, never suppressed.
std::vector<ScanRecord> scan_conjecture(const std::string& which, int n, int p_max,
                                        const SearchBudget& budget = {});

}  // namespace treeramsey
