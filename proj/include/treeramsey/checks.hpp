#pragma once

#include <string>
#include <vector>

#include "treeramsey/oracle.hpp"

namespace treeramsey {

// Outcome of one verification suite. A suite that checked nothing counts as
// failed; `details` keeps the first few failure descriptions.
struct CheckResult {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> details;
    bool passed() const { return failures == 0 && checked > 0; }
    void fail(const std::string& what) {
        ++failures;
        if (details.size() < 20) details.push_back(what);
    }
};

// Closed forms vs the exhaustive oracle: every named family with order
// n_min <= n <= n_max, every n <= p <= p_max.
CheckResult check_formula_vs_oracle(int n_min, int n_max, int p_max,
                                    const SearchBudget& budget = {});

// Arithmetic invariants of the closed forms over n <= n_max, p <= p_max:
// the path value is a lower bound, the generic cap an upper bound, values
// are nondecreasing in p, and the generic-bounds record brackets the formula.
CheckResult check_turan_invariants(int n_max, int p_max);

// The extremal clique unions attain the path formula exactly and avoid the
// path (checked by embedding for n <= n_max, p <= p_max).
CheckResult check_construction_attainment(int n_max, int p_max);

// Dispatcher grid over all named-family pairs with orders <= cap:
// lower <= upper everywhere, and the closed-form equations for star/star,
// broom/broom, star/broom, star/double-broom, the 2n-5 diagonal, and the
// threshold family are reproduced verbatim where their hypotheses hold.
CheckResult check_ramsey_grid(int cap);

// Internal consistency on the same grid: every exact value is >= the degree
// lower bound and <= every counting upper bound that fires.
CheckResult check_ramsey_consistency(int cap);

// Builds and validates every witness recipe the dispatcher emits on the grid
// 5 <= m <= m_max, m < n <= n_max (all family pairs), passing the concrete
// sides of the query as the claim.
CheckResult check_witness_grid(int m_max, int n_max);

// Every exact dispatcher value <= value_cap is confirmed by the brute-force
// Ramsey oracle (orders <= order_cap on both sides).
CheckResult check_ramsey_vs_oracle(int order_cap, int value_cap,
                                   const SearchBudget& budget = {});

}  // namespace treeramsey
