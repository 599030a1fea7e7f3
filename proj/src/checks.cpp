#include "treeramsey/checks.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "treeramsey/embedding.hpp"
#include "treeramsey/graph_expr.hpp"
#include "treeramsey/ramsey.hpp"
#include "treeramsey/trees.hpp"
#include "treeramsey/turan.hpp"
#include "treeramsey/witness.hpp"

namespace treeramsey {

namespace {

const std::vector<FamilyKind> kNamedKinds{FamilyKind::Path, FamilyKind::Star,
                                          FamilyKind::TPrime, FamilyKind::TStar};

int family_min_order(FamilyKind k) {
    switch (k) {
        case FamilyKind::Path: return 2;
        case FamilyKind::Star: return 2;
        case FamilyKind::TPrime: return 4;
        case FamilyKind::TStar: return 5;
        default: return 1;
    }
}

// Smallest order at which the family's own closed form is defined (the
// aliases T'_4 = P_4 and T*_5 = P_5 have no formula of their own).
int formula_min_order(FamilyKind k) {
    switch (k) {
        case FamilyKind::Path: return 3;
        case FamilyKind::Star: return 2;
        case FamilyKind::TPrime: return 5;
        case FamilyKind::TStar: return 6;
        default: return 1;
    }
}

std::vector<TreeFamily> families_of_order(int n) {
    std::vector<TreeFamily> out;
    for (FamilyKind k : kNamedKinds)
        if (n >= family_min_order(k)) out.push_back(TreeFamily::make(k, n));
    return out;
}

std::string pair_tag(const TreeFamily& a, const TreeFamily& b) {
    return "(" + a.tag() + ", " + b.tag() + ")";
}

}  // namespace

CheckResult check_formula_vs_oracle(int n_min, int n_max, int p_max,
                                    const SearchBudget& budget) {
    CheckResult res;
    res.name = "formula-vs-oracle";
    for (FamilyKind k : kNamedKinds) {
        for (int n = std::max(n_min, formula_min_order(k)); n <= n_max; ++n) {
            TreeFamily f = TreeFamily::make(k, n);
            Graph tree = f.realize();
            for (int p = n; p <= p_max; ++p) {
                ++res.checked;
                long long expect = ex_formula(f, p).edges;
                OracleResult got = ex_brute(p, tree, budget);
                if (got.status != OracleStatus::Exact)
                    res.fail("ex_brute budget exceeded at " + f.tag() +
                             " p=" + std::to_string(p));
                else if (got.value != expect)
                    res.fail("ex mismatch at " + f.tag() + " p=" + std::to_string(p) +
                             ": formula " + std::to_string(expect) + ", oracle " +
                             std::to_string(got.value));
            }
        }
    }
    return res;
}

CheckResult check_turan_invariants(int n_max, int p_max) {
    CheckResult res;
    res.name = "turan-invariants";
    for (FamilyKind k : kNamedKinds) {
        for (int n = formula_min_order(k); n <= n_max; ++n) {
            TreeFamily f = TreeFamily::make(k, n);
            long long prev = -1;
            for (int p = n; p <= p_max; ++p) {
                ++res.checked;
                long long v = ex_formula(f, p).edges;
                if (k != FamilyKind::Star && n >= 3) {
                    long long path_v = ex_path(p, n).edges;
                    if (v < path_v)
                        res.fail(f.tag() + " p=" + std::to_string(p) +
                                 ": below the clique-union lower bound");
                }
                if (2 * v > static_cast<long long>(n - 2) * p)
                    res.fail(f.tag() + " p=" + std::to_string(p) +
                             ": above the (n-2)p/2 cap");
                if (v < prev)
                    res.fail(f.tag() + " p=" + std::to_string(p) +
                             ": not monotone in p");
                prev = v;
                if (n >= 5 && k != FamilyKind::Star) {
                    ExBounds b = ex_generic_bounds(f, p);
                    if (v < b.lower || v > b.upper)
                        res.fail(f.tag() + " p=" + std::to_string(p) +
                                 ": outside the generic sandwich");
                }
            }
        }
    }
    return res;
}

CheckResult check_construction_attainment(int n_max, int p_max) {
    CheckResult res;
    res.name = "construction-attainment";
    for (int n = 3; n <= n_max; ++n) {
        Graph path = TreeFamily::make(FamilyKind::Path, n).realize();
        for (int p = n; p <= p_max; ++p) {
            ++res.checked;
            Decomposition d = decompose(p, n);
            std::vector<GraphExpr> parts;
            if (d.k > 0)
                parts.push_back(GraphExpr::copies(static_cast<int>(d.k),
                                                  GraphExpr::complete(n - 1)));
            if (d.r > 0) parts.push_back(GraphExpr::complete(static_cast<int>(d.r)));
            Graph g = parts.empty() ? Graph::from_edges(0, {})
                                    : GraphExpr::disjoint_union(parts).eval();
            long long expect = ex_path(p, n).edges;
            if (g.order() != p || g.edge_count() != expect)
                res.fail("kK_{n-1} u K_r at n=" + std::to_string(n) +
                         " p=" + std::to_string(p) + ": wrong size");
            else if (contains_tree(g, path))
                res.fail("kK_{n-1} u K_r at n=" + std::to_string(n) +
                         " p=" + std::to_string(p) + ": contains the path");
        }
    }
    return res;
}

namespace {

// The closed-form value an equation predicts for the pair, when its
// hypotheses hold. Returns nothing otherwise.
std::optional<long long> pinned_value(const TreeFamily& L, const TreeFamily& R) {
    FamilyKind lk = L.kind(), rk = R.kind();
    int m = L.order(), n = R.order();

    if (lk == FamilyKind::Star && rk == FamilyKind::Star && m >= 3 && n >= 3)
        return (m % 2 && n % 2) ? m + n - 3 : m + n - 2;

    if (lk == FamilyKind::TPrime && rk == FamilyKind::TPrime) {
        int lo = std::min(m, n), hi = std::max(m, n);
        if (lo >= 5) {
            if ((hi - 3) % (lo - 1) == 0) return lo + hi - 3;
            if (lo == hi && lo % 2 == 0) return lo + hi - 5;
            return lo + hi - 4;
        }
    }

    auto star_vs_broom = [](int sm, int bn) -> std::optional<long long> {
        if (bn > sm && sm >= 4 && bn >= 5)
            return (sm * (bn - 1)) % 2 == 0 ? sm + bn - 3 : sm + bn - 4;
        return std::nullopt;
    };
    if (lk == FamilyKind::Star && rk == FamilyKind::TPrime) return star_vs_broom(m, n);
    if (lk == FamilyKind::TPrime && rk == FamilyKind::Star) return star_vs_broom(n, m);

    auto star_vs_dbroom = [](int sm, int dn) -> std::optional<long long> {
        if (dn > sm && sm >= 7 && dn >= 6)
            return (dn - 3) % (sm - 1) == 0 ? sm + dn - 3 : sm + dn - 4;
        return std::nullopt;
    };
    if (lk == FamilyKind::Star && rk == FamilyKind::TStar) return star_vs_dbroom(m, n);
    if (lk == FamilyKind::TStar && rk == FamilyKind::Star) return star_vs_dbroom(n, m);

    auto diag = [](FamilyKind k, int km, FamilyKind other, int kn)
        -> std::optional<long long> {
        if (other == FamilyKind::TStar && km == kn && kn >= 8 &&
            (k == FamilyKind::Path || k == FamilyKind::TPrime || k == FamilyKind::TStar))
            return 2LL * kn - 5;
        return std::nullopt;
    };
    if (auto v = diag(lk, m, rk, n)) return v;
    if (auto v = diag(rk, n, lk, m)) return v;

    // star vs double-broom at equal order
    if (((lk == FamilyKind::Star && rk == FamilyKind::TStar) ||
         (lk == FamilyKind::TStar && rk == FamilyKind::Star)) &&
        m == n && n >= 6)
        return 2LL * n - 3;

    // threshold family: left path/broom/double-broom, right larger double-broom
    auto threshold = [](FamilyKind k, int km, FamilyKind other, int kn)
        -> std::optional<long long> {
        if (other != FamilyKind::TStar || kn <= km) return std::nullopt;
        if (k != FamilyKind::Path && k != FamilyKind::TPrime && k != FamilyKind::TStar)
            return std::nullopt;
        if (km < 7 || kn < (km - 3) * (km - 3) + 2) return std::nullopt;
        return (kn - 3) % (km - 1) == 0 ? km + kn - 3 : km + kn - 4;
    };
    if (auto v = threshold(lk, m, rk, n)) return v;
    if (auto v = threshold(rk, n, lk, m)) return v;

    return std::nullopt;
}

}  // namespace

CheckResult check_ramsey_grid(int cap) {
    CheckResult res;
    res.name = "ramsey-grid";
    for (int m = 2; m <= cap; ++m) {
        for (int n = 2; n <= cap; ++n) {
            for (const TreeFamily& L : families_of_order(m)) {
                for (const TreeFamily& R : families_of_order(n)) {
                    ++res.checked;
                    RamseyBounds b;
                    try {
                        b = ramsey_bounds(L, R);
                    } catch (const std::exception& e) {
                        res.fail(pair_tag(L, R) + ": " + e.what());
                        continue;
                    }
                    if (b.upper && b.lower > *b.upper)
                        res.fail(pair_tag(L, R) + ": lower exceeds upper");
                    if (auto v = pinned_value(L, R)) {
                        if (!b.exact())
                            res.fail(pair_tag(L, R) + ": expected exact " +
                                     std::to_string(*v) + ", got bounds only");
                        else if (b.lower != *v)
                            res.fail(pair_tag(L, R) + ": expected " +
                                     std::to_string(*v) + ", got " +
                                     std::to_string(b.lower));
                    }
                }
            }
        }
    }
    return res;
}

CheckResult check_ramsey_consistency(int cap) {
    CheckResult res;
    res.name = "ramsey-consistency";
    for (int m = 3; m <= cap; ++m) {
        for (int n = 3; n <= cap; ++n) {
            for (const TreeFamily& L : families_of_order(m)) {
                for (const TreeFamily& R : families_of_order(n)) {
                    RamseyBounds b = ramsey_bounds(L, R);
                    if (!b.exact()) continue;
                    ++res.checked;
                    Graph lt = L.realize(), rt = R.realize();
                    long long d1 = lt.max_degree(), d2 = rt.max_degree();
                    if (d1 >= 2 && d2 >= 2) {
                        long long dl = degree_lower_bound(
                            d1, d2, m, has_max_degree_vertex_at_distance3(rt));
                        if (b.lower < dl)
                            res.fail(pair_tag(L, R) + ": exact below degree bound");
                    }
                    // The first counting cap must not undercut the exact value.
                    for (long long p = std::max(m, n); p <= m + n; ++p) {
                        long long e1 = ex_formula(classify_tree(lt), static_cast<int>(p))
                                           .edges;
                        long long e2 = ex_formula(classify_tree(rt), static_cast<int>(p))
                                           .edges;
                        if (auto up = counting_upper_bound(e1, e2, p)) {
                            if (b.lower > *up)
                                res.fail(pair_tag(L, R) +
                                         ": exact above the counting cap at p=" +
                                         std::to_string(p));
                            break;
                        }
                    }
                }
            }
        }
    }
    return res;
}

CheckResult check_witness_grid(int m_max, int n_max) {
    CheckResult res;
    res.name = "witness-grid";
    for (int m = 5; m <= m_max; ++m) {
        for (int n = m + 1; n <= n_max; ++n) {
            for (const TreeFamily& L : families_of_order(m)) {
                for (const TreeFamily& R : families_of_order(n)) {
                    RamseyBounds b = ramsey_bounds(L, R);
                    for (const ProvenanceEntry& e : b.provenance) {
                        if (!e.witness) continue;
                        ++res.checked;
                        std::string where =
                            pair_tag(L, R) + " " + e.id + "/" + e.witness->construction_id;
                        try {
                            Witness w = build_witness(e.witness->construction_id,
                                                      e.witness->params, b.left, b.right);
                            if (w.implied_lower != e.value) {
                                res.fail(where + ": witness order " +
                                         std::to_string(w.graph.order()) +
                                         " does not match the claimed bound " +
                                         std::to_string(e.value));
                                continue;
                            }
                            ValidationReport rep = validate_witness(w);
                            if (!rep.ok) res.fail(where + ": " + rep.detail);
                        } catch (const std::exception& ex) {
                            res.fail(where + ": " + ex.what());
                        }
                    }
                }
            }
        }
    }
    return res;
}

CheckResult check_ramsey_vs_oracle(int order_cap, int value_cap,
                                   const SearchBudget& budget) {
    CheckResult res;
    res.name = "ramsey-vs-oracle";
    for (int m = 2; m <= order_cap; ++m) {
        for (int n = 2; n <= order_cap; ++n) {
            for (const TreeFamily& L : families_of_order(m)) {
                for (const TreeFamily& R : families_of_order(n)) {
                    RamseyBounds b = ramsey_bounds(L, R);
                    if (!b.exact() || b.lower > value_cap) continue;
                    ++res.checked;
                    OracleResult got = ramsey_brute(L.realize(), R.realize(), budget);
                    if (got.status != OracleStatus::Exact)
                        res.fail(pair_tag(L, R) + ": oracle budget exceeded");
                    else if (got.value != b.lower)
                        res.fail(pair_tag(L, R) + ": dispatcher " +
                                 std::to_string(b.lower) + ", oracle " +
                                 std::to_string(got.value));
                }
            }
        }
    }
    return res;
}

}  // namespace treeramsey
