#include "treeramsey/oracle.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <utility>

#include "treeramsey/detail/kernels.hpp"
#include "treeramsey/embedding.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/graph6.hpp"
#include "treeramsey/trees.hpp"

namespace treeramsey {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kOracleMaxOrder = 8;  // the kernels pack edge masks into 32 bits

void init_stop(detail::StopControl& stop, const SearchBudget& b) {
    stop.max_nodes = b.max_nodes;
    if (b.max_seconds > 0) {
        stop.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(b.max_seconds));
        stop.has_deadline = true;
    }
}

std::vector<std::pair<int, int>> mask_edges(int p, std::uint32_t mask) {
    // Must match the kernels' edge numbering: (i, j) with i < j in
    // ascending j, then ascending i.
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 1; j < p; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1u) edges.emplace_back(i, j);
    return edges;
}

Graph graph_from_mask(int p, std::uint32_t mask) {
    return Graph::from_edges(p, mask_edges(p, mask));
}

void require_oracle_tree(const Graph& tree, const char* who) {
    if (tree.order() < 1 || !tree.is_tree())
        throw std::invalid_argument(std::string(who) + ": argument must be a tree");
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

OracleResult ex_brute_impl(int p, const Graph& tree, const SearchBudget& budget,
                           bool parallel) {
    require_oracle_tree(tree, "ex_brute");
    if (tree.order() < 2)
        throw std::invalid_argument("ex_brute: a single vertex embeds in every graph");
    if (p < 1) throw std::invalid_argument("ex_brute: p must be positive");
    if (p > kOracleMaxOrder)
        throw capacity_error("ex_brute: exhaustive search is limited to p <= 8");

    const auto t0 = Clock::now();
    OracleResult res;
    if (p > budget.max_order) {
        res.status = OracleStatus::BudgetExceeded;
        return res;
    }
    if (p < tree.order()) {
        // The tree cannot fit at all; the complete graph is extremal.
        res.value = static_cast<long long>(p) * (p - 1) / 2;
        res.witness = Graph::complete(p);
        res.seconds = seconds_since(t0);
        return res;
    }

    detail::StopControl stop;
    init_stop(stop, budget);
    TreePlan plan = TreePlan::build(tree);
    const int E = p * (p - 1) / 2;
    for (int t = E; t >= 0; --t) {
        detail::BandScan s = parallel ? detail::scan_band_parallel(p, t, plan, stop,
                                                                   budget.workers)
                                      : detail::scan_band_serial(p, t, plan, stop);
        res.nodes = stop.nodes.load();
        res.seconds = seconds_since(t0);
        if (s.aborted) {
            res.status = OracleStatus::BudgetExceeded;
            return res;
        }
        if (s.found) {
            res.value = t;
            std::uint32_t mask = s.mask;
            if (parallel) {
                // Re-derive the first tree-free mask in enumeration order so
                // the witness does not depend on thread scheduling.
                detail::BandScan again = detail::scan_band_serial(p, t, plan, stop);
                if (again.found) mask = again.mask;
                res.nodes = stop.nodes.load();
                res.seconds = seconds_since(t0);
            }
            res.witness = graph_from_mask(p, mask);
            return res;
        }
    }
    // Unreachable: the empty graph contains no tree on >= 2 vertices.
    throw std::logic_error("ex_brute: no band produced a tree-free graph");
}

OracleResult ramsey_brute_impl(const Graph& left, const Graph& right,
                               const SearchBudget& budget, bool parallel) {
    require_oracle_tree(left, "ramsey_brute");
    require_oracle_tree(right, "ramsey_brute");

    const auto t0 = Clock::now();
    OracleResult res;
    if (left.order() == 1 || right.order() == 1) {
        res.value = 1;  // a lone vertex embeds in any coloring
        res.seconds = seconds_since(t0);
        return res;
    }

    detail::StopControl stop;
    init_stop(stop, budget);
    TreePlan lplan = TreePlan::build(left);
    TreePlan rplan = TreePlan::build(right);
    const bool symmetric = trees_isomorphic(left, right);
    const int cap = std::min(budget.max_order, kOracleMaxOrder);

    const int start = std::max(left.order(), right.order());
    // Below `start` a monochromatic coloring is good: all-red avoids the
    // larger right tree in blue, or all-blue avoids the larger left tree.
    if (start - 1 >= 1)
        res.witness = left.order() >= right.order() ? Graph::complete(start - 1)
                                                    : Graph::from_edges(start - 1, {});
    for (int N = start;; ++N) {
        if (N > cap) {
            res.status = OracleStatus::BudgetExceeded;
            res.value = -1;
            break;
        }
        detail::ColoringScan s =
            parallel ? detail::good_coloring_parallel(N, lplan, rplan, symmetric, stop,
                                                      budget.workers)
                     : detail::good_coloring_serial(N, lplan, rplan, symmetric, stop);
        res.nodes = stop.nodes.load();
        res.seconds = seconds_since(t0);
        if (s.found) {
            res.witness = graph_from_mask(N, s.red_mask);
            continue;
        }
        if (s.aborted) {
            res.status = OracleStatus::BudgetExceeded;
            res.value = -1;
            break;
        }
        res.value = N;  // no good coloring of K_N: r = N
        break;
    }
    res.nodes = stop.nodes.load();
    res.seconds = seconds_since(t0);
    return res;
}

}  // namespace

OracleResult ex_brute(int p, const Graph& tree, const SearchBudget& budget) {
    return ex_brute_impl(p, tree, budget, true);
}

OracleResult ex_brute_serial(int p, const Graph& tree, const SearchBudget& budget) {
    return ex_brute_impl(p, tree, budget, false);
}

OracleResult ex_brute_unpruned(int p, const Graph& tree, const SearchBudget& budget) {
    require_oracle_tree(tree, "ex_brute_unpruned");
    if (tree.order() < 2)
        throw std::invalid_argument("ex_brute_unpruned: a single vertex embeds everywhere");
    if (p < 1) throw std::invalid_argument("ex_brute_unpruned: p must be positive");
    if (p > 6)
        throw capacity_error("ex_brute_unpruned: full 2^C(p,2) scan is limited to p <= 6");

    const auto t0 = Clock::now();
    OracleResult res;
    if (p > budget.max_order) {
        res.status = OracleStatus::BudgetExceeded;
        return res;
    }
    detail::StopControl stop;
    init_stop(stop, budget);
    TreePlan plan = TreePlan::build(tree);
    const int E = p * (p - 1) / 2;
    long long best = -1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << E); ++mask) {
        if (!stop.charge(1)) {
            res.status = OracleStatus::BudgetExceeded;
            res.nodes = stop.nodes.load();
            res.seconds = seconds_since(t0);
            return res;
        }
        int pc = __builtin_popcount(mask);
        if (pc <= best) continue;
        std::uint64_t rows[8] = {};
        int deg[8] = {};
        for (auto [i, j] : mask_edges(p, mask)) {
            rows[i] |= std::uint64_t{1} << j;
            rows[j] |= std::uint64_t{1} << i;
            ++deg[i];
            ++deg[j];
        }
        if (!embeds_small(plan, rows, deg, p)) {
            best = pc;
            best_mask = mask;
        }
    }
    res.value = best;
    res.witness = graph_from_mask(p, best_mask);
    res.nodes = stop.nodes.load();
    res.seconds = seconds_since(t0);
    return res;
}

OracleResult ramsey_brute(const Graph& left, const Graph& right,
                          const SearchBudget& budget) {
    return ramsey_brute_impl(left, right, budget, true);
}

OracleResult ramsey_brute_serial(const Graph& left, const Graph& right,
                                 const SearchBudget& budget) {
    return ramsey_brute_impl(left, right, budget, false);
}

namespace {

// Per-scan cache of ex_brute values keyed by (tree index, p).
struct ExCache {
    const std::vector<Graph>* trees;
    const SearchBudget* budget;
    std::map<std::pair<int, int>, OracleResult> memo;

    const OracleResult& get(int idx, int p) {
        auto key = std::make_pair(idx, p);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, ex_brute(p, (*trees)[idx], *budget)).first;
        return it->second;
    }
};

}  // namespace

std::vector<ScanRecord> scan_conjecture(const std::string& which, int n, int p_max,
                                        const SearchBudget& budget) {
    if (n < 5)
        throw std::invalid_argument(
            "scan_conjecture: the scanned statements need n >= 5");
    std::vector<Graph> trees = enumerate_trees(n);
    const Graph star = TreeFamily::make(FamilyKind::Star, n).realize();
    const Graph broom = TreeFamily::make(FamilyKind::TPrime, n).realize();
    const Graph tstar = TreeFamily::make(FamilyKind::TStar, n).realize();
    int tstar_idx = -1;
    for (int i = 0; i < static_cast<int>(trees.size()); ++i)
        if (trees_isomorphic(trees[i], tstar)) tstar_idx = i;
    if (tstar_idx < 0) throw std::logic_error("scan_conjecture: T_n* not enumerated");

    ExCache cache{&trees, &budget, {}};
    std::vector<ScanRecord> out;

    auto base_record = [&](int idx, int p) {
        ScanRecord rec;
        rec.conjecture = which;
        rec.n = n;
        rec.p = p;
        rec.tree = to_graph6(trees[idx]);
        return rec;
    };

    if (which == "C2.1") {
        if (p_max < n)
            throw std::invalid_argument("scan_conjecture: p_max must be at least n");
        for (int p = n; p <= p_max; ++p) {
            const OracleResult& bound = cache.get(tstar_idx, p);
            for (int i = 0; i < static_cast<int>(trees.size()); ++i) {
                if (trees_isomorphic(trees[i], star) || trees_isomorphic(trees[i], broom))
                    continue;
                const OracleResult& val = cache.get(i, p);
                ScanRecord rec = base_record(i, p);
                if (val.status != OracleStatus::Exact ||
                    bound.status != OracleStatus::Exact) {
                    rec.budget_exceeded = true;
                } else {
                    rec.value = val.value;
                    rec.bound = bound.value;
                    rec.pass = val.value <= bound.value;
                }
                out.push_back(std::move(rec));
            }
        }
        return out;
    }

    if (which == "C2.2") {
        if (p_max < n)
            throw std::invalid_argument("scan_conjecture: p_max must be at least n");
        std::vector<int> a2(trees.size());
        for (int i = 0; i < static_cast<int>(trees.size()); ++i) a2[i] = alpha2(trees[i]);
        for (int p = n; p <= p_max; ++p) {
            for (int i = 0; i < static_cast<int>(trees.size()); ++i) {
                for (int j = 0; j < static_cast<int>(trees.size()); ++j) {
                    if (a2[i] >= a2[j]) continue;
                    const OracleResult& vi = cache.get(i, p);
                    const OracleResult& vj = cache.get(j, p);
                    ScanRecord rec = base_record(i, p);
                    rec.tree2 = to_graph6(trees[j]);
                    if (vi.status != OracleStatus::Exact ||
                        vj.status != OracleStatus::Exact) {
                        rec.budget_exceeded = true;
                    } else {
                        rec.value = vi.value;
                        rec.bound = vj.value;
                        rec.pass = vi.value <= vj.value;
                    }
                    out.push_back(std::move(rec));
                }
            }
        }
        return out;
    }

    if (which == "C3.1") {
        for (int i = 0; i < static_cast<int>(trees.size()); ++i) {
            if (trees_isomorphic(trees[i], star)) continue;
            OracleResult val = ramsey_brute(trees[i], tstar, budget);
            ScanRecord rec = base_record(i, 0);
            rec.bound = 2LL * n - 5;
            if (val.status != OracleStatus::Exact) {
                rec.budget_exceeded = true;
            } else {
                rec.value = val.value;
                rec.pass = val.value == rec.bound;
            }
            out.push_back(std::move(rec));
        }
        return out;
    }

    throw std::invalid_argument("scan_conjecture: unknown conjecture id '" + which +
                                "' (expected C2.1, C2.2, or C3.1)");
}

}  // namespace treeramsey
