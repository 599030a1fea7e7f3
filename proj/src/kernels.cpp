#include "treeramsey/detail/kernels.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treeramsey::detail {

namespace {

constexpr int kMaxP = 8;       // oracle graphs live on at most 8 vertices
constexpr int kMaxE = 28;      // C(8,2)
constexpr int kBatch = 4096;   // nodes charged to the StopControl at once

int default_workers(int requested) {
    if (requested > 0) return requested;
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads());
#else
    return 1;
#endif
}

struct EdgeTable {
    int E = 0;
    std::array<std::uint8_t, kMaxE> u{}, v{};  // edge id -> endpoints, u < v
};

EdgeTable edge_table(int p) {
    EdgeTable t;
    for (int j = 1; j < p; ++j)
        for (int i = 0; i < j; ++i) {
            t.u[t.E] = static_cast<std::uint8_t>(i);
            t.v[t.E] = static_cast<std::uint8_t>(j);
            ++t.E;
        }
    return t;
}

long long binom(int n, int k) {
    static const auto table = [] {
        std::array<std::array<long long, 33>, 33> c{};
        for (int i = 0; i <= 32; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
        return c;
    }();
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

// R-th (0-based) t-subset mask of positions {0..E-1} in ascending numeric order.
std::uint32_t unrank_mask(int E, int t, long long R) {
    std::uint32_t mask = 0;
    int hi = E;
    while (t > 0) {
        for (int b = hi - 1; b >= 0; --b) {
            if (binom(b, t) <= R) {
                mask |= std::uint32_t{1} << b;
                R -= binom(b, t);
                --t;
                hi = b;
                break;
            }
        }
    }
    return mask;
}

std::uint32_t next_same_popcount(std::uint32_t x) {
    std::uint32_t t = x | (x - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctz(x) + 1));
}

bool mask_contains_tree(std::uint32_t mask, const EdgeTable& et, int p,
                        const TreePlan& plan) {
    std::uint64_t rows[kMaxP] = {};
    int deg[kMaxP] = {};
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        int k = __builtin_ctz(m);
        int a = et.u[k], b = et.v[k];
        rows[a] |= std::uint64_t{1} << b;
        rows[b] |= std::uint64_t{1} << a;
        ++deg[a];
        ++deg[b];
    }
    return embeds_small(plan, rows, deg, p);
}

// Scans `count` consecutive masks of the band starting at rank `start`.
// Returns true if a tree-free mask was found (recorded in *out).
bool scan_chunk(int p, int t, const EdgeTable& et, const TreePlan& plan, long long start,
                long long count, StopControl& stop, std::uint32_t* out) {
    if (count <= 0) return false;
    std::uint32_t mask = unrank_mask(et.E, t, start);
    long long local = 0;
    for (long long done = 0; done < count; ++done) {
        if (++local >= kBatch) {
            if (!stop.charge(local)) return false;
            local = 0;
        } else if (stop.abort.load(std::memory_order_relaxed)) {
            stop.nodes.fetch_add(local, std::memory_order_relaxed);
            return false;
        }
        if (!mask_contains_tree(mask, et, p, plan)) {
            stop.nodes.fetch_add(local, std::memory_order_relaxed);
            *out = mask;
            return true;
        }
        if (done + 1 < count) mask = next_same_popcount(mask);
    }
    stop.nodes.fetch_add(local, std::memory_order_relaxed);
    return false;
}

}  // namespace

BandScan scan_band_serial(int p, int t, const TreePlan& plan, StopControl& stop) {
    EdgeTable et = edge_table(p);
    BandScan r;
    std::uint32_t out = 0;
    if (scan_chunk(p, t, et, plan, 0, binom(et.E, t), stop, &out)) {
        r.found = true;
        r.mask = out;
    }
    r.aborted = stop.budget_hit.load();
    return r;
}

BandScan scan_band_parallel(int p, int t, const TreePlan& plan, StopControl& stop,
                            int workers) {
    EdgeTable et = edge_table(p);
    const long long total = binom(et.E, t);
    const int W = static_cast<int>(
        std::min<long long>(default_workers(workers), std::max<long long>(total, 1)));
    const long long chunk = (total + W - 1) / W;

    BandScan r;
    std::uint32_t found_mask = 0;
    bool found = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(W)
#endif
    for (int w = 0; w < W; ++w) {
        std::uint32_t out = 0;
        long long start = w * chunk;
        long long count = std::min(chunk, total - start);
        if (scan_chunk(p, t, et, plan, start, count, stop, &out)) {
#ifdef _OPENMP
#pragma omp critical(treeramsey_band_found)
#endif
            {
                found = true;
                found_mask = out;
            }
            stop.abort.store(true, std::memory_order_relaxed);
        }
    }
    r.found = found;
    r.mask = found_mask;
    r.aborted = stop.budget_hit.load();
    // A found-abort must not leak into the next band's scan.
    if (found && !r.aborted) stop.abort.store(false);
    return r;
}

namespace {

// One red/blue backtracking search over the edges of K_N.
struct ColorState {
    const EdgeTable* et;
    const TreePlan* left;
    const TreePlan* right;
    int N;
    StopControl* stop;
    std::uint64_t red[kMaxP] = {}, blue[kMaxP] = {};
    int red_deg[kMaxP] = {}, blue_deg[kMaxP] = {};
    std::uint32_t red_mask = 0;
    long long local = 0;
    bool aborted = false;

    bool tick() {
        if (++local >= kBatch) {
            if (!stop->charge(local)) {
                aborted = true;
                local = 0;
                return false;
            }
            local = 0;
        } else if (stop->abort.load(std::memory_order_relaxed)) {
            aborted = true;
            return false;
        }
        return true;
    }
    void flush() { stop->nodes.fetch_add(local, std::memory_order_relaxed); local = 0; }

    void add_red(int k) {
        int a = et->u[k], b = et->v[k];
        red[a] |= std::uint64_t{1} << b;
        red[b] |= std::uint64_t{1} << a;
        ++red_deg[a];
        ++red_deg[b];
        red_mask |= std::uint32_t{1} << k;
    }
    void remove_red(int k) {
        int a = et->u[k], b = et->v[k];
        red[a] &= ~(std::uint64_t{1} << b);
        red[b] &= ~(std::uint64_t{1} << a);
        --red_deg[a];
        --red_deg[b];
        red_mask &= ~(std::uint32_t{1} << k);
    }
    void add_blue(int k) {
        int a = et->u[k], b = et->v[k];
        blue[a] |= std::uint64_t{1} << b;
        blue[b] |= std::uint64_t{1} << a;
        ++blue_deg[a];
        ++blue_deg[b];
    }
    void remove_blue(int k) {
        int a = et->u[k], b = et->v[k];
        blue[a] &= ~(std::uint64_t{1} << b);
        blue[b] &= ~(std::uint64_t{1} << a);
        --blue_deg[a];
        --blue_deg[b];
    }
    bool red_ok() { return !embeds_small(*left, red, red_deg, N); }
    bool blue_ok() { return !embeds_small(*right, blue, blue_deg, N); }

    // True once a full good coloring is reached; red_mask then holds it.
    bool dfs(int d) {
        if (!tick()) return false;
        if (d == et->E) return true;
        add_red(d);
        if (red_ok() && dfs(d + 1)) return true;
        remove_red(d);
        if (aborted || stop->abort.load(std::memory_order_relaxed)) return false;
        add_blue(d);
        if (blue_ok() && dfs(d + 1)) return true;
        remove_blue(d);
        return false;
    }

    // Replays a fixed red/blue prefix over edges [from, prefix_len) (bit d of
    // `code` = edge d is blue), then searches below it. The caller discards
    // the state afterwards, so failed replays need no unwinding.
    bool dfs_with_prefix(std::uint32_t code, int from, int prefix_len) {
        for (int d = from; d < prefix_len; ++d) {
            if (!tick()) return false;
            if ((code >> d) & 1u) {
                add_blue(d);
                if (!blue_ok()) return false;
            } else {
                add_red(d);
                if (!red_ok()) return false;
            }
        }
        return dfs(prefix_len);
    }
};

}  // namespace

ColoringScan good_coloring_serial(int N, const TreePlan& left, const TreePlan& right,
                                  bool symmetric, StopControl& stop) {
    EdgeTable et = edge_table(N);
    ColoringScan r;
    ColorState st;
    st.et = &et;
    st.left = &left;
    st.right = &right;
    st.N = N;
    st.stop = &stop;
    bool found;
    if (symmetric && et.E > 0) {
        st.add_red(0);
        found = st.red_ok() && st.dfs(1);
    } else {
        found = st.dfs(0);
    }
    st.flush();
    if (found) {
        r.found = true;
        r.red_mask = st.red_mask;
    }
    r.aborted = stop.budget_hit.load();
    return r;
}

ColoringScan good_coloring_parallel(int N, const TreePlan& left, const TreePlan& right,
                                    bool symmetric, StopControl& stop, int workers) {
    EdgeTable et = edge_table(N);
    const int forced = (symmetric && et.E > 0) ? 1 : 0;
    const int free_prefix = std::min(10, et.E - forced);
    const std::uint32_t prefixes = std::uint32_t{1} << free_prefix;
    const int W = default_workers(workers);

    ColoringScan r;
    bool found = false;
    std::uint32_t found_mask = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(W)
#endif
    for (std::uint32_t code = 0; code < prefixes; ++code) {
        if (stop.abort.load(std::memory_order_relaxed)) continue;
        ColorState st;
        st.et = &et;
        st.left = &left;
        st.right = &right;
        st.N = N;
        st.stop = &stop;
        bool ok = true;
        if (forced) {
            st.add_red(0);
            ok = st.red_ok();
        }
        // Prefix bits address the edges after any forced one.
        if (ok && st.dfs_with_prefix(code << forced, forced, forced + free_prefix)) {
#ifdef _OPENMP
#pragma omp critical(treeramsey_coloring_found)
#endif
            {
                found = true;
                found_mask = st.red_mask;
            }
            stop.abort.store(true, std::memory_order_relaxed);
        }
        st.flush();
    }
    r.found = found;
    r.red_mask = found_mask;
    r.aborted = stop.budget_hit.load();
    if (found && !r.aborted) stop.abort.store(false);
    return r;
}

}  // namespace treeramsey::detail
