#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

#include "treeramsey/embedding.hpp"

// Search kernels behind the oracle module. Each exists in an OpenMP-parallel
// and a single-threaded form with identical results; the drivers pick one and
// the benchmark compares them.
namespace treeramsey::detail {

// Shared cancellation state for a search: node budget, deadline, abort flag.
struct StopControl {
    std::atomic<long long> nodes{0};
    std::atomic<bool> abort{false};       // any reason: budget hit or result found
    std::atomic<bool> budget_hit{false};  // set only by cap violations
    long long max_nodes = -1;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;

    // Charges `batch` nodes and re-checks the caps. Returns false when the
    // search must stop.
    bool charge(long long batch) {
        long long total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (abort.load(std::memory_order_relaxed)) return false;
        if (max_nodes >= 0 && total > max_nodes) {
            budget_hit.store(true, std::memory_order_relaxed);
            abort.store(true, std::memory_order_relaxed);
            return false;
        }
        if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
            budget_hit.store(true, std::memory_order_relaxed);
            abort.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

struct BandScan {
    bool found = false;
    std::uint32_t mask = 0;  // a tree-free mask when found
    bool aborted = false;
};

// Does some p-vertex graph with exactly t edges avoid the tree? Enumerates
// all C(E, t) edge masks (E = p(p-1)/2 <= 31). The serial form reports the
// first tree-free mask in ascending numeric order; the parallel form reports
// an arbitrary one.
BandScan scan_band_serial(int p, int t, const TreePlan& plan, StopControl& stop);
BandScan scan_band_parallel(int p, int t, const TreePlan& plan, StopControl& stop,
                            int workers);

struct ColoringScan {
    bool found = false;
    std::uint32_t red_mask = 0;  // a good coloring's red edge set when found
    bool aborted = false;
};

// Is there a red/blue coloring of K_N whose red part avoids `left` and whose
// blue part avoids `right`? `symmetric` fixes edge (0,1) red (valid exactly
// when left and right are isomorphic).
ColoringScan good_coloring_serial(int N, const TreePlan& left, const TreePlan& right,
                                  bool symmetric, StopControl& stop);
ColoringScan good_coloring_parallel(int N, const TreePlan& left, const TreePlan& right,
                                    bool symmetric, StopControl& stop, int workers);

}  // namespace treeramsey::detail
