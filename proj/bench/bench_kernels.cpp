// Compares the parallel search kernels against the serial reference on a few
// fixed instances. Build with the project; not registered as a test.
#include <chrono>
#include <cstdio>
#include <string>

#include "treeramsey/oracle.hpp"
#include "treeramsey/trees.hpp"

using namespace treeramsey;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_ex(const char* tag, int p) {
    Graph tree = TreeFamily::parse(tag).realize();
    SearchBudget budget;

    auto t0 = std::chrono::steady_clock::now();
    OracleResult serial = ex_brute_serial(p, tree, budget);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    OracleResult parallel = ex_brute(p, tree, budget);
    double tp = seconds_since(t0);

    std::printf("ex(%d; %s)      serial %6.2fs  parallel %6.2fs  value %lld%s\n", p,
                tag, ts, tp, serial.value,
                serial.value == parallel.value ? "" : "  ** MISMATCH **");
}

void bench_ramsey(const char* left, const char* right) {
    Graph l = TreeFamily::parse(left).realize();
    Graph r = TreeFamily::parse(right).realize();
    SearchBudget budget;

    auto t0 = std::chrono::steady_clock::now();
    OracleResult serial = ramsey_brute_serial(l, r, budget);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    OracleResult parallel = ramsey_brute(l, r, budget);
    double tp = seconds_since(t0);

    std::printf("r(%s, %s)  serial %6.2fs  parallel %6.2fs  value %lld%s\n", left,
                right, ts, tp, serial.value,
                serial.value == parallel.value ? "" : "  ** MISMATCH **");
}

}  // namespace

int main() {
    std::printf("search kernels: serial reference vs OpenMP\n\n");
    bench_ex("path:6", 8);
    bench_ex("tstar:6", 8);
    bench_ex("star:5", 8);
    bench_ramsey("star:4", "star:4");
    bench_ramsey("tprime:6", "tprime:6");
    bench_ramsey("path:5", "path:5");
    return 0;
}
