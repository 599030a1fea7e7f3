#include "treeramsey/turan.hpp"

#include <stdexcept>

#include "treeramsey/errors.hpp"

namespace treeramsey {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

// Integer halving that insists the numerator is even; every formula branch
// without an explicit floor is exactly divisible, so a remainder here means
// the branch conditions were violated.
long long halve_exact(long long num, const char* where) {
    if (num % 2 != 0) throw parity_error(std::string(where) + ": odd numerator " +
                                         std::to_string(num));
    return num / 2;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

long long path_value(int p, int n) {
    auto [k, r] = decompose(p, n);
    return static_cast<long long>(k) * choose2(n - 1) + choose2(r);
}

}  // namespace

Decomposition decompose(int p, int n) {
    require(n >= 2, "decompose: tree order must be at least 2");
    require(p >= 0, "decompose: p must be nonnegative");
    return {p / (n - 1), p % (n - 1)};
}

ExtremalValue ex_path(int p, int n) {
    require(n >= 2 && p >= n, "ex_path: need p >= n >= 2");
    return {path_value(p, n), "eq1.1", "eq1.1"};
}

ExtremalValue ex_star(int p, int n) {
    require(n >= 2 && p >= n - 1, "ex_star: need p >= n-1 >= 1");
    return {static_cast<long long>(n - 2) * p / 2, "lemma2.4", "lemma2.4"};
}

ExtremalValue ex_tprime(int p, int n) {
    require(n >= 5 && p >= n, "ex_tprime: need p >= n >= 5");
    int r = decompose(p, n).r;
    if (n >= 7 && 2 <= r && r <= n - 4) {
        long long num = static_cast<long long>(n - 2) * (p - 1) - r - 1;
        return {num / 2, "lemma2.5:special", "lemma2.5"};
    }
    return {path_value(p, n), "lemma2.5:path", "lemma2.5"};
}

ExtremalValue ex_tstar(int p, int n) {
    require(n >= 6 && p >= n, "ex_tstar: need p >= n >= 6");
    int r = decompose(p, n).r;

    if (n <= 10) {
        if (n <= 7) return {path_value(p, n), "lemma2.8:path", "lemma2.8"};
        if (n <= 9) {
            if (r == n - 5) {
                long long v =
                    halve_exact(static_cast<long long>(n - 2) * (p - 2), "lemma2.8") + 1;
                return {v, "lemma2.8:r=n-5", "lemma2.8"};
            }
            return {path_value(p, n), "lemma2.8:path", "lemma2.8"};
        }
        // n == 10
        if (r == 5) return {4LL * p - 7, "lemma2.8:n10:r5", "lemma2.8"};
        if (r == 4) return {4LL * p - 9, "lemma2.8:n10:r4", "lemma2.8"};
        long long v = 4LL * p - halve_exact(static_cast<long long>(r) * (9 - r), "lemma2.8");
        return {v, "lemma2.8:n10", "lemma2.8"};
    }

    if (r <= 1 || r >= n - 5) {
        if (r == n - 5) {
            long long v = halve_exact(static_cast<long long>(n - 2) * (p - 2), "lemma2.6") + 1;
            return {v, "lemma2.6:r=n-5", "lemma2.6"};
        }
        return {path_value(p, n), "lemma2.6:path", "lemma2.6"};
    }

    // 2 <= r <= n-6
    int t = (n - 3) % (r + 2);
    if (r >= 4 && 2 <= t && t <= r - 1) {
        long long num = static_cast<long long>(n - 2) * (p - 1) - 2 * r - t - 3;
        return {num / 2, "lemma2.7:floor", "lemma2.7"};
    }
    long long num = static_cast<long long>(n - 2) * (p - 1) -
                    static_cast<long long>(t) * (r + 2 - t) - r - 1;
    return {halve_exact(num, "lemma2.7"), "lemma2.7:even", "lemma2.7"};
}

ExtremalValue ex_formula(const TreeFamily& family, int p) {
    const int n = family.order();
    switch (family.kind()) {
        case FamilyKind::Path:
            return ex_path(p, n);
        case FamilyKind::Star:
            return ex_star(p, n);
        case FamilyKind::TPrime:
            if (n < 5)
                throw std::invalid_argument(
                    "ex_formula: the T' closed form needs n >= 5 (T_4' is P_4; "
                    "use path:4)");
            return ex_tprime(p, n);
        case FamilyKind::TStar:
            if (n < 6)
                throw std::invalid_argument(
                    "ex_formula: the T* closed forms need n >= 6; for T_5* use "
                    "ex_generic_bounds, whose sides coincide");
            return ex_tstar(p, n);
        case FamilyKind::Explicit:
            throw std::invalid_argument(
                "ex_formula: no closed form for explicit trees; use ex_generic_bounds "
                "or the brute-force oracle");
    }
    throw std::invalid_argument("ex_formula: unknown family kind");
}

ExtremalValue ex_tree_upper(int m, int p, bool path_tprime_tstar) {
    require(m >= 5 && p >= m, "ex_tree_upper: need p >= m >= 5");
    if (path_tprime_tstar && p % (m - 1) != 0) {
        long long v = static_cast<long long>(m - 2) * (p - 1) / 2;
        return {v, "lemma2.9:sharp", "lemma2.9"};
    }
    return {static_cast<long long>(m - 2) * p / 2, "lemma2.9", "lemma2.9"};
}

ExBounds ex_generic_bounds(const TreeFamily& family, int p) {
    if (family.kind() == FamilyKind::Explicit)
        throw std::invalid_argument("ex_generic_bounds: named families only");
    const int m = family.order();
    require(m >= 5 && p >= m, "ex_generic_bounds: need p >= order >= 5");
    long long lower = path_value(p, m);
    long long upper = ex_tree_upper(m, p, family.kind() != FamilyKind::Star).edges;
    return {lower, upper, "eq2.1", "lemma2.9"};
}

}  // namespace treeramsey
