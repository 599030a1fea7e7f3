#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "treeramsey/checks.hpp"
#include "treeramsey/citations.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/trees.hpp"
#include "treeramsey/turan.hpp"

using namespace treeramsey;

namespace {

TreeFamily fam(const std::string& tag) { return TreeFamily::parse(tag); }

}  // namespace

TEST_CASE("division decomposition") {
    Decomposition d = decompose(7, 6);
    CHECK(d.k == 1);
    CHECK(d.r == 2);
    d = decompose(10, 6);
    CHECK(d.k == 2);
    CHECK(d.r == 0);
    for (int n = 3; n <= 12; ++n)
        for (int p = n; p <= 40; ++p) {
            Decomposition q = decompose(p, n);
            CHECK(p == q.k * (n - 1) + q.r);
            CHECK(0 <= q.r);
            CHECK(q.r <= n - 2);
        }
}

TEST_CASE("path extremal numbers") {
    CHECK(ex_path(7, 6).edges == 11);
    CHECK(ex_path(10, 6).edges == 20);
    CHECK(ex_path(6, 6).edges == 10);
    CHECK(ex_path(7, 6).citation == "eq1.1");
    CHECK(find_citation("eq1.1") != nullptr);
}

TEST_CASE("star extremal numbers") {
    CHECK(ex_star(7, 5).edges == 10);
    CHECK(ex_star(5, 5).edges == 7);
    CHECK(ex_star(6, 6).edges == 12);
    for (int p = 5; p <= 30; ++p)
        for (int n = 3; n <= p; ++n)
            CHECK(ex_star(p, n).edges == (static_cast<long long>(n) - 2) * p / 2);
}

TEST_CASE("broom extremal numbers") {
    CHECK(ex_tprime(8, 6).edges == 13);
    CHECK(ex_tprime(8, 7).edges == 16);
    CHECK(ex_tprime(10, 6).edges == 20);
}

TEST_CASE("double broom extremal numbers") {
    CHECK(ex_tstar(8, 6).edges == 13);
    CHECK(ex_tstar(11, 8).edges == 27);
    CHECK(ex_tstar(13, 10).edges == 43);
    // The doubled-clique diagonal used by the 2n-5 construction.
    for (int n = 8; n <= 20; ++n)
        CHECK(ex_tstar(2 * n - 5, n).edges ==
              static_cast<long long>(n) * n - 6 * n + 11);
}

TEST_CASE("formula dispatch carries branch and citation") {
    ExtremalValue v = ex_formula(fam("tstar:8"), 11);
    CHECK(v.edges == 27);
    CHECK_FALSE(v.branch.empty());
    CHECK(find_citation(v.citation) != nullptr);

    CHECK(ex_formula(fam("path:6"), 7).edges == 11);
    CHECK(ex_formula(fam("star:5"), 7).edges == 10);
    CHECK(ex_formula(fam("tprime:6"), 8).edges == 13);
}

TEST_CASE("formula dispatch rejects out-of-range members") {
    CHECK_THROWS_AS(ex_formula(fam("tprime:4"), 8), std::invalid_argument);
    CHECK_THROWS_AS(ex_formula(fam("tstar:5"), 8), std::invalid_argument);
    CHECK_THROWS_AS(ex_formula(fam("path:6"), 5), std::invalid_argument);  // p < n
    Graph spider = TreeFamily::parse("tstar:6").realize();
    CHECK_THROWS_AS(ex_formula(TreeFamily::explicit_tree(spider), 8),
                    std::invalid_argument);
}

TEST_CASE("generic tree upper bound") {
    CHECK(ex_tree_upper(6, 9, false).edges == 18);  // floor(4*9/2)
    CHECK(ex_tree_upper(6, 9, true).edges == 16);   // 5 does not divide 9
    CHECK(ex_tree_upper(6, 10, true).edges == 20);  // 5 divides 10: no sharpening
    for (int m = 5; m <= 9; ++m)
        for (int p = m; p <= 20; ++p) {
            long long cap = ex_tree_upper(m, p, true).edges;
            CHECK(ex_path(p, m).edges <= cap);
            CHECK(ex_tprime(p, m).edges <= cap);
            if (m >= 6) CHECK(ex_tstar(p, m).edges <= cap);
        }
}

TEST_CASE("generic sandwich bounds") {
    ExBounds b = ex_generic_bounds(fam("tstar:6"), 9);
    CHECK(b.lower == 16);
    CHECK(b.upper == 16);
    b = ex_generic_bounds(fam("tprime:6"), 10);
    CHECK(b.lower == 20);
    CHECK(b.upper == 20);
    b = ex_generic_bounds(fam("tstar:6"), 8);
    CHECK(b.lower == 13);
    CHECK(b.upper == 14);
    CHECK(find_citation(b.lower_citation) != nullptr);
    CHECK(find_citation(b.upper_citation) != nullptr);

    // The only route to exact ex for tstar:5, tight for every p.
    for (int p = 5; p <= 20; ++p) {
        ExBounds t = ex_generic_bounds(fam("tstar:5"), p);
        CHECK(t.lower == t.upper);
        CHECK(t.lower == ex_path(p, 5).edges);
    }
}

TEST_CASE("formula invariants hold on a wide grid") {
    CheckResult r = check_turan_invariants(20, 60);
    for (const std::string& d : r.details) MESSAGE(d);
    CHECK(r.passed());
    CHECK(r.checked > 0);
}

TEST_CASE("clique unions attain the path value") {
    CheckResult r = check_construction_attainment(8, 16);
    for (const std::string& d : r.details) MESSAGE(d);
    CHECK(r.passed());
}
