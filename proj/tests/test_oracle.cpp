#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "treeramsey/embedding.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/oracle.hpp"
#include "treeramsey/trees.hpp"
#include "treeramsey/turan.hpp"

using namespace treeramsey;

namespace {

Graph tree(const std::string& tag) { return TreeFamily::parse(tag).realize(); }

void check_ex_witness(const OracleResult& res, int p, const Graph& t) {
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->order() == p);
    CHECK(res.witness->edge_count() == res.value);
    CHECK_FALSE(contains_tree(*res.witness, t));
}

void check_ramsey_witness(const OracleResult& res, const Graph& l, const Graph& r) {
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->order() == res.value - 1);
    CHECK_FALSE(contains_tree(*res.witness, l));
    CHECK_FALSE(contains_tree(res.witness->complement(), r));
}

}  // namespace

TEST_CASE("frozen extremal values") {
    OracleResult r = ex_brute(5, tree("path:5"));
    CHECK(r.status == OracleStatus::Exact);
    CHECK(r.value == 6);
    check_ex_witness(r, 5, tree("path:5"));

    r = ex_brute(7, tree("tstar:6"));
    CHECK(r.value == 11);
    check_ex_witness(r, 7, tree("tstar:6"));

    r = ex_brute(6, tree("star:6"));
    CHECK(r.value == 12);
    check_ex_witness(r, 6, tree("star:6"));
}

TEST_CASE("hosts smaller than the tree are complete") {
    OracleResult r = ex_brute(4, tree("path:5"));
    CHECK(r.value == 6);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Graph::complete(4));
}

TEST_CASE("the three extremal kernels agree") {
    struct Cell {
        const char* tag;
        int p;
    };
    const Cell cells[] = {{"path:4", 5}, {"path:5", 6}, {"star:5", 6},
                          {"tstar:6", 6}, {"tprime:5", 6}, {"star:4", 5}};
    for (const Cell& c : cells) {
        CAPTURE(c.tag);
        CAPTURE(c.p);
        Graph t = tree(c.tag);
        OracleResult a = ex_brute(c.p, t);
        OracleResult b = ex_brute_serial(c.p, t);
        OracleResult u = ex_brute_unpruned(c.p, t);
        CHECK(a.value == b.value);
        CHECK(a.value == u.value);
        check_ex_witness(a, c.p, t);
        check_ex_witness(b, c.p, t);
        check_ex_witness(u, c.p, t);
    }
}

TEST_CASE("the extremal oracle matches the closed forms at order seven") {
    for (const char* tag : {"path:5", "star:5", "tprime:5", "path:6", "star:6",
                            "tprime:6", "tstar:6"}) {
        TreeFamily f = TreeFamily::parse(tag);
        CAPTURE(tag);
        CHECK(ex_brute(7, f.realize()).value == ex_formula(f, 7).edges);
    }
}

TEST_CASE("parallel extremal search is deterministic") {
    Graph t = tree("path:5");
    OracleResult a = ex_brute(7, t);
    OracleResult b = ex_brute(7, t);
    CHECK(a.value == b.value);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("frozen small Ramsey numbers") {
    OracleResult r = ramsey_brute(tree("star:4"), tree("star:4"));
    CHECK(r.status == OracleStatus::Exact);
    CHECK(r.value == 6);
    check_ramsey_witness(r, tree("star:4"), tree("star:4"));

    r = ramsey_brute(tree("path:4"), tree("path:4"));
    CHECK(r.value == 5);
    check_ramsey_witness(r, tree("path:4"), tree("path:4"));

    r = ramsey_brute(tree("path:3"), tree("path:3"));
    CHECK(r.value == 3);

    r = ramsey_brute(tree("path:2"), tree("star:6"));
    CHECK(r.value == 6);  // one red edge suffices, so the blue star decides
}

TEST_CASE("serial and parallel Ramsey kernels agree") {
    for (const char* tag : {"star:4", "path:4"}) {
        Graph t = tree(tag);
        OracleResult a = ramsey_brute(t, t);
        OracleResult b = ramsey_brute_serial(t, t);
        CAPTURE(tag);
        CHECK(a.value == b.value);
        check_ramsey_witness(b, t, t);
    }
    OracleResult a = ramsey_brute(tree("path:4"), tree("star:5"));
    OracleResult b = ramsey_brute_serial(tree("path:4"), tree("star:5"));
    CHECK(a.value == b.value);
    CHECK(a.value == 7);  // the (k+1)K_{m-1} construction is sharp here
}

TEST_CASE("budgets turn into statuses, not wrong answers") {
    SearchBudget tight;
    tight.max_nodes = 50;
    OracleResult r = ex_brute(8, tree("path:5"), tight);
    CHECK(r.status == OracleStatus::BudgetExceeded);
    CHECK(r.value == -1);

    SearchBudget low;
    low.max_order = 7;
    CHECK(ex_brute(8, tree("path:5"), low).status == OracleStatus::BudgetExceeded);
    CHECK_THROWS_AS(ex_brute(9, tree("path:5")), capacity_error);

    SearchBudget cap;
    cap.max_order = 5;
    OracleResult rb = ramsey_brute(tree("star:4"), tree("star:4"), cap);
    CHECK(rb.status == OracleStatus::BudgetExceeded);
    CHECK(rb.value == -1);
}

TEST_CASE("non-trees are rejected") {
    CHECK_THROWS_AS(ex_brute(5, Graph::complete(3)), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_brute(Graph::complete(3), tree("path:4")),
                    std::invalid_argument);
}

TEST_CASE("double-broom dominance scan at order six") {
    auto records = scan_conjecture("C2.1", 6, 7);
    CHECK(records.size() == 8);  // four eligible trees, two host orders
    for (const ScanRecord& rec : records) {
        CAPTURE(rec.tree);
        CAPTURE(rec.p);
        CHECK_FALSE(rec.budget_exceeded);
        CHECK(rec.pass);
        CHECK(rec.value <= rec.bound);
    }
}

TEST_CASE("alpha2 monotonicity scan at order six") {
    auto records = scan_conjecture("C2.2", 6, 6);
    CHECK_FALSE(records.empty());
    for (const ScanRecord& rec : records) {
        CAPTURE(rec.tree);
        CAPTURE(rec.tree2);
        CHECK_FALSE(rec.budget_exceeded);
        CHECK(rec.pass);
        CHECK_FALSE(rec.tree2.empty());
    }
}

TEST_CASE("ramsey scan at order six reports the early counterexamples") {
    // The diagonal claim starts at n = 8; at n = 6 three of the five eligible
    // trees genuinely land on 8 instead of 2n-5 = 7, and the scan says so.
    auto records = scan_conjecture("C3.1", 6, 0);
    REQUIRE(records.size() == 5);  // six trees minus the star
    int passes = 0;
    for (const ScanRecord& rec : records) {
        CHECK(rec.p == 0);
        CHECK(rec.bound == 7);
        CHECK_FALSE(rec.budget_exceeded);
        CHECK((rec.value == 7 || rec.value == 8));
        if (rec.pass) ++passes;
    }
    CHECK(passes == 2);
}

TEST_CASE("scans report budget exhaustion per record") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto records = scan_conjecture("C2.1", 7, 8, tiny);
    CHECK(records.size() == 18);  // nine eligible trees, two host orders
    for (const ScanRecord& rec : records) CHECK(rec.budget_exceeded);
}

TEST_CASE("scan rejects malformed requests") {
    CHECK_THROWS_AS(scan_conjecture("C9.9", 6, 8), std::invalid_argument);
    CHECK_THROWS_AS(scan_conjecture("C2.1", 4, 8), std::invalid_argument);
    CHECK_THROWS_AS(scan_conjecture("C2.1", 6, 5), std::invalid_argument);
}
