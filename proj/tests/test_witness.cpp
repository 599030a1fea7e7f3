#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "treeramsey/checks.hpp"
#include "treeramsey/embedding.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/graph6.hpp"
#include "treeramsey/trees.hpp"
#include "treeramsey/witness.hpp"

using namespace treeramsey;

namespace {

using Params = std::map<std::string, long long>;

}  // namespace

TEST_CASE("doubled clique witness") {
    Witness w = build_witness("lemma3.1", Params{{"n", 8}});
    CHECK(w.graph.order() == 10);
    CHECK(w.graph.edge_count() == 20);
    CHECK(w.implied_lower == 11);
    ValidationReport rep = validate_witness(w);
    CHECK(rep.ok);
    Graph back = from_graph6(to_graph6(w.graph));
    CHECK(back == w.graph);
}

TEST_CASE("two-clique union witness") {
    Witness w = build_witness("lemma2.10", Params{{"m", 6}, {"x", 1}, {"y", 1}});
    CHECK(w.graph.order() == 9);
    CHECK(w.implied_lower == 10);
    // The claim covers all three bushy families on the derived order.
    REQUIRE(w.claim.right_trees.size() == 3);
    for (const TreeFamily& f : w.claim.right_trees) CHECK(f.order() == 8);
    ValidationReport rep = validate_witness(w);
    CHECK(rep.ok);
}

TEST_CASE("three-block witness with a bipartite part") {
    Witness w = build_witness("thm6.2",
                              Params{{"m", 7}, {"x", 0}, {"y", 1}, {"z", 1}});
    CHECK(w.graph.order() == 13);
    CHECK(w.implied_lower == 14);
    ValidationReport rep = validate_witness(w);
    CHECK(rep.ok);
    // The claimed left tree is concrete: the bipartite block breaks any purely
    // structural reading of the left side.
    REQUIRE_FALSE(w.claim.left_trees.empty());
    CHECK(w.claim.left_trees[0].tag() == "tstar:7");
}

TEST_CASE("a bad claim fails with an embedding in hand") {
    // 2K5 is fine against order-8 trees, but its complement K_{5,5} certainly
    // contains the order-6 double broom; overriding the right side must fail.
    Witness w = build_witness("lemma3.1", Params{{"n", 8}}, std::nullopt,
                              std::string("tstar:6"));
    ValidationReport rep = validate_witness(w);
    CHECK_FALSE(rep.ok);
    CHECK(rep.side == "right");
    REQUIRE(rep.embedding.has_value());
    Graph comp = w.graph.complement();
    Graph t6 = TreeFamily::parse("tstar:6").realize();
    for (auto [u, v] : t6.edges())
        CHECK(comp.has_edge((*rep.embedding)[u], (*rep.embedding)[v]));
}

TEST_CASE("left override is honored") {
    Witness w = build_witness("lemma3.1", Params{{"n", 8}}, std::string("path:6"),
                              std::nullopt);
    REQUIRE(w.claim.left_trees.size() == 1);
    CHECK(w.claim.left_trees[0].tag() == "path:6");
    CHECK(validate_witness(w).ok);  // each K5 holds at most a P_5
}

TEST_CASE("trivial witness") {
    Witness w = build_witness("trivial", Params{{"m", 5}, {"n", 7}});
    CHECK(w.graph.order() == 6);
    CHECK(w.graph.edge_count() == 0);
    CHECK(w.implied_lower == 7);
    CHECK(validate_witness(w).ok);

    Witness big = build_witness("trivial", Params{{"m", 7}, {"n", 5}});
    CHECK(big.graph.order() == 6);
    CHECK(big.graph.edge_count() == 15);
    CHECK(validate_witness(big).ok);
}

TEST_CASE("clique multiples for the divisible cases") {
    Witness w = build_witness("thm4.1", Params{{"m", 6}, {"k", 2}});
    CHECK(w.graph.order() == 15);  // 3K5 against tstar:13
    CHECK(w.implied_lower == 16);
    CHECK(validate_witness(w).ok);

    Witness p = build_witness("prop6.1", Params{{"m", 3}, {"k", 2}});
    CHECK(p.graph.order() == 6);  // 3K2 against star:6
    CHECK(p.implied_lower == 7);
    CHECK(validate_witness(p).ok);

    Witness t = build_witness("thm5.1", Params{{"m", 6}, {"k", 2}});
    CHECK(t.graph.order() == 15);  // 3K5 against tprime:13
    CHECK(validate_witness(t).ok);
}

TEST_CASE("degree gadget witnesses") {
    Witness i = build_witness("lemma2.3i", Params{{"d1", 4}, {"d2", 6}});
    CHECK(validate_witness(i).ok);
    Witness ii = build_witness("lemma2.3ii", Params{{"d2", 6}, {"m", 7}});
    CHECK(ii.graph.order() == 10);  // 2K5
    CHECK(validate_witness(ii).ok);
    Witness iii = build_witness("lemma2.3iii",
                                Params{{"d1", 4}, {"d2", 8}, {"m", 7}});
    CHECK(iii.graph.order() == 11);
    CHECK(validate_witness(iii).ok);
}

TEST_CASE("mixed clique sizes for the non-divisible cases") {
    // m = 7, n = 11 = k(m-1)+b with k = 1, b = 5: no K_6 blocks, three K_4.
    Witness w = build_witness("thm4.5", Params{{"m", 7}, {"n", 11}, {"k", 1}, {"b", 5}});
    CHECK(w.graph.order() == 12);  // m+n-6
    CHECK(w.implied_lower == 13);
    CHECK(validate_witness(w).ok);

    Witness t = build_witness("thm6.1", Params{{"m", 7}, {"n", 12}, {"a", 2}, {"q", 2}});
    CHECK(t.graph.order() == 15);  // m+n-4
    CHECK(validate_witness(t).ok);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_witness("lemma3.1", Params{}), std::invalid_argument);
    CHECK_THROWS_AS(build_witness("nosuch", Params{{"n", 8}}), std::invalid_argument);
    CHECK_THROWS_AS(build_witness("thm4.5", Params{{"m", 7}, {"n", 11}, {"k", 1}, {"b", 4}}),
                    std::invalid_argument);  // n != k(m-1)+b
    CHECK_THROWS_AS(build_witness("lemma2.10", Params{{"m", 5}, {"x", 0}, {"y", 0}}),
                    infeasible_error);  // empty graph: no derived order
    CHECK_THROWS_AS(build_witness("thm6.1", Params{{"m", 7}, {"n", 11}, {"a", 1}, {"q", 2}}),
                    std::invalid_argument);  // a out of range
}

TEST_CASE("witness grid over the dispatcher output") {
    CheckResult r = check_witness_grid(7, 10);
    for (const std::string& d : r.details) MESSAGE(d);
    CHECK(r.passed());
    CHECK(r.checked > 0);
}
