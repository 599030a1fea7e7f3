#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "treeramsey/checks.hpp"
#include "treeramsey/citations.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/graph6.hpp"
#include "treeramsey/oracle.hpp"
#include "treeramsey/ramsey.hpp"
#include "treeramsey/trees.hpp"
#include "treeramsey/turan.hpp"
#include "treeramsey/witness.hpp"

namespace {

using nlohmann::ordered_json;
using namespace treeramsey;

constexpr int kExitExact = 0;
constexpr int kExitError = 1;
constexpr int kExitPartial = 2;

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const std::string& message) {
    ordered_json j;
    j["error"] = message;
    std::cerr << j.dump(2) << "\n";
    return kExitError;
}

ordered_json citation_json(const std::string& id) {
    ordered_json j;
    j["id"] = id;
    if (const Citation* c = find_citation(id)) j["statement"] = c->statement;
    return j;
}

ordered_json params_json(const std::map<std::string, long long>& params) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

ordered_json bounds_json(const RamseyBounds& b) {
    ordered_json j;
    j["left"] = b.left;
    j["right"] = b.right;
    j["lower"] = b.lower;
    if (b.upper)
        j["upper"] = *b.upper;
    else
        j["upper"] = nullptr;
    j["exact"] = b.exact();
    if (!b.note.empty()) j["note"] = b.note;
    ordered_json prov = ordered_json::array();
    for (const ProvenanceEntry& e : b.provenance) {
        ordered_json pe;
        pe["id"] = e.id;
        pe["quote"] = e.quote;
        pe["role"] = e.role;
        if (e.role != "note") pe["value"] = e.value;
        pe["params"] = params_json(e.params);
        if (e.witness) {
            ordered_json w;
            w["construction_id"] = e.witness->construction_id;
            w["params"] = params_json(e.witness->params);
            pe["witness"] = w;
        }
        prov.push_back(pe);
    }
    j["provenance"] = prov;
    return j;
}

ordered_json claim_side_json(const std::vector<TreeFamily>& trees, long long order,
                             long long delta) {
    ordered_json j;
    ordered_json tags = ordered_json::array();
    for (const TreeFamily& f : trees) tags.push_back(f.tag());
    j["trees"] = tags;
    if (order > 0) j["order"] = order;
    if (delta > 0) j["delta"] = delta;
    return j;
}

std::map<std::string, long long> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, long long> params;
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("parameter '" + kv + "' is not key=value");
        params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
    return params;
}

struct BudgetFlags {
    SearchBudget budget;
    void attach(CLI::App* cmd) {
        cmd->add_option("--max-order", budget.max_order,
                        "largest order the search may touch");
        cmd->add_option("--budget-nodes", budget.max_nodes,
                        "search-node cap (-1 = unlimited)");
        cmd->add_option("--budget-seconds", budget.max_seconds, "wall-clock cap");
        cmd->add_option("--workers", budget.workers, "worker threads (0 = default)");
    }
};

FamilyKind kind_from_name(const std::string& name) {
    if (name == "path") return FamilyKind::Path;
    if (name == "star") return FamilyKind::Star;
    if (name == "tprime") return FamilyKind::TPrime;
    if (name == "tstar") return FamilyKind::TStar;
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected path, star, tprime, or tstar)");
}

int run_ex(const std::string& family, int n, int p) {
    FamilyKind kind = kind_from_name(family);
    if (kind == FamilyKind::TPrime && n == 4)
        return fail("tprime:4 is the path P_4; use --family path -n 4");
    TreeFamily f = TreeFamily::make(kind, n);
    ordered_json j;
    j["family"] = f.tag();
    j["n"] = n;
    j["p"] = p;
    if (kind == FamilyKind::TStar && n == 5) {
        // No closed form of its own; the sandwich is tight for every p.
        ExBounds b = ex_generic_bounds(f, p);
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        j["exact"] = b.lower == b.upper;
        if (b.lower == b.upper) j["edges"] = b.lower;
        j["lower_citation"] = citation_json(b.lower_citation);
        j["upper_citation"] = citation_json(b.upper_citation);
        j["note"] = "tstar:5 is the path P_5; value from the generic sandwich";
        emit(j);
        return b.lower == b.upper ? kExitExact : kExitPartial;
    }
    ExtremalValue v = ex_formula(f, p);
    j["edges"] = v.edges;
    j["branch"] = v.branch;
    j["citation"] = citation_json(v.citation);
    emit(j);
    return kExitExact;
}

int run_ramsey(const std::string& left, const std::string& left_graph,
               const std::string& right, const std::vector<std::string>& certs) {
    TreeFamily r = TreeFamily::parse(right);
    RamseyBounds b;
    if (!left_graph.empty()) {
        Graph g = from_graph6(left_graph);
        std::vector<CertifiedExBound> cb;
        for (const auto& [k, v] : parse_params(certs))
            cb.push_back({std::stoi(k), v});
        b = ramsey_bounds_general(g, r, cb);
    } else {
        if (!certs.empty())
            return fail("--cert requires --left-graph (the general entry point)");
        b = ramsey_bounds(TreeFamily::parse(left), r);
    }
    emit(bounds_json(b));
    return b.exact() ? kExitExact : kExitPartial;
}

int run_witness(const std::string& construction, const std::vector<std::string>& kvs,
                const std::string& left, const std::string& right, bool validate,
                const std::string& format) {
    std::optional<std::string> lt, rt;
    if (!left.empty()) lt = left;
    if (!right.empty()) rt = right;
    Witness w = build_witness(construction, parse_params(kvs), lt, rt);
    if (format == "graph6") {
        std::cout << to_graph6(w.graph) << "\n";
        return kExitExact;
    }
    if (format == "dot") {
        std::cout << to_dot(w.graph);
        return kExitExact;
    }
    ordered_json j;
    j["construction_id"] = w.construction_id;
    j["params"] = params_json(w.params);
    j["description"] = w.description;
    j["order"] = w.graph.order();
    j["edges"] = w.graph.edge_count();
    j["implied_lower"] = w.implied_lower;
    j["graph6"] = to_graph6(w.graph);
    ordered_json claim;
    claim["left"] = claim_side_json(w.claim.left_trees, w.claim.left_order,
                                    w.claim.left_delta);
    claim["right"] = claim_side_json(w.claim.right_trees, w.claim.right_order,
                                     w.claim.right_delta);
    j["claim"] = claim;
    int code = kExitExact;
    if (validate) {
        ValidationReport rep = validate_witness(w);
        j["validated"] = rep.ok;
        if (!rep.ok) {
            ordered_json f;
            f["detail"] = rep.detail;
            f["side"] = rep.side;
            if (rep.embedding) f["embedding"] = *rep.embedding;
            j["failure"] = f;
            code = kExitPartial;
        }
    }
    emit(j);
    return code;
}

int emit_check(const CheckResult& r) {
    ordered_json j;
    j["name"] = r.name;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["details"] = r.details;
    j["pass"] = r.passed();
    emit(j);
    return r.passed() ? kExitExact : kExitPartial;
}

int run_oracle(const std::string& op, int p, const std::string& tree,
               const std::string& left, const std::string& right, bool serial,
               bool unpruned, const SearchBudget& budget) {
    OracleResult res;
    ordered_json j;
    j["op"] = op;
    if (op == "ex") {
        if (tree.empty()) return fail("oracle ex needs --tree");
        Graph t = TreeFamily::parse(tree).realize();
        j["p"] = p;
        j["tree"] = tree;
        if (unpruned)
            res = ex_brute_unpruned(p, t, budget);
        else
            res = serial ? ex_brute_serial(p, t, budget) : ex_brute(p, t, budget);
    } else if (op == "ramsey") {
        if (left.empty() || right.empty())
            return fail("oracle ramsey needs --left and --right");
        Graph l = TreeFamily::parse(left).realize();
        Graph r = TreeFamily::parse(right).realize();
        j["left"] = left;
        j["right"] = right;
        res = serial ? ramsey_brute_serial(l, r, budget) : ramsey_brute(l, r, budget);
    } else {
        return fail("unknown oracle op '" + op + "' (expected ex or ramsey)");
    }
    bool exact = res.status == OracleStatus::Exact;
    j["value"] = exact ? ordered_json(res.value) : ordered_json(nullptr);
    j["status"] = exact ? "exact" : "budget-exceeded";
    j["nodes"] = res.nodes;
    j["seconds"] = res.seconds;
    j["witness"] = res.witness ? ordered_json(to_graph6(*res.witness))
                               : ordered_json(nullptr);
    emit(j);
    return exact ? kExitExact : kExitPartial;
}

int run_scan(const std::string& conjecture, int n, int p_max,
             const SearchBudget& budget) {
    std::vector<ScanRecord> records = scan_conjecture(conjecture, n, p_max, budget);
    bool all_ok = true;
    for (const ScanRecord& r : records) {
        ordered_json j;
        j["conjecture"] = r.conjecture;
        j["n"] = r.n;
        if (r.p > 0) j["p"] = r.p;
        j["tree"] = r.tree;
        if (!r.tree2.empty()) j["tree2"] = r.tree2;
        if (r.budget_exceeded) {
            j["budget_exceeded"] = true;
            all_ok = false;
        } else {
            j["value"] = r.value;
            j["bound"] = r.bound;
            j["pass"] = r.pass;
            all_ok = all_ok && r.pass;
        }
        std::cout << j.dump() << "\n";
    }
    return all_ok ? kExitExact : kExitPartial;
}

int run_export(const std::string& tree, const std::string& format) {
    TreeFamily f = TreeFamily::parse(tree);
    Graph g = f.realize();
    if (format == "graph6") {
        std::cout << to_graph6(g) << "\n";
        return kExitExact;
    }
    if (format == "dot") {
        std::cout << to_dot(g);
        return kExitExact;
    }
    ordered_json j;
    j["object"] = "tree";
    j["tag"] = f.tag();
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["graph6"] = to_graph6(g);
    emit(j);
    return kExitExact;
}

int run_citations() {
    ordered_json arr = ordered_json::array();
    for (const Citation& c : citation_catalog()) {
        ordered_json j;
        j["id"] = c.id;
        j["statement"] = c.statement;
        arr.push_back(j);
    }
    emit(arr);
    return kExitExact;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact extremal numbers and Ramsey numbers for tree families"};
    app.require_subcommand(1);

    // ex
    auto* ex_cmd = app.add_subcommand("ex", "closed-form ex(p; family)");
    std::string ex_family;
    int ex_n = 0, ex_p = 0;
    ex_cmd->add_option("--family,-f", ex_family, "path | star | tprime | tstar")
        ->required();
    ex_cmd->add_option("-n", ex_n, "tree order")->required();
    ex_cmd->add_option("-p", ex_p, "host order")->required();

    // ramsey
    auto* rm_cmd = app.add_subcommand("ramsey", "Ramsey bounds for a pair");
    std::string rm_left, rm_left_graph, rm_right;
    std::vector<std::string> rm_certs;
    rm_cmd->add_option("--left", rm_left, "left tree tag (name:order or graph6)");
    rm_cmd->add_option("--left-graph", rm_left_graph,
                       "graph6 of an arbitrary connected left graph");
    rm_cmd->add_option("--right", rm_right, "right tree tag")->required();
    rm_cmd->add_option("--cert", rm_certs,
                       "certified ex bound p=value for the left graph (repeatable)");

    // witness
    auto* wt_cmd = app.add_subcommand("witness", "build a lower-bound witness");
    std::string wt_construction, wt_left, wt_right, wt_format = "json";
    std::vector<std::string> wt_params;
    bool wt_validate = false;
    wt_cmd->add_option("--construction", wt_construction, "construction id")->required();
    wt_cmd->add_option("-P,--param", wt_params, "construction parameter key=value");
    wt_cmd->add_option("--left", wt_left, "claimed left tree tag");
    wt_cmd->add_option("--right", wt_right, "claimed right tree tag");
    wt_cmd->add_flag("--validate", wt_validate, "run the avoidance checks");
    wt_cmd->add_option("--format", wt_format, "json | graph6 | dot");

    // verify
    auto* vf_cmd = app.add_subcommand("verify", "run an invariant suite");
    std::string vf_what;
    int vf_n_min = 5, vf_n_max = -1, vf_p_max = -1, vf_cap = 30;
    int vf_m_max = 9, vf_order_cap = 6, vf_value_cap = 7;
    vf_cmd
        ->add_option("what", vf_what,
                     "ex | turan | constructions | grid | consistency | witnesses | "
                     "oracle")
        ->required();
    vf_cmd->add_option("--n-min", vf_n_min, "smallest tree order");
    vf_cmd->add_option("--n-max", vf_n_max, "largest tree order");
    vf_cmd->add_option("--p-max", vf_p_max, "largest host order");
    vf_cmd->add_option("--cap", vf_cap, "largest order on the dispatcher grid");
    vf_cmd->add_option("--m-max", vf_m_max, "largest left order for the witness grid");
    vf_cmd->add_option("--order-cap", vf_order_cap, "largest order vs the oracle");
    vf_cmd->add_option("--value-cap", vf_value_cap, "largest exact value vs the oracle");
    BudgetFlags vf_budget;
    vf_budget.attach(vf_cmd);

    // oracle
    auto* or_cmd = app.add_subcommand("oracle", "exhaustive ground-truth search");
    std::string or_op, or_tree, or_left, or_right;
    int or_p = 0;
    bool or_serial = false, or_unpruned = false;
    or_cmd->add_option("op", or_op, "ex | ramsey")->required();
    or_cmd->add_option("-p", or_p, "host order (ex)");
    or_cmd->add_option("--tree", or_tree, "tree tag (ex)");
    or_cmd->add_option("--left", or_left, "left tree tag (ramsey)");
    or_cmd->add_option("--right", or_right, "right tree tag (ramsey)");
    or_cmd->add_flag("--serial", or_serial, "single-threaded kernel");
    or_cmd->add_flag("--unpruned", or_unpruned, "full 2^E scan (ex, p <= 6)");
    BudgetFlags or_budget;
    or_budget.attach(or_cmd);

    // scan
    auto* sc_cmd = app.add_subcommand("scan", "conjecture scan (JSON lines)");
    std::string sc_conjecture;
    int sc_n = 0, sc_p_max = 8;
    sc_cmd->add_option("--conjecture", sc_conjecture, "C2.1 | C2.2 | C3.1")->required();
    sc_cmd->add_option("-n", sc_n, "tree order")->required();
    sc_cmd->add_option("--p-max", sc_p_max, "largest host order (ex-based scans)");
    BudgetFlags sc_budget;
    sc_budget.attach(sc_cmd);

    // export
    auto* xp_cmd = app.add_subcommand("export", "export a tree family");
    std::string xp_tree, xp_format = "json";
    xp_cmd->add_option("--tree", xp_tree, "tree tag")->required();
    xp_cmd->add_option("--format", xp_format, "json | graph6 | dot");

    // citations
    auto* ct_cmd = app.add_subcommand("citations", "list the statement catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (ex_cmd->parsed()) return run_ex(ex_family, ex_n, ex_p);
        if (rm_cmd->parsed()) {
            if (rm_left.empty() == rm_left_graph.empty())
                return fail("ramsey needs exactly one of --left / --left-graph");
            return run_ramsey(rm_left, rm_left_graph, rm_right, rm_certs);
        }
        if (wt_cmd->parsed())
            return run_witness(wt_construction, wt_params, wt_left, wt_right,
                               wt_validate, wt_format);
        if (vf_cmd->parsed()) {
            if (vf_what == "ex")
                return emit_check(check_formula_vs_oracle(
                    vf_n_min, vf_n_max < 0 ? 7 : vf_n_max, vf_p_max < 0 ? 8 : vf_p_max,
                    vf_budget.budget));
            if (vf_what == "turan")
                return emit_check(check_turan_invariants(vf_n_max < 0 ? 30 : vf_n_max,
                                                         vf_p_max < 0 ? 200 : vf_p_max));
            if (vf_what == "constructions")
                return emit_check(check_construction_attainment(
                    vf_n_max < 0 ? 8 : vf_n_max, vf_p_max < 0 ? 16 : vf_p_max));
            if (vf_what == "grid") return emit_check(check_ramsey_grid(vf_cap));
            if (vf_what == "consistency")
                return emit_check(check_ramsey_consistency(vf_cap));
            if (vf_what == "witnesses")
                return emit_check(
                    check_witness_grid(vf_m_max, vf_n_max < 0 ? 14 : vf_n_max));
            if (vf_what == "oracle")
                return emit_check(check_ramsey_vs_oracle(vf_order_cap, vf_value_cap,
                                                         vf_budget.budget));
            return fail("unknown verify suite '" + vf_what + "'");
        }
        if (or_cmd->parsed())
            return run_oracle(or_op, or_p, or_tree, or_left, or_right, or_serial,
                              or_unpruned, or_budget.budget);
        if (sc_cmd->parsed())
            return run_scan(sc_conjecture, sc_n, sc_p_max, sc_budget.budget);
        if (xp_cmd->parsed()) return run_export(xp_tree, xp_format);
        if (ct_cmd->parsed()) return run_citations();
        return fail("no subcommand");
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}
