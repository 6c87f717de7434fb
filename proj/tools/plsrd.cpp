// plsrd - construct, verify and exactly solve perfect locating signed Roman
// domination instances on the supported graph families.
//
// Exit codes: 0 ok, 1 invalid labeling / mismatch, 2 usage or parse error,
// 3 I/O failure, 4 budget-limited incumbent, 5 brute-force size guard.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plsrd/bounds.hpp"
#include "plsrd/construct.hpp"
#include "plsrd/errors.hpp"
#include "plsrd/family.hpp"
#include "plsrd/fixtures.hpp"
#include "plsrd/io.hpp"
#include "plsrd/solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace plsrd;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitUnproven = 4;
constexpr int kExitSizeGuard = 5;

int default_workers() {
    if (const char* env = std::getenv("PLSRD_THREADS")) {
        int value = std::atoi(env);
        if (value >= 1) return value;
    }
    return 1;
}

std::vector<Edge> parse_edge_flag(const std::string& text) {
    // "0-1,1-2,1-3"
    std::vector<Edge> edges;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        auto dash = token.find('-');
        if (dash == std::string::npos)
            throw ParseError("bad edge token '" + token + "', expected u-v");
        try {
            int u = std::stoi(token.substr(0, dash));
            int v = std::stoi(token.substr(dash + 1));
            edges.emplace_back(u, v);
        } catch (const std::exception&) {
            throw ParseError("bad edge token '" + token + "'");
        }
    }
    if (edges.empty()) throw ParseError("empty edge list");
    return edges;
}

FamilySpec spec_from_flags(const std::string& family, int n, int p,
                           const std::string& edges) {
    auto kind = family_from_name(family);
    if (!kind) throw InvalidFamilyParams("unknown family '" + family + "'");
    if (*kind == Family::ExplicitTree) {
        FamilySpec spec = FamilySpec::explicit_tree(parse_edge_flag(edges));
        check_params(spec);
        return spec;
    }
    FamilySpec spec;
    spec.kind = *kind;
    spec.n = n;
    spec.p = p;
    check_params(spec);
    return spec;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_text_file(out_path, text + "\n");
}

// ---------------------------------------------------------------------------
// verify

enum class RowStatus { Match, BoundConsistent, Mismatch, Skipped };

const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Match: return "Match";
        case RowStatus::BoundConsistent: return "BoundConsistent";
        case RowStatus::Mismatch: return "Mismatch";
        case RowStatus::Skipped: return "Skipped";
    }
    return "?";
}

struct VerifyRow {
    std::string family;
    int n = 0;
    std::optional<int> formula;  // exact value when the family has one
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<int> construction;
    std::optional<int> exact;  // solver optimum when proven within budget
    RowStatus status = RowStatus::Skipped;
    std::string note;
};

VerifyRow verify_one(const FamilySpec& spec, std::uint64_t solver_budget, int workers) {
    VerifyRow row;
    row.family = family_name(spec.kind);
    row.n = spec.n;

    BoundsRecord rec;
    try {
        rec = closed_form(spec);
    } catch (const Error& e) {
        row.status = RowStatus::Skipped;
        row.note = e.what();
        return row;
    }
    row.formula = rec.exact;
    row.lower = rec.lower;
    row.upper = rec.upper;

    std::optional<Labeling> certificate;
    try {
        if (spec.kind == Family::ExplicitTree) {
            const Graph t = generate(spec);
            ConstructionResult built = tree_construction(t, max_two_packing(t, true));
            row.construction = built.claimed_weight;
            certificate = std::move(built.labeling);
        } else {
            ConstructionResult built = construct(spec);
            row.construction = built.claimed_weight;
            certificate = std::move(built.labeling);
        }
    } catch (const Error& e) {
        row.status = RowStatus::Mismatch;
        row.note = e.what();
        return row;
    }

    if (solver_budget > 0) {
        SolveOptions opts;
        opts.algorithm = Algorithm::Backtracking;
        opts.workers = workers;
        opts.node_budget = solver_budget;
        opts.warm_start = certificate;
        SolveResult res = solve(generate(spec), opts);
        if (res.proven_optimal) row.exact = res.optimum;
    }

    if (row.formula) {
        const bool match = *row.formula == *row.construction &&
                           (!row.exact || *row.exact == *row.formula);
        row.status = match ? RowStatus::Match : RowStatus::Mismatch;
    } else {
        bool ok = row.upper && *row.construction == *row.upper;
        if (ok && row.exact) {
            if (row.lower && *row.exact < *row.lower) ok = false;
            if (row.upper && *row.exact > *row.upper) ok = false;
        }
        row.status = ok ? RowStatus::BoundConsistent : RowStatus::Mismatch;
    }
    return row;
}

void print_rows(const std::vector<VerifyRow>& rows) {
    auto cell = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    std::printf("%-12s %5s %9s %7s %7s %7s %7s  %s\n", "family", "n", "formula",
                "lower", "upper", "constr", "exact", "status");
    for (const VerifyRow& row : rows) {
        std::printf("%-12s %5d %9s %7s %7s %7s %7s  %s%s%s\n", row.family.c_str(), row.n,
                    cell(row.formula).c_str(), cell(row.lower).c_str(),
                    cell(row.upper).c_str(), cell(row.construction).c_str(),
                    cell(row.exact).c_str(), to_string(row.status),
                    row.note.empty() ? "" : "  # ", row.note.c_str());
    }
}

json rows_to_json(const std::vector<VerifyRow>& rows) {
    json arr = json::array();
    for (const VerifyRow& row : rows) {
        json j;
        j["family"] = row.family;
        j["n"] = row.n;
        j["formula"] = row.formula ? json(*row.formula) : json(nullptr);
        j["lower"] = row.lower ? json(*row.lower) : json(nullptr);
        j["upper"] = row.upper ? json(*row.upper) : json(nullptr);
        j["construction"] = row.construction ? json(*row.construction) : json(nullptr);
        j["exact"] = row.exact ? json(*row.exact) : json(nullptr);
        j["status"] = to_string(row.status);
        if (!row.note.empty()) j["note"] = row.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

// ---------------------------------------------------------------------------

struct Args {
    std::string family;
    int n = 0;
    int p = 0;
    std::string edges;
    std::string graph_path;
    std::string labeling_path;
    std::string warm_start_path;
    std::string out_path;
    std::string algo = "bnb";
    int threads = default_workers();
    std::uint64_t node_budget = 0;
    double time_budget = 0;
    int from = 0, to = 0;
    std::uint64_t solver_budget = 2'000'000;
    std::uint64_t seed = 1;
};

int run_generate(const Args& args) {
    FamilySpec spec = spec_from_flags(args.family, args.n, args.p, args.edges);
    emit(args.out_path, graph_to_canonical_json(generate(spec)));
    return kExitOk;
}

int run_construct(const Args& args) {
    FamilySpec spec = spec_from_flags(args.family, args.n, args.p, args.edges);
    ConstructionResult built;
    if (spec.kind == Family::ExplicitTree) {
        const Graph t = generate(spec);
        built = tree_construction(t, max_two_packing(t, t.order() <= 24));
    } else {
        built = construct(spec);
    }
    json sidecar;
    sidecar["family"] = family_name(spec.kind);
    sidecar["n"] = spec.n;
    if (spec.kind == Family::CompleteBipartite) sidecar["p"] = spec.p;
    sidecar["claimed_weight"] = built.claimed_weight;
    if (args.out_path.empty()) {
        std::cout << labeling_to_json(built.labeling) << "\n" << sidecar.dump() << "\n";
    } else {
        write_text_file(args.out_path, labeling_to_json(built.labeling) + "\n");
        write_text_file(args.out_path + ".meta.json", sidecar.dump() + "\n");
    }
    return kExitOk;
}

int run_validate(const Args& args) {
    const Graph g = read_graph_file(args.graph_path);
    const Labeling f = read_labeling_file(args.labeling_path);
    ValidationReport report = validate(g, f);  // LengthMismatch -> usage exit
    emit(args.out_path, report_to_json(report));
    return report.ok() ? kExitOk : kExitInvalid;
}

int run_solve(const Args& args) {
    const Graph g = read_graph_file(args.graph_path);
    SolveOptions opts;
    if (args.algo == "brute")
        opts.algorithm = Algorithm::BruteForce;
    else if (args.algo == "bnb")
        opts.algorithm = Algorithm::Backtracking;
    else
        throw InvalidOptions("--algo must be brute or bnb");
    opts.workers = args.threads;
    if (args.node_budget > 0) opts.node_budget = args.node_budget;
    if (args.time_budget > 0) opts.time_budget_seconds = args.time_budget;
    if (!args.warm_start_path.empty())
        opts.warm_start = read_labeling_file(args.warm_start_path);
    SolveResult result = solve(g, opts);
    emit(args.out_path, solve_result_to_json(result));
    return result.proven_optimal ? kExitOk : kExitUnproven;
}

int run_bounds(const Args& args) {
    const Graph g = read_graph_file(args.graph_path);
    const int n = g.order();
    BoundsRecord rec;
    rec.upper = n;
    rec.provenance["upper"] = "all-ones";
    json extra;
    extra["all_ones_upper"] = n;
    if (g.is_regular(3)) {
        rec.lower = cubic_lower_bound(g);
        rec.provenance["lower"] = "cubic-lower-bound";
    }
    const bool exact_packing = n <= 24;
    PackingSet packing = max_two_packing(g, exact_packing);
    json packing_json;
    packing_json["vertices"] = packing.vertices;
    packing_json["size"] = packing.size();
    packing_json["mode"] = exact_packing ? "exact" : "greedy";
    if (g.min_degree() >= 2) {
        PackingBound bound = packing_upper_bound(g, packing);
        packing_json["upper"] = bound.upper;
        packing_json["via"] = "min-degree-2";
        if (bound.upper < *rec.upper) {
            rec.upper = bound.upper;
            rec.provenance["upper"] = "two-packing-upper-bound";
        }
    } else if (g.edge_count() == n - 1 && n >= 2) {
        // Trees fall back to the leaf/support labeling rule.
        try {
            ConstructionResult built = tree_construction(g, packing);
            packing_json["upper"] = built.claimed_weight;
            packing_json["via"] = "tree";
            if (built.claimed_weight < *rec.upper) {
                rec.upper = built.claimed_weight;
                rec.provenance["upper"] = "two-packing-construction";
            }
        } catch (const NotATree&) {
            packing_json["upper"] = nullptr;
        }
    } else {
        packing_json["upper"] = nullptr;
    }
    json out = json::parse(bounds_record_to_json(rec));
    out["all_ones_upper"] = n;
    out["packing"] = std::move(packing_json);
    emit(args.out_path, out.dump());
    return kExitOk;
}

int run_verify(const Args& args) {
    if (args.from > args.to || args.from < 0)
        throw InvalidOptions("--from/--to range is empty or negative");
    auto kind = family_from_name(args.family);
    if (!kind) throw InvalidFamilyParams("unknown family '" + args.family + "'");
    std::vector<VerifyRow> rows;
    std::mt19937_64 rng(args.seed);
    for (int n = args.from; n <= args.to; ++n) {
        FamilySpec spec;
        try {
            if (*kind == Family::ExplicitTree) {
                spec = FamilySpec::explicit_tree(fixtures::random_tree(n, rng).edges());
            } else {
                spec.kind = *kind;
                spec.n = n;
                spec.p = args.p;
            }
            check_params(spec);
        } catch (const Error& e) {
            VerifyRow row;
            row.family = family_name(*kind);
            row.n = n;
            row.status = RowStatus::Skipped;
            row.note = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        rows.push_back(verify_one(spec, args.solver_budget, args.threads));
    }
    print_rows(rows);
    if (!args.out_path.empty()) write_text_file(args.out_path, rows_to_json(rows).dump() + "\n");
    const bool mismatch = std::any_of(rows.begin(), rows.end(), [](const VerifyRow& r) {
        return r.status == RowStatus::Mismatch;
    });
    return mismatch ? kExitInvalid : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect locating signed Roman domination toolkit"};
    app.require_subcommand(1);
    Args args;

    auto* generate_cmd = app.add_subcommand("generate", "Write a family instance as canonical graph JSON");
    generate_cmd->add_option("--family", args.family, "path|cycle|complete|bipartite|star|wheel|ladder|prism|grid3|flowersnark|tree")->required();
    generate_cmd->add_option("--n", args.n, "family size parameter");
    generate_cmd->add_option("--p", args.p, "bipartite part size p (2 <= p <= n)");
    generate_cmd->add_option("--edges", args.edges, "tree edge list, e.g. 0-1,1-2,1-3");
    generate_cmd->add_option("--out", args.out_path, "output file (default stdout)");

    auto* construct_cmd = app.add_subcommand("construct", "Emit the constructive certificate for a family instance");
    construct_cmd->add_option("--family", args.family)->required();
    construct_cmd->add_option("--n", args.n);
    construct_cmd->add_option("--p", args.p);
    construct_cmd->add_option("--edges", args.edges, "tree edge list; labeled via its maximum 2-packing");
    construct_cmd->add_option("--out", args.out_path, "labeling file; sidecar goes to <out>.meta.json");

    auto* validate_cmd = app.add_subcommand("validate", "Check conditions C1-C3 for a labeling");
    validate_cmd->add_option("--graph", args.graph_path)->required();
    validate_cmd->add_option("--labeling", args.labeling_path)->required();
    validate_cmd->add_option("--out", args.out_path, "violation report file (default stdout)");

    auto* solve_cmd = app.add_subcommand("solve", "Compute the optimum weight exactly");
    solve_cmd->add_option("--graph", args.graph_path)->required();
    solve_cmd->add_option("--algo", args.algo, "brute (n <= 16) or bnb (default)");
    solve_cmd->add_option("--threads", args.threads, "worker count (default $PLSRD_THREADS or 1)");
    solve_cmd->add_option("--node-budget", args.node_budget, "stop after this many search nodes");
    solve_cmd->add_option("--time-budget", args.time_budget, "stop after this many seconds");
    solve_cmd->add_option("--warm-start", args.warm_start_path, "labeling file used as initial incumbent");
    solve_cmd->add_option("--out", args.out_path, "result file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Reproduce formula vs construction vs solver per n");
    verify_cmd->add_option("--family", args.family)->required();
    verify_cmd->add_option("--from", args.from)->required();
    verify_cmd->add_option("--to", args.to)->required();
    verify_cmd->add_option("--p", args.p, "bipartite part size");
    verify_cmd->add_option("--seed", args.seed, "seed for tree fixtures");
    verify_cmd->add_option("--solver-budget", args.solver_budget,
                           "node budget per row, 0 disables solving (default 2e6)");
    verify_cmd->add_option("--threads", args.threads);
    verify_cmd->add_option("--out", args.out_path, "also write rows as JSON");

    auto* bounds_cmd = app.add_subcommand("bounds", "Emit all applicable bounds for a graph");
    bounds_cmd->add_option("--graph", args.graph_path)->required();
    bounds_cmd->add_option("--out", args.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate_cmd->parsed()) return run_generate(args);
        if (construct_cmd->parsed()) return run_construct(args);
        if (validate_cmd->parsed()) return run_validate(args);
        if (solve_cmd->parsed()) return run_solve(args);
        if (verify_cmd->parsed()) return run_verify(args);
        if (bounds_cmd->parsed()) return run_bounds(args);
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CertificateInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        // InvalidFamilyParams, NotATree, LengthMismatch, InvalidOptions, ...
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
