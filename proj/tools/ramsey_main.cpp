// Command-line front end: formula queries, table reproduction, extremal
// construction emission, coloring verification, end-to-end certification,
// raw searches, and DIMACS export.
//
// Exit codes: 0 success/good, 1 pattern-found/not-good, 2 usage or parse
// error, 3 regime without a witness, 4 budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/cnf.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/io.hpp"
#include "ramsey/version.hpp"

namespace {

using namespace ramsey;

constexpr int kExitGood = 0;
constexpr int kExitPatternFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoWitness = 3;
constexpr int kExitBudget = 4;

int env_workers() {
    const char* raw = std::getenv("RAMSEY_THREADS");
    if (!raw) return 1;
    int w = std::atoi(raw);
    return w >= 1 ? w : 1;
}

struct ShapeArgs {
    int j = 0;
    int t = 1;
    std::string parts;  // "a,b,c" overrides j/t

    PartiteShape resolve() const {
        if (!parts.empty()) {
            std::vector<int> sizes;
            std::string cur;
            for (char c : parts + ",") {
                if (c == ',') {
                    if (!cur.empty()) sizes.push_back(std::stoi(cur));
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            return PartiteShape(sizes);
        }
        if (j < 1) throw std::invalid_argument("supply --j or --parts");
        return PartiteShape::uniform(j, t);
    }
};

void add_shape_options(CLI::App* cmd, ShapeArgs& args) {
    cmd->add_option("--j", args.j, "number of parts");
    cmd->add_option("--t", args.t, "vertices per part")->default_val(1);
    cmd->add_option("--parts", args.parts, "explicit part sizes, e.g. 2,2,2");
}

struct SearchArgs {
    long long budget = 2'000'000'000;
    double time_budget = 3600.0;
    std::string symmetry = "lex-leader";
    bool dominance = false;
    bool no_dominance = false;
    std::string edge_order = "degree-guided";

    SearchOptions resolve(bool dominance_default) const {
        SearchOptions opt;
        opt.node_budget = budget;
        opt.time_budget_seconds = time_budget;
        opt.symmetry = (symmetry == "none") ? SymmetryMode::kNone : SymmetryMode::kLexLeader;
        opt.dominance = dominance ? true : (no_dominance ? false : dominance_default);
        opt.edge_order =
            (edge_order == "natural") ? EdgeOrder::kNatural : EdgeOrder::kDegreeGuided;
        opt.workers = env_workers();
        return opt;
    }
};

void add_search_options(CLI::App* cmd, SearchArgs& args) {
    cmd->add_option("--budget", args.budget, "node budget");
    cmd->add_option("--time-budget", args.time_budget, "wall-clock budget in seconds");
    cmd->add_option("--symmetry", args.symmetry, "none | lex-leader")
        ->check(CLI::IsMember({"none", "lex-leader"}));
    cmd->add_flag("--dominance", args.dominance, "restrict to maximal red sets");
    cmd->add_flag("--no-dominance", args.no_dominance, "disable the maximal-red restriction");
    cmd->add_option("--edge-order", args.edge_order, "natural | degree-guided")
        ->check(CLI::IsMember({"natural", "degree-guided"}));
}

std::string value_cell(const Evaluation& eval, bool strict) {
    if (strict && eval.contested) return "contested";
    return eval.value.infinite ? "inf" : std::to_string(eval.value.t);
}

int cmd_formula(int j, int n, bool strict) {
    Evaluation eval = ramsey_value(j, n);
    if (strict && eval.contested) {
        std::cout << "contested (" << regime_name(eval.regime)
                  << "): published case listing conflicts for this cell; listed-order value is "
                  << eval.value.str() << "\n";
        return kExitGood;
    }
    std::cout << eval.value.str() << " (" << regime_name(eval.regime) << ")";
    if (eval.contested) std::cout << "  [contested]";
    std::cout << "\n";
    return kExitGood;
}

int cmd_table(int j_max, int n_max, const std::string& format, bool strict) {
    RegimeTable table = regime_table(j_max, n_max);
    if (format == "json") {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& cell : table.cells) {
            nlohmann::json c;
            c["j"] = cell.j;
            c["n"] = cell.n;
            c["value"] = cell.eval.value.infinite ? nlohmann::json("infinite")
                                                  : nlohmann::json(cell.eval.value.t);
            c["regime"] = regime_name(cell.eval.regime);
            c["contested"] = cell.eval.contested;
            cells.push_back(c);
        }
        nlohmann::json boundaries = nlohmann::json::array();
        for (auto [j, n] : table.regime_boundaries) boundaries.push_back({j, n});
        nlohmann::json out{{"cells", cells}, {"regime_boundaries", boundaries}};
        std::cout << out.dump(2) << "\n";
        return kExitGood;
    }
    std::cout << "j\\n";
    for (int n = 2; n <= n_max; ++n) std::cout << "\t" << n;
    std::cout << "\n";
    for (int j = 2; j <= j_max; ++j) {
        std::cout << j;
        for (int n = 2; n <= n_max; ++n) std::cout << "\t" << value_cell(table.at(j, n).eval, strict);
        std::cout << "\n";
    }
    return kExitGood;
}

int cmd_construct(int j, int n, std::optional<int> t, const std::string& out_dir) {
    Evaluation eval = ramsey_value(j, n);
    if (!eval.value.infinite && eval.value.t == 1) {
        std::cerr << "value 1: empty host, nothing to construct\n";
        return kExitNoWitness;
    }
    std::optional<Coloring> coloring = lower_bound_coloring(j, n, t);
    if (!coloring) {
        std::cerr << "no witness for this cell\n";
        return kExitNoWitness;
    }
    GoodnessReport report = verify_good(*coloring, n);
    if (!report.is_good) {
        std::cerr << "construction failed verification; refusing to write\n";
        return kExitPatternFound;
    }

    std::filesystem::create_directories(out_dir);
    std::string base = out_dir + "/j" + std::to_string(j) + "_n" + std::to_string(n);
    nlohmann::json cj = coloring_to_json(*coloring);
    cj["n"] = n;
    cj["report"] = report_to_json(report);
    write_text_file(base + ".coloring.json", cj.dump(2) + "\n");
    if (coloring->shape.total_vertices() <= 62) {
        write_text_file(base + ".red.g6", encode_graph6(coloring->red) + "\n");
        write_text_file(base + ".red.g6.shape.json", shape_to_json(coloring->shape).dump() + "\n");
    }
    std::cout << "wrote " << base << ".coloring.json (host " << coloring->shape.describe()
              << ", nu_red=" << report.nu_red << ")\n";
    return kExitGood;
}

int cmd_verify_coloring(const std::string& path, int n, int cycle_len) {
    nlohmann::json j = nlohmann::json::parse(read_text_file(path));
    Coloring coloring = coloring_from_json(j);
    GoodnessReport report = verify_good(coloring, n, cycle_len);
    std::cout << report_to_json(report).dump(2) << "\n";
    return report.is_good ? kExitGood : kExitPatternFound;
}

int cmd_verify_cert(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_text_file(path));
    auto problems = validate_certificate(j);
    if (problems.empty()) {
        std::cout << "certificate valid\n";
        return kExitGood;
    }
    for (const auto& p : problems) std::cout << "invalid: " << p << "\n";
    return kExitPatternFound;
}

int cmd_certify(int j, int n, const SearchArgs& sargs, const std::string& out_path) {
    Evaluation eval = ramsey_value(j, n);
    if (eval.value.infinite) {
        std::cerr << "infinite value: no finite upper bound to certify\n";
        return kExitNoWitness;
    }
    // dominance and symmetry on by default for the certified exhaustions
    SearchOptions opt = sargs.resolve(true);
    Certificate cert = build_certificate(j, n, opt);
    nlohmann::json out = certificate_to_json(cert);
    std::string text = out.dump(2) + "\n";
    if (!out_path.empty()) {
        write_text_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << text;
    }
    std::cout << "claimed " << cert.claimed.str() << ", lower bound "
              << (cert.lower_bound ? "verified" : "not needed") << ", upper bound "
              << (cert.upper_method == UpperBoundResult::Status::kExhausted ? "exhausted"
                                                                            : "formula_trusted")
              << "\n";
    if (cert.upper_method != UpperBoundResult::Status::kExhausted && !cert.upper_note.empty())
        std::cout << "note: " << cert.upper_note << "\n";
    return kExitGood;
}

int cmd_search(const ShapeArgs& shape_args, int n, int cycle_len, const SearchArgs& sargs,
               const std::string& out_path) {
    PartiteShape shape = shape_args.resolve();
    SearchOptions opt = sargs.resolve(false);
    SearchResult result = find_good_coloring(shape, n, cycle_len, opt);
    std::cout << shape.describe() << " n=" << n << ": ";
    std::cout << search_status_name(result.status) << " after " << result.record.nodes_explored
              << " nodes in " << result.record.wall_seconds << "s (prunes: stripe "
              << result.record.prunes.stripe << ", cycle " << result.record.prunes.cycle
              << ", dominance " << result.record.prunes.dominance << ", symmetry "
              << result.record.prunes.symmetry << ")\n";
    if (result.status == SearchStatus::kGoodColoring && !out_path.empty()) {
        nlohmann::json cj = coloring_to_json(*result.coloring);
        cj["n"] = n;
        write_text_file(out_path, cj.dump(2) + "\n");
        std::cout << "wrote " << out_path << "\n";
    }
    if (result.status == SearchStatus::kExhausted && !out_path.empty()) {
        write_text_file(out_path, exhaustion_to_json(result.record).dump(2) + "\n");
        std::cout << "wrote " << out_path << "\n";
    }
    if (result.status == SearchStatus::kBudgetExceeded) return kExitBudget;
    return result.status == SearchStatus::kGoodColoring ? kExitGood : kExitPatternFound;
}

int cmd_export_cnf(const ShapeArgs& shape_args, int n, int cycle_len, size_t clause_cap,
                   const std::string& out_path) {
    PartiteShape shape = shape_args.resolve();
    CnfInstance cnf = build_cnf(shape, n, cycle_len, clause_cap);
    write_text_file(out_path, to_dimacs(cnf));
    write_text_file(out_path + ".vars.json", variable_map_json(cnf));
    std::cout << "wrote " << out_path << " (" << cnf.variables.size() << " vars, "
              << cnf.clause_count() << " clauses) and " << out_path << ".vars.json\n";
    return kExitGood;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"size multipartite Ramsey number verifier: stripes vs 7-cycles"};
    app.set_version_flag("--version", ramsey::kToolVersion);
    app.require_subcommand(1);

    int j = 0, n = 0, j_max = 0, n_max = 0, cycle_len = 7;
    int construct_t = 0;
    bool strict = false;
    std::string format = "tsv", coloring_path, cert_path;
    std::string construct_out = "out", certify_out, search_out, cnf_out;
    ShapeArgs shape_args;
    SearchArgs search_args;
    size_t clause_cap = ramsey::kDefaultClauseCap;

    auto* formula = app.add_subcommand("formula", "evaluate one cell of the value table");
    formula->add_option("--j", j)->required();
    formula->add_option("--n", n)->required();
    formula->add_flag("--strict", strict, "report contested cells instead of resolving them");

    auto* table = app.add_subcommand("table", "print the value table");
    table->add_option("--j-max", j_max)->required();
    table->add_option("--n-max", n_max)->required();
    table->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    table->add_flag("--strict", strict);

    auto* construct = app.add_subcommand("construct", "emit the verified extremal coloring");
    construct->add_option("--j", j)->required();
    construct->add_option("--n", n)->required();
    construct->add_option("--t", construct_t, "host multiplier (required for j = 2)");
    construct->add_option("--out", construct_out, "output directory");

    auto* verify = app.add_subcommand("verify", "re-check a coloring or certificate file");
    verify->add_option("--coloring", coloring_path, "coloring JSON file");
    verify->add_option("--cert", cert_path, "certificate JSON file");
    verify->add_option("--n", n, "stripe size (for colorings)");
    verify->add_option("--cycle-length", cycle_len)->default_val(7);

    auto* certify = app.add_subcommand("certify", "two-sided certificate for one cell");
    certify->add_option("--j", j)->required();
    certify->add_option("--n", n)->required();
    certify->add_option("--out", certify_out, "certificate output file");
    add_search_options(certify, search_args);

    auto* search = app.add_subcommand("search", "exhaustive good-coloring search on one host");
    add_shape_options(search, shape_args);
    search->add_option("--n", n)->required();
    search->add_option("--cycle-length", cycle_len)->default_val(7);
    search->add_option("--out", search_out, "write the found coloring / exhaustion record");
    add_search_options(search, search_args);

    auto* export_cnf = app.add_subcommand("export-cnf", "DIMACS encoding of one host");
    add_shape_options(export_cnf, shape_args);
    export_cnf->add_option("--n", n)->required();
    export_cnf->add_option("--cycle-length", cycle_len)->default_val(7);
    export_cnf->add_option("--clause-cap", clause_cap);
    export_cnf->add_option("--out", cnf_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (formula->parsed()) return cmd_formula(j, n, strict);
        if (table->parsed()) return cmd_table(j_max, n_max, format, strict);
        if (construct->parsed())
            return cmd_construct(j, n,
                                 construct_t > 0 ? std::optional<int>(construct_t) : std::nullopt,
                                 construct_out);
        if (verify->parsed()) {
            if (!cert_path.empty()) return cmd_verify_cert(cert_path);
            if (coloring_path.empty() || n < 1) {
                std::cerr << "verify needs --cert, or --coloring with --n\n";
                return kExitUsage;
            }
            return cmd_verify_coloring(coloring_path, n, cycle_len);
        }
        if (certify->parsed()) return cmd_certify(j, n, search_args, certify_out);
        if (search->parsed()) return cmd_search(shape_args, n, cycle_len, search_args, search_out);
        if (export_cnf->parsed())
            return cmd_export_cnf(shape_args, n, cycle_len, clause_cap, cnf_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
