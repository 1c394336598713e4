#include "ramsey/certificate.hpp"

#include <chrono>
#include <ctime>

#include "ramsey/graph6.hpp"
#include "ramsey/io.hpp"
#include "ramsey/version.hpp"

namespace ramsey {

namespace {

std::string utc_now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string symmetry_name(SymmetryMode m) {
    return m == SymmetryMode::kLexLeader ? "lex-leader" : "none";
}

std::string edge_order_name(EdgeOrder o) {
    return o == EdgeOrder::kDegreeGuided ? "degree-guided" : "natural";
}

}  // namespace

nlohmann::json search_options_to_json(const SearchOptions& options) {
    return nlohmann::json{{"node_budget", options.node_budget},
                          {"time_budget_seconds", options.time_budget_seconds},
                          {"symmetry", symmetry_name(options.symmetry)},
                          {"dominance", options.dominance},
                          {"edge_order", edge_order_name(options.edge_order)},
                          {"workers", options.workers}};
}

nlohmann::json exhaustion_to_json(const ExhaustionCertificate& record) {
    return nlohmann::json{
        {"host", {{"parts", record.part_sizes}}},
        {"n", record.n},
        {"cycle_length", record.cycle_len},
        {"nodes_explored", record.nodes_explored},
        {"prunes",
         {{"stripe", record.prunes.stripe},
          {"cycle", record.prunes.cycle},
          {"dominance", record.prunes.dominance},
          {"symmetry", record.prunes.symmetry}}},
        {"wall_seconds", record.wall_seconds},
        {"options", search_options_to_json(record.options)}};
}

Certificate build_certificate(int j, int n, const SearchOptions& options) {
    Evaluation eval = ramsey_value(j, n);
    if (eval.value.infinite)
        throw std::invalid_argument("bipartite hosts have no finite value to certify");

    Certificate cert;
    cert.j = j;
    cert.n = n;
    cert.claimed = eval.value;
    cert.regime = eval.regime;
    cert.contested = eval.contested;
    cert.options = options;

    if (eval.value.t >= 2) {
        cert.lower_bound = lower_bound_coloring(j, n);
        cert.lower_report = verify_good(*cert.lower_bound, n);
        if (!cert.lower_report.is_good)
            throw std::logic_error("lower-bound coloring failed verification");
    }

    UpperBoundResult upper = certify_upper_bound(j, n, options);
    cert.upper_method = upper.status;
    cert.upper_note = upper.note;
    if (upper.status == UpperBoundResult::Status::kExhausted)
        cert.exhaustion = upper.search->record;
    return cert;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["schema"] = "ramsey-cert/1";
    j["j"] = cert.j;
    j["n"] = cert.n;
    if (cert.claimed.infinite)
        j["claimed_value"] = "infinite";
    else
        j["claimed_value"] = cert.claimed.t;
    j["regime"] = regime_name(cert.regime);
    j["contested"] = cert.contested;

    if (cert.lower_bound) {
        nlohmann::json lb;
        lb["host"] = shape_to_json(cert.lower_bound->shape);
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : cert.lower_bound->red.edges()) edges.push_back({u, v});
        lb["red_edges"] = edges;
        if (cert.lower_bound->shape.total_vertices() <= 62)
            lb["red_graph6"] = encode_graph6(cert.lower_bound->red);
        else
            lb["red_graph6"] = nullptr;
        lb["report"] = report_to_json(cert.lower_report);
        j["lower_bound"] = lb;
    } else {
        j["lower_bound"] = nullptr;
    }

    nlohmann::json ub;
    if (cert.upper_method == UpperBoundResult::Status::kExhausted) {
        ub["method"] = "exhausted";
        ub["exhaustion"] = exhaustion_to_json(*cert.exhaustion);
        ub["citation"] = nullptr;
    } else {
        ub["method"] = "formula_trusted";
        ub["exhaustion"] = nullptr;
        ub["citation"] = cert.upper_note.empty()
                             ? "closed-form value; exhaustion above desk scale"
                             : cert.upper_note;
    }
    j["upper_bound"] = ub;

    j["tool_version"] = kToolVersion;
    j["created_utc"] = utc_now_iso8601();
    j["search_options"] = search_options_to_json(cert.options);
    return j;
}

std::vector<std::string> validate_certificate(const nlohmann::json& j) {
    std::vector<std::string> problems;
    auto fail = [&](const std::string& what) { problems.push_back(what); };

    try {
        if (!j.contains("schema") || j["schema"] != "ramsey-cert/1") {
            fail("unknown or missing schema");
            return problems;
        }
        int cj = j.at("j").get<int>();
        int cn = j.at("n").get<int>();
        Evaluation eval = ramsey_value(cj, cn);

        if (eval.value.infinite) {
            if (j.at("claimed_value") != "infinite") fail("claimed value should be infinite");
        } else if (!j.at("claimed_value").is_number_integer() ||
                   j.at("claimed_value").get<int>() != eval.value.t) {
            fail("claimed value disagrees with the formula");
        }
        if (j.at("regime").get<std::string>() != regime_name(eval.regime))
            fail("regime tag disagrees with the formula");
        if (j.at("contested").get<bool>() != eval.contested) fail("contested flag disagrees");

        bool expect_lower = !eval.value.infinite && eval.value.t >= 2;
        if (expect_lower) {
            if (j.at("lower_bound").is_null()) {
                fail("lower bound witness missing");
                return problems;
            }
            const auto& lb = j.at("lower_bound");
            Coloring coloring{shape_from_json(lb.at("host"))};
            for (const auto& e : lb.at("red_edges")) coloring.red.add(e[0].get<int>(), e[1].get<int>());

            PartiteShape expected = PartiteShape::uniform(cj, eval.value.t - 1);
            if (!(coloring.shape == expected)) fail("witness host is not K_{j x (m-1)}");
            if (!lb.at("red_graph6").is_null()) {
                EdgeSet decoded =
                    decode_graph6(lb.at("red_graph6").get<std::string>(), coloring.shape);
                if (!(decoded == coloring.red)) fail("graph6 and edge list disagree");
            }
            GoodnessReport report = verify_good(coloring, cn);
            if (!report.is_good) fail("embedded coloring is not good");
            if (lb.at("report").at("nu_red").get<int>() != report.nu_red)
                fail("recorded matching number is wrong");
            if (lb.at("report").at("is_good").get<bool>() != report.is_good)
                fail("recorded is_good flag is wrong");
        } else if (!j.at("lower_bound").is_null()) {
            fail("unexpected lower bound witness");
        }

        const auto& ub = j.at("upper_bound");
        std::string method = ub.at("method").get<std::string>();
        if (method == "exhausted") {
            if (ub.at("exhaustion").is_null()) {
                fail("exhausted method without an exhaustion record");
            } else {
                const auto& ex = ub.at("exhaustion");
                PartiteShape host = shape_from_json(ex.at("host"));
                PartiteShape expected = PartiteShape::uniform(cj, eval.value.t);
                if (!(host == expected)) fail("exhaustion host is not K_{j x m}");
                if (ex.at("n").get<int>() != cn) fail("exhaustion stripe size mismatch");
                if (ex.at("nodes_explored").get<long long>() < 1)
                    fail("exhaustion record claims zero nodes");
            }
        } else if (method != "formula_trusted") {
            fail("unknown upper bound method");
        }

        if (!j.contains("tool_version") || !j["tool_version"].is_string())
            fail("missing tool version");
    } catch (const std::exception& e) {
        fail(std::string("malformed certificate: ") + e.what());
    }
    return problems;
}

}  // namespace ramsey
