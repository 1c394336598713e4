#include <stdexcept>
#include "doctest.h"
#include "oracles.hpp"
#include "ramsey/cnf.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

bool truth_table_satisfiable(const CnfInstance& cnf, std::vector<bool>* model = nullptr) {
    size_t vars = cnf.variables.size();
    REQUIRE(vars <= 20);
    for (uint64_t mask = 0; mask < (1ull << vars); ++mask) {
        std::vector<bool> assignment(vars);
        for (size_t i = 0; i < vars; ++i) assignment[i] = (mask >> i) & 1u;
        if (evaluate_cnf(cnf, assignment)) {
            if (model) *model = assignment;
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("clause counts on the 8-clique instance") {
    CnfInstance cnf = build_cnf(PartiteShape::uniform(8, 1), 2, 7);
    CHECK(cnf.variables.size() == 28);
    CHECK(cnf.stripe_clauses.size() == 210);  // disjoint edge pairs in K8
    CHECK(cnf.cycle_clauses.size() == 2880);  // 7-cycles: C(8,7) * 6!/2
    for (const auto& clause : cnf.cycle_clauses) {
        CHECK(clause.size() == 7);
        for (int lit : clause) CHECK(lit > 0);
    }
    for (const auto& clause : cnf.stripe_clauses) {
        CHECK(clause.size() == 2);
        for (int lit : clause) CHECK(lit < 0);
    }
}

TEST_CASE("five singletons yield no cycle clauses and a trivially satisfiable formula") {
    CnfInstance cnf = build_cnf(PartiteShape::uniform(5, 1), 2, 7);
    CHECK(cnf.cycle_clauses.empty());
    std::vector<bool> all_blue(cnf.variables.size(), false);
    CHECK(evaluate_cnf(cnf, all_blue));
}

TEST_CASE("dimacs shape") {
    CnfInstance cnf = build_cnf(PartiteShape({2, 2}), 1, 4);
    std::string text = to_dimacs(cnf);
    CHECK(text.find("p cnf 4 ") != std::string::npos);
    CHECK(text.back() == '\n');
    std::string varmap = variable_map_json(cnf);
    CHECK(varmap.find("ramsey-varmap/1") != std::string::npos);
}

TEST_CASE("clause cap aborts oversized encodings") {
    CHECK_THROWS_AS(build_cnf(PartiteShape::uniform(8, 1), 2, 7, 100), std::length_error);
}

TEST_CASE("satisfiability matches the native search verdict") {
    for (const auto& sizes : oracles::shapes_with_host_edges_up_to(16)) {
        PartiteShape shape(sizes);
        for (int n = 1; n <= 3; ++n) {
            CnfInstance cnf = build_cnf(shape, n, 7);
            SearchOptions opt;
            SearchResult r = find_good_coloring(shape, n, 7, opt);
            REQUIRE(r.status != SearchStatus::kBudgetExceeded);
            std::vector<bool> model;
            bool sat = truth_table_satisfiable(cnf, &model);
            CAPTURE(shape.describe());
            CAPTURE(n);
            CHECK(sat == (r.status == SearchStatus::kGoodColoring));

            // decode an external model and re-check it with the detectors
            if (sat) {
                Coloring decoded = decode_model(cnf, model);
                CHECK(verify_good(decoded, n).is_good);
            }
        }
    }
}

TEST_CASE("decode_model rejects wrong arity") {
    CnfInstance cnf = build_cnf(PartiteShape({2, 2}), 1, 4);
    CHECK_THROWS_AS(decode_model(cnf, std::vector<bool>(3)), std::invalid_argument);
}
