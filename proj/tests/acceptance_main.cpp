// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Runtime limits are enforced in-process with steady-clock timing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/cnf.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, const char* title, bool ok, double elapsed) {
    std::printf("criterion %d %s: %s (%.2fs)\n", id, ok ? "PASS" : "FAIL", title, elapsed);
    if (!ok) ++failures;
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    notes.clear();
}

void note(const std::string& s) { notes.push_back(s); }

// Independent transcription of the two published case listings, first match
// wins. Kept separate from the library's evaluator on purpose.
std::optional<long long> listed_value(int j, int n) {
    if (j == 2) return std::nullopt;  // infinite row
    if (j <= 4) {
        if (n == 2 && j == 4) return 2;
        if (n == 4 && j == 3) return 3;
        if (j == 3 && n >= 3) return n;
        return (n + 1 + 1) / 2;  // ceil((n+1)/2)
    }
    if (n == 2) return j >= 8 ? 1 : 2;
    if (n == 3) return j >= 9 ? 1 : 2;
    if (n >= 4 && j >= 2 * n + 3) return 1;
    if (n >= 4 && n + 2 <= j && j <= 2 * n + 2) return 2;
    if (n == j - 1 || n == j) return 3;
    return (2LL * (n + 1) + j - 1) / j;  // ceil(2(n+1)/j), n > j here
}

bool criterion1_formula_table() {
    auto start = Clock::now();
    bool ok = true;
    for (int j = 2; j <= 30; ++j) {
        for (int n = 2; n <= 30; ++n) {
            Evaluation eval = ramsey_value(j, n);
            auto expected = listed_value(j, n);
            bool cell_ok = expected ? (!eval.value.infinite && eval.value.t == *expected)
                                    : eval.value.infinite;
            if (!cell_ok) {
                ok = false;
                note("cell j=" + std::to_string(j) + " n=" + std::to_string(n) + " mismatch");
            }
        }
    }
    struct Spot {
        int j, n, value;
    };
    for (Spot s : {Spot{5, 4, 3}, Spot{5, 10, 5}, Spot{6, 2, 2}, Spot{8, 2, 1}, Spot{9, 3, 1},
                   Spot{4, 9, 5}, Spot{3, 7, 7}}) {
        if (ramsey_value(s.j, s.n).value != RamseyValue::finite(s.value)) {
            ok = false;
            note("spot value mismatch at j=" + std::to_string(s.j));
        }
    }
    if (!ramsey_value(2, 17).value.infinite) ok = false;
    double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        ok = false;
        note("runtime over 1s");
    }
    report(1, "formula table reproduction (2<=j,n<=30 + spot values, <1s)", ok, elapsed);
    return ok;
}

bool criterion2_lower_bounds() {
    auto start = Clock::now();
    bool ok = true;
    int cells = 0;
    for (int j = 3; j <= 12; ++j) {
        for (int n = 2; n <= 12; ++n) {
            Evaluation eval = ramsey_value(j, n);
            if (eval.value.t < 2) continue;
            ++cells;
            auto coloring = lower_bound_coloring(j, n);
            if (!coloring || !(coloring->shape == PartiteShape::uniform(j, eval.value.t - 1))) {
                ok = false;
                note("missing witness at j=" + std::to_string(j) + " n=" + std::to_string(n));
                continue;
            }
            GoodnessReport r = verify_good(*coloring, n);
            if (!(r.is_good && r.nu_red <= n - 1)) {
                ok = false;
                note("bad witness at j=" + std::to_string(j) + " n=" + std::to_string(n));
            }
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        ok = false;
        note("runtime over 10s");
    }
    note(std::to_string(cells) + " witnessed cells");
    report(2, "lower-bound witnesses good at t=m-1 (3<=j<=12, 2<=n<=12, <10s)", ok, elapsed);
    return ok;
}

bool criterion3_exhaustions() {
    auto start = Clock::now();
    bool ok = true;

    SearchOptions certified;
    certified.symmetry = SymmetryMode::kLexLeader;
    certified.dominance = true;

    struct Target {
        int j, t, n;
        double limit;
    };
    const Target targets[] = {
        {8, 1, 2, 1.0}, {9, 1, 3, 60.0}, {5, 2, 2, 60.0},
        {6, 2, 2, 60.0}, {7, 2, 2, 60.0}, {5, 2, 3, 600.0},
    };
    for (const Target& tg : targets) {
        auto t0 = Clock::now();
        SearchResult r =
            find_good_coloring(PartiteShape::uniform(tg.j, tg.t), tg.n, 7, certified);
        double took = seconds_since(t0);
        bool good = r.status == SearchStatus::kExhausted && took < tg.limit;
        if (!good) {
            ok = false;
            note("exhaustion failed for j=" + std::to_string(tg.j) + " t=" + std::to_string(tg.t) +
                 " n=" + std::to_string(tg.n) + " (" + search_status_name(r.status) + ", " +
                 std::to_string(took) + "s)");
        } else {
            note("exhausted K{" + std::to_string(tg.j) + "x" + std::to_string(tg.t) +
                 "} n=" + std::to_string(tg.n) + " in " + std::to_string(took) + "s, " +
                 std::to_string(r.record.nodes_explored) + " nodes");
        }
    }

    // existence side: a verified good coloring at t = m-1 for every grid cell
    SearchOptions existence;  // defaults: no symmetry, no dominance
    for (int j = 3; j <= 12 && ok; ++j) {
        for (int n = 2; n <= 12; ++n) {
            Evaluation eval = ramsey_value(j, n);
            if (eval.value.t < 2) continue;
            auto t0 = Clock::now();
            SearchResult r =
                find_good_coloring(PartiteShape::uniform(j, eval.value.t - 1), n, 7, existence);
            double took = seconds_since(t0);
            if (r.status != SearchStatus::kGoodColoring || took >= 10.0 ||
                !verify_good(*r.coloring, n).is_good) {
                ok = false;
                note("existence search failed at j=" + std::to_string(j) +
                     " n=" + std::to_string(n) + " (" + search_status_name(r.status) + ", " +
                     std::to_string(took) + "s)");
                break;
            }
        }
    }

    // past desk scale the certificate records the trusted method instead
    SearchOptions capped = certified;
    capped.node_budget = 200000;
    Certificate big = build_certificate(5, 20, capped);
    if (big.upper_method != UpperBoundResult::Status::kUnverified || !big.lower_report.is_good) {
        ok = false;
        note("formula_trusted fallback misbehaved at j=5 n=20");
    } else {
        nlohmann::json cj = certificate_to_json(big);
        if (cj["upper_bound"]["method"] != "formula_trusted" || !validate_certificate(cj).empty()) {
            ok = false;
            note("formula_trusted certificate does not validate");
        }
    }

    report(3, "exhaustive upper bounds + in-budget existence searches", ok, seconds_since(start));
    return ok;
}

bool criterion4_detector_oracles() {
    auto start = Clock::now();
    bool ok = true;

    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> nd_match(1, 12);
    std::uniform_real_distribution<double> pd(0.05, 0.95);
    for (int trial = 0; trial < 1000; ++trial) {
        PartiteShape shape = PartiteShape::uniform(nd_match(rng), 1);
        EdgeSet es = oracles::random_subgraph(shape, pd(rng), rng);
        if (matching_number(es).number != oracles::matching_brute(es)) {
            ok = false;
            note("matching mismatch at trial " + std::to_string(trial));
            break;
        }
    }

    std::uniform_int_distribution<int> nd_cycle(3, 10);
    std::uniform_int_distribution<int> ld(3, 8);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        PartiteShape shape = PartiteShape::uniform(nd_cycle(rng), 1);
        EdgeSet es = oracles::random_subgraph(shape, pd(rng), rng);
        int length = ld(rng);
        auto witness = find_cycle(es, length);
        if (witness.has_value() != oracles::has_cycle_brute(es, length)) {
            ok = false;
            note("cycle mismatch at trial " + std::to_string(trial));
        }
        if (witness && !validate_cycle_witness(es, *witness, length)) {
            ok = false;
            note("invalid witness at trial " + std::to_string(trial));
        }
    }

    report(4, "detector oracle equivalence (1000 matchings, 1000 cycles)", ok,
           seconds_since(start));
    return ok;
}

bool criterion5_search_soundness() {
    auto start = Clock::now();
    bool ok = true;

    for (const auto& sizes : oracles::shapes_with_host_edges_up_to(12)) {
        PartiteShape shape(sizes);
        for (int n = 1; n <= 3 && ok; ++n) {
            bool expected = oracles::good_coloring_exists_brute(shape, n, 7);
            for (auto sym : {SymmetryMode::kNone, SymmetryMode::kLexLeader}) {
                for (bool dom : {false, true}) {
                    SearchOptions opt;
                    opt.symmetry = sym;
                    opt.dominance = dom;
                    SearchResult r = find_good_coloring(shape, n, 7, opt);
                    if ((r.status == SearchStatus::kGoodColoring) != expected) {
                        ok = false;
                        note("verdict mismatch on " + shape.describe() + " n=" + std::to_string(n));
                    }
                }
            }
            CnfInstance cnf = build_cnf(shape, n, 7);
            bool sat = false;
            size_t vars = cnf.variables.size();
            for (uint64_t mask = 0; mask < (1ull << vars) && !sat; ++mask) {
                std::vector<bool> assignment(vars);
                for (size_t i = 0; i < vars; ++i) assignment[i] = (mask >> i) & 1u;
                if (evaluate_cnf(cnf, assignment)) {
                    sat = true;
                    Coloring decoded = decode_model(cnf, assignment);
                    if (!verify_good(decoded, n).is_good) {
                        ok = false;
                        note("decoded model not good on " + shape.describe());
                    }
                }
            }
            if (sat != expected) {
                ok = false;
                note("CNF satisfiability mismatch on " + shape.describe() +
                     " n=" + std::to_string(n));
            }
        }
    }

    report(5, "search verdict = 2^E enumeration = CNF satisfiability (<=12 host edges)", ok,
           seconds_since(start));
    return ok;
}

bool criterion6_property_suite() {
    auto start = Clock::now();
    bool ok = true;
    std::mt19937 rng(987654321);

    // complement involution
    for (int trial = 0; trial < 500 && ok; ++trial) {
        std::uniform_int_distribution<int> jd(2, 6), td(1, 3);
        PartiteShape shape = PartiteShape::uniform(jd(rng), td(rng));
        EdgeSet e = oracles::random_subgraph(shape, 0.5, rng);
        EdgeSet c = complement_in_host(e);
        if (!(complement_in_host(c) == e) || e.size() + c.size() != shape.host_edge_count()) {
            ok = false;
            note("complement involution violated");
        }
    }

    // bipartite blue has no odd cycle of any length
    for (int trial = 0; trial < 500 && ok; ++trial) {
        std::uniform_int_distribution<int> td(2, 7);
        PartiteShape shape({td(rng), td(rng)});
        EdgeSet blue = oracles::random_subgraph(shape, 0.7, rng);
        if (find_cycle(blue, 3) || find_cycle(blue, 5) || find_cycle(blue, 7)) {
            ok = false;
            note("odd cycle in bipartite blue");
        }
    }

    // automorphism invariance of the matching number and 7-cycle presence
    for (int trial = 0; trial < 500 && ok; ++trial) {
        std::uniform_int_distribution<int> jd(2, 5), td(1, 2);
        int j = jd(rng), t = td(rng);
        PartiteShape shape = PartiteShape::uniform(j, t);
        Coloring c(shape);
        c.red = oracles::random_subgraph(shape, 0.5, rng);

        std::vector<int> part_perm(static_cast<size_t>(j));
        for (int p = 0; p < j; ++p) part_perm[static_cast<size_t>(p)] = p;
        std::shuffle(part_perm.begin(), part_perm.end(), rng);
        std::vector<std::vector<int>> slot_perms;
        for (int p = 0; p < j; ++p) {
            std::vector<int> sp(static_cast<size_t>(t));
            for (int s = 0; s < t; ++s) sp[static_cast<size_t>(s)] = s;
            std::shuffle(sp.begin(), sp.end(), rng);
            slot_perms.push_back(sp);
        }
        Coloring image = part_slot_permute(c, part_perm, slot_perms);
        bool same_nu = matching_number(image.red).number == matching_number(c.red).number;
        bool same_size = image.red.size() == c.red.size();
        bool same_cycle =
            find_cycle(image.blue(), 7).has_value() == find_cycle(c.blue(), 7).has_value();
        if (!same_nu || !same_size || !same_cycle) {
            ok = false;
            note("automorphism invariance violated");
        }
    }

    // restriction monotonicity of goodness under one-slot-per-part deletion;
    // good starting colorings come from dense-red rejection sampling
    int checked = 0, attempts = 0;
    while (checked < 500 && ok && attempts < 40000) {
        ++attempts;
        std::uniform_int_distribution<int> jd(3, 7), td(2, 3), nd_extra(0, 3);
        int j = jd(rng), t = td(rng);
        PartiteShape shape = PartiteShape::uniform(j, t);
        Coloring c(shape);
        c.red = oracles::random_subgraph(shape, 0.85, rng);
        if (find_cycle(c.blue(), 7)) continue;
        int n = matching_number(c.red).number + 1 + nd_extra(rng);

        Coloring peeled = c;
        for (int p = j - 1; p >= 0; --p) {
            std::uniform_int_distribution<int> sd(0, peeled.shape.part_size(p) - 1);
            peeled = delete_slot(peeled, {p, sd(rng)});
        }
        if (!verify_good(peeled, n).is_good) {
            ok = false;
            note("restriction monotonicity violated");
        }
        ++checked;
    }
    if (checked < 500) {
        ok = false;
        note("only " + std::to_string(checked) + " good samples generated");
    }

    report(6, "property suite (involution, parity, automorphism, restriction; 500 each)", ok,
           seconds_since(start));
    return ok;
}

}  // namespace

int main() {
    criterion1_formula_table();
    criterion2_lower_bounds();
    criterion3_exhaustions();
    criterion4_detector_oracles();
    criterion5_search_soundness();
    criterion6_property_suite();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
