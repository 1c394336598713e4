#ifndef RAMSEY_SEARCH_HPP
#define RAMSEY_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/formula.hpp"
#include "ramsey/host.hpp"

namespace ramsey {

enum class SymmetryMode { kNone, kLexLeader };
enum class EdgeOrder { kNatural, kDegreeGuided };

struct SearchOptions {
    long long node_budget = 2'000'000'000;
    double time_budget_seconds = 3600.0;
    SymmetryMode symmetry = SymmetryMode::kNone;
    bool dominance = false;
    EdgeOrder edge_order = EdgeOrder::kDegreeGuided;
    int workers = 1;
    int lex_element_cap = 4096;
};

struct PruneCounts {
    long long stripe = 0;
    long long cycle = 0;
    long long dominance = 0;
    long long symmetry = 0;
};

// Record of a completed exhaustion: the whole (pruned but sound) tree was
// explored and no good coloring exists on this host. Never issued from a
// budget-interrupted run.
struct ExhaustionCertificate {
    std::vector<int> part_sizes;
    int n = 0;
    int cycle_len = 7;
    long long nodes_explored = 0;
    PruneCounts prunes;
    double wall_seconds = 0.0;
    SearchOptions options;
};

enum class SearchStatus { kGoodColoring, kExhausted, kBudgetExceeded };

std::string search_status_name(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::kBudgetExceeded;
    std::optional<Coloring> coloring;  // present iff status == kGoodColoring, verify_good-checked
    ExhaustionCertificate record;      // stats for every outcome; a certificate only on kExhausted
};

// Decide whether K_{shape} admits a coloring with no red n-stripe and no blue
// C_{cycle_len}. DFS over host edges in a fixed order; red branch pruned when
// the red matching reaches n, blue branch pruned when the new edge closes a
// blue cycle of the target length.
SearchResult find_good_coloring(const PartiteShape& shape, int n, int cycle_len,
                                const SearchOptions& options);

// Host edge sequence the search assigns, for the chosen strategy. kNatural is
// the canonical order; kDegreeGuided grows the decided subgraph vertex by
// vertex so both prunes fire early.
std::vector<std::pair<int, int>> search_edge_order(const PartiteShape& shape, EdgeOrder order);

// True when some capped host automorphism (part/slot transpositions and their
// pairwise products) maps the decided prefix to a strictly smaller one, with
// red < blue. colors[i] in {-1, 0, 1} gives the color at position i of `edges`;
// the decided prefix must be colors[0..k-1] with everything beyond undecided.
bool lex_leader_prune(const PartiteShape& shape, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int8_t>& colors, int element_cap = 4096);

struct UpperBoundResult {
    enum class Status { kExhausted, kUnverified };
    Status status = Status::kUnverified;
    std::string note;             // why the bound is unverified, when it is
    std::optional<SearchResult> search;
    RamseyValue claimed;
};

// Runs the search at t = formula value; a completed exhaustion certifies the
// upper bound, closing the loop with the verified lower-bound coloring.
UpperBoundResult certify_upper_bound(int j, int n, const SearchOptions& options);

}  // namespace ramsey

#endif
