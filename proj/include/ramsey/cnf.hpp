#ifndef RAMSEY_CNF_HPP
#define RAMSEY_CNF_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ramsey/host.hpp"

namespace ramsey {

// Propositional mirror of the good-coloring predicate: one variable per host
// edge (true = red); every host cycle of the target length must carry a red
// edge, every n-set of pairwise disjoint host edges must carry a blue one.
// Satisfiable iff a good coloring exists.
struct CnfInstance {
    std::vector<int> part_sizes;
    int n = 0;
    int cycle_len = 7;
    std::vector<std::pair<int, int>> variables;       // var i+1 <-> edge (u, v)
    std::vector<std::vector<int>> cycle_clauses;      // positive literals
    std::vector<std::vector<int>> stripe_clauses;     // negative literals
    size_t clause_count() const { return cycle_clauses.size() + stripe_clauses.size(); }
};

inline constexpr size_t kDefaultClauseCap = 5'000'000;

// Throws std::length_error when either clause family would exceed the cap.
CnfInstance build_cnf(const PartiteShape& shape, int n, int cycle_len = 7,
                      size_t clause_cap = kDefaultClauseCap);

// "p cnf V C" header, 1-based variables, 0-terminated clauses.
std::string to_dimacs(const CnfInstance& cnf);

// Sidecar JSON mapping variables back to host edges (parsed by variable_map_from_json).
std::string variable_map_json(const CnfInstance& cnf);

// Rebuild a coloring from a model (assignment[i] = value of variable i+1).
Coloring decode_model(const CnfInstance& cnf, const std::vector<bool>& assignment);

bool evaluate_cnf(const CnfInstance& cnf, const std::vector<bool>& assignment);

}  // namespace ramsey

#endif
