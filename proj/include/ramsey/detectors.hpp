#ifndef RAMSEY_DETECTORS_HPP
#define RAMSEY_DETECTORS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/host.hpp"

namespace ramsey {

struct MatchingWitness {
    std::vector<std::pair<int, int>> edges;  // pairwise vertex-disjoint members of the tested set
};

struct MatchingResult {
    int number = 0;
    MatchingWitness witness;
};

// Exact maximum matching size on general (non-bipartite) graphs.
int matching_size(const EdgeSet& edges);

// Size plus the lexicographically least maximum matching (by canonical edge order).
MatchingResult matching_number(const EdgeSet& edges);

// True iff the edge set contains n pairwise disjoint edges.
bool contains_stripe(const EdgeSet& edges, int n);

struct CycleWitness {
    std::vector<int> vertices;  // cyclic order, canonical rotation (min vertex first)
};

// Cycle on exactly `length` distinct vertices (subgraph containment, not induced).
std::optional<CycleWitness> find_cycle(const EdgeSet& edges, int length);

// Simple path between u and v with exactly interior_len interior vertices
// (interior_len + 1 edges), or nullopt. Vertices of the result are u ... v.
std::optional<std::vector<int>> find_path_between(const EdgeSet& edges, int u, int v,
                                                  int interior_len);

bool is_bipartite(const EdgeSet& edges);

bool validate_cycle_witness(const EdgeSet& edges, const CycleWitness& witness, int length);

// Mask-level kernels shared with the search core. adj is an array of n
// per-vertex neighbor bitmasks; match pairs vertices (-1 = exposed).
namespace detail {

int max_matching_masks(const uint64_t* adj, int n, int8_t* match, int stop_at);

// One augmentation phase over all exposed roots. Returns true (and updates
// match) when the matching grew by one; false when it was already maximum.
bool try_augment_once(const uint64_t* adj, int n, int8_t* match);

bool has_path_of_length(const uint64_t* adj, int n, int u, int v, int edge_count);

bool bipartite_masks(const uint64_t* adj, int n);

}  // namespace detail

}  // namespace ramsey

#endif
