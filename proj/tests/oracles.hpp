#ifndef RAMSEY_TESTS_ORACLES_HPP
#define RAMSEY_TESTS_ORACLES_HPP

// Brute-force reference implementations, kept deliberately independent of the
// library's algorithms: the matching oracle branches on the lowest vertex, the
// cycle and path oracles enumerate vertex tuples, the search oracle walks all
// 2^E colorings.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/host.hpp"

namespace oracles {

inline uint64_t neighbors_of(const ramsey::EdgeSet& edges, int v) { return edges.neighbors(v); }

// maximum matching by branching: lowest available vertex pairs with each
// neighbor, or stays unmatched
inline int matching_brute(const ramsey::EdgeSet& edges, uint64_t available) {
    if (!available) return 0;
    int v = std::countr_zero(available);
    uint64_t rest = available & ~(1ull << v);
    int best = matching_brute(edges, rest);  // v unmatched
    uint64_t nb = edges.neighbors(v) & rest;
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        best = std::max(best, 1 + matching_brute(edges, rest & ~(1ull << u)));
    }
    return best;
}

inline int matching_brute(const ramsey::EdgeSet& edges) {
    int n = edges.shape().total_vertices();
    uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;
    return matching_brute(edges, all);
}

// exhaustive L-tuple enumeration, all start vertices, no canonicalization
inline bool cycle_brute_rec(const ramsey::EdgeSet& edges, std::vector<int>& tuple,
                            uint64_t visited, int length) {
    int n = edges.shape().total_vertices();
    if (static_cast<int>(tuple.size()) == length)
        return edges.contains(tuple.back(), tuple.front());
    for (int v = 0; v < n; ++v) {
        if ((visited >> v) & 1u) continue;
        if (!tuple.empty() && !edges.contains(tuple.back(), v)) continue;
        tuple.push_back(v);
        if (cycle_brute_rec(edges, tuple, visited | (1ull << v), length)) return true;
        tuple.pop_back();
    }
    return false;
}

inline bool has_cycle_brute(const ramsey::EdgeSet& edges, int length) {
    if (length < 3 || length > edges.shape().total_vertices()) return false;
    std::vector<int> tuple;
    return cycle_brute_rec(edges, tuple, 0, length);
}

inline bool path_brute_rec(const ramsey::EdgeSet& edges, int cur, int target, int remaining,
                           uint64_t visited) {
    if (remaining == 0) return cur == target;
    uint64_t nb = edges.neighbors(cur) & ~visited;
    while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        if (path_brute_rec(edges, v, target, remaining - 1, visited | (1ull << v))) return true;
    }
    return false;
}

inline bool has_path_brute(const ramsey::EdgeSet& edges, int u, int v, int edge_count) {
    return path_brute_rec(edges, u, v, edge_count, 1ull << u);
}

// literal 2^E sweep: does any coloring avoid both patterns?
inline bool good_coloring_exists_brute(const ramsey::PartiteShape& shape, int n, int cycle_len) {
    auto edges = ramsey::host_edges(shape);
    for (uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
        ramsey::Coloring c(shape);
        for (size_t i = 0; i < edges.size(); ++i)
            if ((mask >> i) & 1u) c.red.add(edges[i].first, edges[i].second);
        if (ramsey::contains_stripe(c.red, n)) continue;
        if (ramsey::find_cycle(c.blue(), cycle_len)) continue;
        return true;
    }
    return false;
}

// all part-size multisets (non-increasing) with at most max_edges host edges
inline void shapes_up_to_rec(std::vector<int>& sizes, int max_size, int max_edges,
                             std::vector<std::vector<int>>& out) {
    if (sizes.size() >= 2) out.push_back(sizes);
    for (int s = std::min(max_size, sizes.empty() ? 12 : sizes.back()); s >= 1; --s) {
        sizes.push_back(s);
        ramsey::PartiteShape probe(sizes);
        if (probe.total_vertices() <= 16 && probe.host_edge_count() <= max_edges)
            shapes_up_to_rec(sizes, max_size, max_edges, out);
        sizes.pop_back();
    }
}

inline std::vector<std::vector<int>> shapes_with_host_edges_up_to(int max_edges) {
    std::vector<std::vector<int>> out;
    std::vector<int> sizes;
    shapes_up_to_rec(sizes, 12, max_edges, out);
    return out;
}

inline ramsey::EdgeSet random_subgraph(const ramsey::PartiteShape& shape, double p,
                                       std::mt19937& rng) {
    ramsey::EdgeSet out(shape);
    std::bernoulli_distribution coin(p);
    for (auto [u, v] : ramsey::host_edges(shape))
        if (coin(rng)) out.add(u, v);
    return out;
}

}  // namespace oracles

#endif
