#include "ramsey/detectors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace ramsey {

namespace {

constexpr int kMax = kMaxTotalVertices;

std::array<uint64_t, kMax> adjacency_of(const EdgeSet& edges) {
    std::array<uint64_t, kMax> adj{};
    int n = edges.shape().total_vertices();
    for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = edges.neighbors(v);
    return adj;
}

// Blossom-contracting alternating search (classic base/parent formulation).
struct MatchingSearcher {
    const uint64_t* adj;
    int n;
    int8_t* match;

    std::array<int8_t, kMax> parent{};
    std::array<int8_t, kMax> base{};
    std::array<bool, kMax> used{};
    std::array<bool, kMax> blossom{};
    // a vertex can be enqueued once via contraction and once via the parent
    // route, so size for both
    std::array<int8_t, 2 * kMax + 2> queue{};

    int lca(int a, int b) {
        std::array<bool, kMax> on_path{};
        for (;;) {
            a = base[static_cast<size_t>(a)];
            on_path[static_cast<size_t>(a)] = true;
            if (match[a] < 0) break;
            a = parent[static_cast<size_t>(match[a])];
        }
        for (;;) {
            b = base[static_cast<size_t>(b)];
            if (on_path[static_cast<size_t>(b)]) return b;
            b = parent[static_cast<size_t>(match[b])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<size_t>(v)] != b) {
            blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = true;
            blossom[static_cast<size_t>(base[static_cast<size_t>(match[v])])] = true;
            parent[static_cast<size_t>(v)] = static_cast<int8_t>(child);
            child = match[v];
            v = parent[static_cast<size_t>(match[v])];
        }
    }

    // Alternating BFS from an exposed root; returns a reached exposed vertex or -1.
    int find_exposed(int root) {
        used.fill(false);
        parent.fill(-1);
        for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = static_cast<int8_t>(i);

        used[static_cast<size_t>(root)] = true;
        int head = 0, tail = 0;
        queue[static_cast<size_t>(tail++)] = static_cast<int8_t>(root);

        while (head < tail) {
            int v = queue[static_cast<size_t>(head++)];
            uint64_t nb = adj[v];
            while (nb) {
                int to = std::countr_zero(nb);
                nb &= nb - 1;
                if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
                    match[v] == to)
                    continue;
                if (to == root ||
                    (match[to] >= 0 && parent[static_cast<size_t>(match[to])] >= 0)) {
                    // odd cycle: contract the blossom
                    int cur = lca(v, to);
                    blossom.fill(false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
                            base[static_cast<size_t>(i)] = static_cast<int8_t>(cur);
                            if (!used[static_cast<size_t>(i)]) {
                                used[static_cast<size_t>(i)] = true;
                                queue[static_cast<size_t>(tail++)] = static_cast<int8_t>(i);
                            }
                        }
                    }
                } else if (parent[static_cast<size_t>(to)] < 0) {
                    parent[static_cast<size_t>(to)] = static_cast<int8_t>(v);
                    if (match[to] < 0) return to;
                    used[static_cast<size_t>(match[to])] = true;
                    queue[static_cast<size_t>(tail++)] = match[to];
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v >= 0) {
            int pv = parent[static_cast<size_t>(v)];
            int next = match[pv];
            match[v] = static_cast<int8_t>(pv);
            match[pv] = static_cast<int8_t>(v);
            v = next;
        }
    }
};

// Exact-length simple path / cycle DFS with walk-reachability pruning.
//
// reach[k] holds every vertex that has a walk of exactly k edges to the
// target inside `region`; a simple path needs at least that, so candidates
// at depth d are filtered by reach[remaining - 1]. In bipartite graphs this
// kills wrong-parity branches at the root, which is what makes dense
// complete-bipartite instances cheap.
struct PathDfs {
    const uint64_t* adj;
    int n;
    uint64_t region;
    std::array<uint64_t, kMax + 1> reach{};
    const int* order;  // vertex iteration order (degree-descending)

    void fill_reach(int target, int maxlen) {
        reach[0] = 1ull << target;
        for (int k = 1; k <= maxlen; ++k) {
            uint64_t prev = reach[static_cast<size_t>(k - 1)];
            uint64_t cur = 0;
            while (prev) {
                int x = std::countr_zero(prev);
                prev &= prev - 1;
                cur |= adj[x];
            }
            reach[static_cast<size_t>(k)] = cur & region;
        }
    }

    // Finds a simple path cur -> target of exactly rem edges through `region`,
    // appending interior vertices and target to out.
    bool dfs(int cur, int target, int rem, uint64_t visited, std::vector<int>* out) {
        if (rem == 1) {
            if ((adj[cur] >> target) & 1u) {
                if (out) out->push_back(target);
                return true;
            }
            return false;
        }
        uint64_t cand = adj[cur] & region & ~visited & reach[static_cast<size_t>(rem - 1)] &
                        ~(1ull << target);
        if (!cand) return false;
        for (int i = 0; i < n; ++i) {
            int x = order[i];
            if (!((cand >> x) & 1u)) continue;
            if (out) out->push_back(x);
            if (dfs(x, target, rem - 1, visited | (1ull << x), out)) return true;
            if (out) out->pop_back();
        }
        return false;
    }
};

std::array<int, kMax> degree_order(const uint64_t* adj, int n) {
    std::array<int, kMax> order{};
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.begin() + n, [&](int a, int b) {
        return std::popcount(adj[a]) > std::popcount(adj[b]);
    });
    return order;
}

}  // namespace

namespace detail {

int max_matching_masks(const uint64_t* adj, int n, int8_t* match, int stop_at) {
    for (int i = 0; i < n; ++i) match[i] = -1;
    int size = 0;

    // cheap greedy seed, canonical edge order
    for (int u = 0; u < n && size < stop_at; ++u) {
        if (match[u] >= 0) continue;
        uint64_t nb = adj[u] >> (u + 1);
        while (nb) {
            int v = u + 1 + std::countr_zero(nb);
            nb &= nb - 1;
            if (match[v] < 0) {
                match[u] = static_cast<int8_t>(v);
                match[v] = static_cast<int8_t>(u);
                ++size;
                break;
            }
        }
    }

    MatchingSearcher searcher{adj, n, match};
    for (int v = 0; v < n && size < stop_at; ++v) {
        if (match[v] >= 0) continue;
        int reached = searcher.find_exposed(v);
        if (reached >= 0) {
            searcher.augment(reached);
            ++size;
        }
    }
    return size;
}

bool try_augment_once(const uint64_t* adj, int n, int8_t* match) {
    MatchingSearcher searcher{adj, n, match};
    for (int v = 0; v < n; ++v) {
        if (match[v] >= 0) continue;
        int reached = searcher.find_exposed(v);
        if (reached >= 0) {
            searcher.augment(reached);
            return true;
        }
    }
    return false;
}

bool has_path_of_length(const uint64_t* adj, int n, int u, int v, int edge_count) {
    if (edge_count < 1 || edge_count > n) return false;
    auto order = degree_order(adj, n);
    uint64_t region = (n == 64) ? ~0ull : (1ull << n) - 1;
    PathDfs dfs{adj, n, region, {}, order.data()};
    dfs.fill_reach(v, edge_count);
    if (!((dfs.reach[static_cast<size_t>(edge_count)] >> u) & 1u)) return false;
    return dfs.dfs(u, v, edge_count, 1ull << u, nullptr);
}

bool bipartite_masks(const uint64_t* adj, int n) {
    std::array<int8_t, kMax> side{};
    side.fill(-1);
    std::array<int8_t, kMax> queue{};
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<size_t>(s)] >= 0) continue;
        side[static_cast<size_t>(s)] = 0;
        int head = 0, tail = 0;
        queue[static_cast<size_t>(tail++)] = static_cast<int8_t>(s);
        while (head < tail) {
            int x = queue[static_cast<size_t>(head++)];
            uint64_t nb = adj[x];
            while (nb) {
                int y = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[static_cast<size_t>(y)] < 0) {
                    side[static_cast<size_t>(y)] = static_cast<int8_t>(1 - side[static_cast<size_t>(x)]);
                    queue[static_cast<size_t>(tail++)] = static_cast<int8_t>(y);
                } else if (side[static_cast<size_t>(y)] == side[static_cast<size_t>(x)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace detail

int matching_size(const EdgeSet& edges) {
    auto adj = adjacency_of(edges);
    std::array<int8_t, kMax> match{};
    return detail::max_matching_masks(adj.data(), edges.shape().total_vertices(), match.data(),
                                      kMax);
}

MatchingResult matching_number(const EdgeSet& edges) {
    int n = edges.shape().total_vertices();
    auto adj = adjacency_of(edges);
    std::array<int8_t, kMax> match{};
    int target = detail::max_matching_masks(adj.data(), n, match.data(), kMax);

    MatchingResult out;
    out.number = target;

    // Lexicographically least maximum matching: commit the earliest edge whose
    // removal (with its endpoints) still leaves a completable residue.
    auto residue = adj;
    auto drop_vertex = [&](std::array<uint64_t, kMax>& a, int v) {
        a[static_cast<size_t>(v)] = 0;
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] &= ~(1ull << v);
    };
    int remaining = target;
    uint64_t used = 0;
    for (auto [u, v] : edges.edges()) {
        if (remaining == 0) break;
        if ((used >> u) & 1u || (used >> v) & 1u) continue;
        auto trial = residue;
        drop_vertex(trial, u);
        drop_vertex(trial, v);
        std::array<int8_t, kMax> m{};
        if (detail::max_matching_masks(trial.data(), n, m.data(), remaining - 1) == remaining - 1) {
            out.witness.edges.emplace_back(u, v);
            used |= (1ull << u) | (1ull << v);
            residue = trial;
            --remaining;
        }
    }
    return out;
}

bool contains_stripe(const EdgeSet& edges, int n) {
    if (n < 1) throw std::invalid_argument("stripe size must be >= 1");
    auto adj = adjacency_of(edges);
    std::array<int8_t, kMax> match{};
    return detail::max_matching_masks(adj.data(), edges.shape().total_vertices(), match.data(),
                                      n) >= n;
}

std::optional<CycleWitness> find_cycle(const EdgeSet& edges, int length) {
    int n = edges.shape().total_vertices();
    if (length < 3 || length > n) return std::nullopt;

    auto adj = adjacency_of(edges);
    if (length % 2 == 1 && detail::bipartite_masks(adj.data(), n)) return std::nullopt;

    auto order = degree_order(adj.data(), n);
    uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;

    // pivot = least vertex on the cycle; search only among larger vertices
    for (int s = 0; s < n; ++s) {
        if (std::popcount(adj[static_cast<size_t>(s)]) < 2) continue;
        uint64_t region = all & ~((s == 0) ? 0ull : ((1ull << s) - 1)) & ~(1ull << s);
        PathDfs dfs{adj.data(), n, region | (1ull << s), {}, order.data()};
        dfs.fill_reach(s, length);
        if (!((dfs.reach[static_cast<size_t>(length)] >> s) & 1u)) continue;

        std::vector<int> path{s};
        // walk length-1 more edges then close back to s
        uint64_t first = adj[static_cast<size_t>(s)] & region &
                         dfs.reach[static_cast<size_t>(length - 1)];
        for (int i = 0; i < n; ++i) {
            int x = order[static_cast<size_t>(i)];
            if (!((first >> x) & 1u)) continue;
            path.push_back(x);
            if (dfs.dfs(x, s, length - 1, (1ull << s) | (1ull << x), &path)) {
                path.pop_back();  // drop the duplicated pivot appended by dfs
                // canonical direction: smaller second vertex
                if (path[1] > path.back()) std::reverse(path.begin() + 1, path.end());
                return CycleWitness{path};
            }
            path.pop_back();
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_path_between(const EdgeSet& edges, int u, int v,
                                                  int interior_len) {
    if (u == v) throw std::invalid_argument("path endpoints must differ");
    int n = edges.shape().total_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    if (interior_len < 0 || interior_len + 2 > n) return std::nullopt;

    int edge_count = interior_len + 1;
    auto adj = adjacency_of(edges);
    auto order = degree_order(adj.data(), n);
    uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;

    PathDfs dfs{adj.data(), n, all, {}, order.data()};
    dfs.fill_reach(v, edge_count);
    if (!((dfs.reach[static_cast<size_t>(edge_count)] >> u) & 1u)) return std::nullopt;

    std::vector<int> path{u};
    if (dfs.dfs(u, v, edge_count, 1ull << u, &path)) return path;
    return std::nullopt;
}

bool is_bipartite(const EdgeSet& edges) {
    auto adj = adjacency_of(edges);
    return detail::bipartite_masks(adj.data(), edges.shape().total_vertices());
}

bool validate_cycle_witness(const EdgeSet& edges, const CycleWitness& witness, int length) {
    const auto& vs = witness.vertices;
    if (static_cast<int>(vs.size()) != length) return false;
    uint64_t seen = 0;
    for (int v : vs) {
        if (v < 0 || v >= edges.shape().total_vertices()) return false;
        if ((seen >> v) & 1u) return false;
        seen |= 1ull << v;
    }
    for (size_t i = 0; i < vs.size(); ++i)
        if (!edges.contains(vs[i], vs[(i + 1) % vs.size()])) return false;
    return true;
}

}  // namespace ramsey
