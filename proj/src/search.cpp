#include "ramsey/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ramsey/detectors.hpp"

namespace ramsey {

namespace {

constexpr int kMax = kMaxTotalVertices;
using Clock = std::chrono::steady_clock;

// --- host automorphisms for symmetry breaking -------------------------------

// Capped element set: part transpositions between equal-size parts, slot
// transpositions inside a part, and their pairwise products. Incomplete
// symmetry breaking is sound; it only fails to prune.
std::vector<std::array<int8_t, kMax>> automorphism_elements(const PartiteShape& shape, int cap) {
    int n = shape.total_vertices();
    int j = shape.parts();

    std::array<int8_t, kMax> identity{};
    for (int v = 0; v < n; ++v) identity[static_cast<size_t>(v)] = static_cast<int8_t>(v);

    std::vector<std::array<int8_t, kMax>> gens;
    for (int p = 0; p < j; ++p) {
        for (int q = p + 1; q < j; ++q) {
            if (shape.part_size(p) != shape.part_size(q)) continue;
            auto m = identity;
            for (int s = 0; s < shape.part_size(p); ++s) {
                int a = shape.vertex_index({p, s});
                int b = shape.vertex_index({q, s});
                m[static_cast<size_t>(a)] = static_cast<int8_t>(b);
                m[static_cast<size_t>(b)] = static_cast<int8_t>(a);
            }
            gens.push_back(m);
        }
    }
    size_t part_count = gens.size();
    for (int p = 0; p < j; ++p) {
        for (int a = 0; a < shape.part_size(p); ++a) {
            for (int b = a + 1; b < shape.part_size(p); ++b) {
                auto m = identity;
                int x = shape.vertex_index({p, a});
                int y = shape.vertex_index({p, b});
                m[static_cast<size_t>(x)] = static_cast<int8_t>(y);
                m[static_cast<size_t>(y)] = static_cast<int8_t>(x);
                gens.push_back(m);
            }
        }
    }

    std::vector<std::array<int8_t, kMax>> out = gens;
    for (size_t i = 0; i < part_count && out.size() < static_cast<size_t>(cap); ++i) {
        for (size_t k = part_count; k < gens.size(); ++k) {
            if (out.size() >= static_cast<size_t>(cap)) break;
            std::array<int8_t, kMax> m{};
            for (int v = 0; v < n; ++v)
                m[static_cast<size_t>(v)] = gens[i][static_cast<size_t>(gens[k][static_cast<size_t>(v)])];
            out.push_back(m);
            std::array<int8_t, kMax> m2{};
            for (int v = 0; v < n; ++v)
                m2[static_cast<size_t>(v)] = gens[k][static_cast<size_t>(gens[i][static_cast<size_t>(v)])];
            if (m2 != m && out.size() < static_cast<size_t>(cap)) out.push_back(m2);
        }
    }
    if (out.size() > static_cast<size_t>(cap)) out.resize(static_cast<size_t>(cap));
    return out;
}

// pos[i] = position of the image of edge i under the element's vertex map
std::vector<std::vector<int32_t>> edge_position_maps(
    const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::array<int8_t, kMax>>& elements) {
    std::array<std::array<int32_t, kMax>, kMax> pos{};
    for (auto& row : pos) row.fill(-1);
    for (size_t k = 0; k < edges.size(); ++k) {
        auto [u, v] = edges[k];
        pos[static_cast<size_t>(u)][static_cast<size_t>(v)] = static_cast<int32_t>(k);
        pos[static_cast<size_t>(v)][static_cast<size_t>(u)] = static_cast<int32_t>(k);
    }
    std::vector<std::vector<int32_t>> out;
    out.reserve(elements.size());
    for (const auto& m : elements) {
        std::vector<int32_t> src(edges.size());
        for (size_t k = 0; k < edges.size(); ++k) {
            auto [u, v] = edges[k];
            src[k] = pos[static_cast<size_t>(m[static_cast<size_t>(u)])]
                        [static_cast<size_t>(m[static_cast<size_t>(v)])];
        }
        out.push_back(std::move(src));
    }
    return out;
}

// Scan one element against the decided prefix. Evidence semantics: the image
// string (color of the image edge) is compared position by position; a strict
// win for the image on fully decided evidence dooms every extension.
enum class LexVerdict { kPrune, kNoEvidence };

LexVerdict lex_scan(const std::vector<int32_t>& src, const int8_t* color, int k) {
    for (int i = 0; i < k; ++i) {
        int32_t s = src[static_cast<size_t>(i)];
        int8_t image = (s < k) ? color[s] : int8_t{-1};
        if (image < 0) return LexVerdict::kNoEvidence;  // undecided source, inconclusive
        int8_t own = color[i];
        if (image < own) return LexVerdict::kPrune;
        if (image > own) return LexVerdict::kNoEvidence;
    }
    return LexVerdict::kNoEvidence;
}

// --- search core -------------------------------------------------------------

struct SharedState {
    std::atomic<bool> found{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<long long> nodes{0};
    std::mutex result_mutex;
    std::vector<int8_t> winning_colors;
};

struct Frame {
    std::array<int8_t, kMax> match;
    int nu;
};

class Worker {
  public:
    Worker(const PartiteShape& shape, int n, int cycle_len, const SearchOptions& opt,
           const std::vector<std::pair<int, int>>& edges,
           const std::vector<std::vector<int32_t>>& lex_maps, SharedState& shared,
           Clock::time_point deadline)
        : shape_(shape),
          n_(n),
          path_len_(cycle_len - 1),
          opt_(opt),
          edges_(edges),
          lex_maps_(lex_maps),
          shared_(shared),
          deadline_(deadline),
          vertex_count_(shape.total_vertices()),
          edge_count_(static_cast<int>(edges.size())) {
        color_.assign(edges.size(), -1);
        match_.fill(-1);
        frames_.resize(edges.size() + 1);
    }

    PruneCounts prunes;
    long long local_nodes = 0;

    // replay a frontier prefix; returns false if the prefix is already dead
    bool load_prefix(const std::vector<int8_t>& prefix) {
        for (size_t i = 0; i < prefix.size(); ++i) {
            auto [u, v] = edges_[i];
            color_[i] = prefix[i];
            if (prefix[i] == 0) {
                add_red(u, v);
                if (nu_ >= n_) return false;
            } else {
                blue_[static_cast<size_t>(u)] |= 1ull << v;
                blue_[static_cast<size_t>(v)] |= 1ull << u;
            }
        }
        return true;
    }

    bool dfs(int k) {
        if (shared_.found.load(std::memory_order_relaxed)) return false;
        if ((++local_nodes & 1023) == 0) {
            long long prev = shared_.nodes.fetch_add(1024, std::memory_order_relaxed);
            committed_ += 1024;
            others_ = prev + 1024 - committed_;
            if (Clock::now() > deadline_)
                shared_.budget_hit.store(true, std::memory_order_relaxed);
        }
        if (others_ + local_nodes > opt_.node_budget)
            shared_.budget_hit.store(true, std::memory_order_relaxed);
        if (shared_.budget_hit.load(std::memory_order_relaxed)) return false;

        if (k == edge_count_) {
            if (opt_.dominance && !red_is_maximal()) {
                ++prunes.dominance;
                return false;
            }
            std::lock_guard<std::mutex> lock(shared_.result_mutex);
            if (!shared_.found.load()) {
                shared_.winning_colors = color_;
                shared_.found.store(true);
            }
            return true;
        }

        if (opt_.symmetry == SymmetryMode::kLexLeader && k > 0) {
            for (const auto& src : lex_maps_) {
                if (lex_scan(src, color_.data(), k) == LexVerdict::kPrune) {
                    ++prunes.symmetry;
                    return false;
                }
            }
        }

        auto [u, v] = edges_[static_cast<size_t>(k)];

        // red branch first (aligned with red < blue in the lex order)
        frames_[static_cast<size_t>(k)] = {match_, nu_};
        add_red(u, v);
        if (nu_ >= n_) {
            ++prunes.stripe;
            undo_red(u, v, k);
        } else {
            color_[static_cast<size_t>(k)] = 0;
            if (dfs(k + 1)) return true;
            color_[static_cast<size_t>(k)] = -1;
            undo_red(u, v, k);
        }

        if (shared_.budget_hit.load(std::memory_order_relaxed) ||
            shared_.found.load(std::memory_order_relaxed))
            return false;

        blue_[static_cast<size_t>(u)] |= 1ull << v;
        blue_[static_cast<size_t>(v)] |= 1ull << u;
        if (detail::has_path_of_length(blue_.data(), vertex_count_, u, v, path_len_)) {
            ++prunes.cycle;
        } else {
            color_[static_cast<size_t>(k)] = 1;
            if (dfs(k + 1)) return true;
            color_[static_cast<size_t>(k)] = -1;
        }
        blue_[static_cast<size_t>(u)] &= ~(1ull << v);
        blue_[static_cast<size_t>(v)] &= ~(1ull << u);
        return false;
    }

    // frontier expansion: collect alive prefixes at target depth
    void expand(int k, int target, std::vector<std::vector<int8_t>>& out) {
        ++local_nodes;
        if (k == target) {
            out.emplace_back(color_.begin(), color_.begin() + k);
            return;
        }
        if (k == edge_count_) {  // host smaller than the frontier depth
            out.emplace_back(color_.begin(), color_.end());
            return;
        }
        if (opt_.symmetry == SymmetryMode::kLexLeader && k > 0) {
            for (const auto& src : lex_maps_) {
                if (lex_scan(src, color_.data(), k) == LexVerdict::kPrune) {
                    ++prunes.symmetry;
                    return;
                }
            }
        }
        auto [u, v] = edges_[static_cast<size_t>(k)];
        frames_[static_cast<size_t>(k)] = {match_, nu_};
        add_red(u, v);
        if (nu_ >= n_) {
            ++prunes.stripe;
            undo_red(u, v, k);
        } else {
            color_[static_cast<size_t>(k)] = 0;
            expand(k + 1, target, out);
            color_[static_cast<size_t>(k)] = -1;
            undo_red(u, v, k);
        }
        blue_[static_cast<size_t>(u)] |= 1ull << v;
        blue_[static_cast<size_t>(v)] |= 1ull << u;
        if (detail::has_path_of_length(blue_.data(), vertex_count_, u, v, path_len_)) {
            ++prunes.cycle;
        } else {
            color_[static_cast<size_t>(k)] = 1;
            expand(k + 1, target, out);
            color_[static_cast<size_t>(k)] = -1;
        }
        blue_[static_cast<size_t>(u)] &= ~(1ull << v);
        blue_[static_cast<size_t>(v)] &= ~(1ull << u);
    }

  private:
    void add_red(int u, int v) {
        red_[static_cast<size_t>(u)] |= 1ull << v;
        red_[static_cast<size_t>(v)] |= 1ull << u;
        if (match_[static_cast<size_t>(u)] < 0 && match_[static_cast<size_t>(v)] < 0) {
            match_[static_cast<size_t>(u)] = static_cast<int8_t>(v);
            match_[static_cast<size_t>(v)] = static_cast<int8_t>(u);
            ++nu_;
        } else if (detail::try_augment_once(red_.data(), vertex_count_, match_.data())) {
            ++nu_;  // grows by at most one per added edge
        }
    }

    void undo_red(int u, int v, int k) {
        red_[static_cast<size_t>(u)] &= ~(1ull << v);
        red_[static_cast<size_t>(v)] &= ~(1ull << u);
        match_ = frames_[static_cast<size_t>(k)].match;
        nu_ = frames_[static_cast<size_t>(k)].nu;
    }

    // Maximal-red filter: a leaf survives only if flipping any blue edge to red
    // would complete an n-stripe. Sound for the existence verdict because blue
    // only shrinks under flips and cycle-freeness is monotone under removal.
    bool red_is_maximal() {
        bool any_blue = false;
        for (int8_t c : color_)
            if (c == 1) {
                any_blue = true;
                break;
            }
        if (!any_blue) return true;
        if (nu_ < n_ - 1) return false;  // one flip raises the matching by at most one

        for (size_t i = 0; i < color_.size(); ++i) {
            if (color_[i] != 1) continue;
            auto [u, v] = edges_[i];
            red_[static_cast<size_t>(u)] |= 1ull << v;
            red_[static_cast<size_t>(v)] |= 1ull << u;
            bool reaches_stripe;
            if (match_[static_cast<size_t>(u)] < 0 && match_[static_cast<size_t>(v)] < 0) {
                reaches_stripe = true;
            } else {
                std::array<int8_t, kMax> scratch = match_;
                reaches_stripe = detail::try_augment_once(red_.data(), vertex_count_, scratch.data());
            }
            red_[static_cast<size_t>(u)] &= ~(1ull << v);
            red_[static_cast<size_t>(v)] &= ~(1ull << u);
            if (!reaches_stripe) return false;
        }
        return true;
    }

    const PartiteShape& shape_;
    int n_;
    int path_len_;
    const SearchOptions& opt_;
    const std::vector<std::pair<int, int>>& edges_;
    const std::vector<std::vector<int32_t>>& lex_maps_;
    SharedState& shared_;
    Clock::time_point deadline_;
    int vertex_count_;
    int edge_count_;

    std::vector<int8_t> color_;
    std::array<uint64_t, kMax> red_{};
    std::array<uint64_t, kMax> blue_{};
    std::array<int8_t, kMax> match_{};
    int nu_ = 0;
    std::vector<Frame> frames_;
    long long committed_ = 0;  // local nodes already added to the shared counter
    long long others_ = 0;     // node count of the other workers at last sync
};

}  // namespace

std::string search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::kGoodColoring: return "good-coloring";
        case SearchStatus::kExhausted: return "exhausted";
        case SearchStatus::kBudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

std::vector<std::pair<int, int>> search_edge_order(const PartiteShape& shape, EdgeOrder order) {
    auto base = host_edges(shape);
    if (order == EdgeOrder::kNatural) return base;

    // grow the decided subgraph vertex by vertex: prefer edges whose endpoints
    // already carry decisions, then the most-loaded endpoints, then canonical
    int n = shape.total_vertices();
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<bool> taken(base.size(), false);
    std::vector<std::pair<int, int>> out;
    out.reserve(base.size());
    for (size_t round = 0; round < base.size(); ++round) {
        int best = -1;
        std::array<int, 3> best_key{-1, -1, 0};
        for (size_t i = 0; i < base.size(); ++i) {
            if (taken[i]) continue;
            auto [u, v] = base[i];
            int touched = (weight[static_cast<size_t>(u)] > 0) + (weight[static_cast<size_t>(v)] > 0);
            int load = weight[static_cast<size_t>(u)] + weight[static_cast<size_t>(v)];
            std::array<int, 3> key{touched, load, -static_cast<int>(i)};
            if (best < 0 || key > best_key) {
                best = static_cast<int>(i);
                best_key = key;
            }
        }
        taken[static_cast<size_t>(best)] = true;
        auto [u, v] = base[static_cast<size_t>(best)];
        ++weight[static_cast<size_t>(u)];
        ++weight[static_cast<size_t>(v)];
        out.push_back(base[static_cast<size_t>(best)]);
    }
    return out;
}

bool lex_leader_prune(const PartiteShape& shape, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int8_t>& colors, int element_cap) {
    if (edges.size() != colors.size())
        throw std::invalid_argument("colors must parallel the edge order");
    int k = 0;
    while (k < static_cast<int>(colors.size()) && colors[static_cast<size_t>(k)] >= 0) ++k;

    auto elements = automorphism_elements(shape, element_cap);
    auto maps = edge_position_maps(edges, elements);
    for (const auto& src : maps)
        if (lex_scan(src, colors.data(), k) == LexVerdict::kPrune) return true;
    return false;
}

SearchResult find_good_coloring(const PartiteShape& shape, int n, int cycle_len,
                                const SearchOptions& options) {
    if (n < 1) throw std::invalid_argument("stripe size must be >= 1");
    if (cycle_len < 3 || cycle_len > 16) throw std::invalid_argument("cycle length out of range");
    if (options.node_budget <= 0 || options.time_budget_seconds <= 0)
        throw std::invalid_argument("budgets must be positive");
    if (shape.host_edge_count() > kMaxHostEdges)
        throw std::invalid_argument("host exceeds the edge cap");

    auto started = Clock::now();
    auto deadline = started + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(options.time_budget_seconds));

    auto edges = search_edge_order(shape, options.edge_order);
    std::vector<std::vector<int32_t>> lex_maps;
    if (options.symmetry == SymmetryMode::kLexLeader)
        lex_maps = edge_position_maps(edges, automorphism_elements(shape, options.lex_element_cap));

    SharedState shared;
    PruneCounts total_prunes;
    long long total_nodes = 0;

    int workers = std::max(1, options.workers);
    if (workers == 1 || edges.size() < 8) {
        Worker w(shape, n, cycle_len, options, edges, lex_maps, shared, deadline);
        w.dfs(0);
        total_prunes = w.prunes;
        total_nodes = w.local_nodes;
    } else {
        // split the tree at a shallow frontier; workers own disjoint subtrees
        int depth = std::min<int>(static_cast<int>(edges.size()),
                                  std::bit_width(static_cast<unsigned>(workers * 8)) + 3);
        Worker seed(shape, n, cycle_len, options, edges, lex_maps, shared, deadline);
        std::vector<std::vector<int8_t>> frontier;
        seed.expand(0, depth, frontier);
        total_prunes = seed.prunes;
        total_nodes = seed.local_nodes;

        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        std::mutex merge_mutex;
        for (int wi = 0; wi < workers; ++wi) {
            pool.emplace_back([&]() {
                for (;;) {
                    size_t idx = next.fetch_add(1);
                    if (idx >= frontier.size()) break;
                    if (shared.found.load() || shared.budget_hit.load()) break;
                    Worker fresh(shape, n, cycle_len, options, edges, lex_maps, shared, deadline);
                    if (!fresh.load_prefix(frontier[idx])) continue;
                    fresh.dfs(static_cast<int>(frontier[idx].size()));
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    total_prunes.stripe += fresh.prunes.stripe;
                    total_prunes.cycle += fresh.prunes.cycle;
                    total_prunes.dominance += fresh.prunes.dominance;
                    total_prunes.symmetry += fresh.prunes.symmetry;
                    total_nodes += fresh.local_nodes;
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    SearchResult result;
    result.record.part_sizes = shape.part_sizes();
    result.record.n = n;
    result.record.cycle_len = cycle_len;
    result.record.nodes_explored = std::max<long long>(1, total_nodes);
    result.record.prunes = total_prunes;
    result.record.wall_seconds =
        std::chrono::duration<double>(Clock::now() - started).count();
    result.record.options = options;

    if (shared.found.load()) {
        Coloring coloring(shape);
        for (size_t i = 0; i < edges.size(); ++i)
            if (shared.winning_colors[i] == 0) coloring.red.add(edges[i].first, edges[i].second);
        // never trust search state: re-check with the detectors
        if (!verify_good(coloring, n, cycle_len).is_good)
            throw std::logic_error("search returned a coloring that fails verification");
        result.status = SearchStatus::kGoodColoring;
        result.coloring = std::move(coloring);
        return result;
    }
    // never certify exhaustion from a run that tripped (or overshot) its budget
    if (shared.budget_hit.load() || total_nodes > options.node_budget) {
        result.status = SearchStatus::kBudgetExceeded;
        return result;
    }
    result.status = SearchStatus::kExhausted;
    return result;
}

UpperBoundResult certify_upper_bound(int j, int n, const SearchOptions& options) {
    UpperBoundResult out;
    Evaluation eval = ramsey_value(j, n);
    out.claimed = eval.value;
    if (eval.value.infinite)
        throw std::invalid_argument("no finite upper bound exists for a bipartite host");

    if (static_cast<long long>(j) * eval.value.t > kMaxTotalVertices) {
        out.note = "host at the claimed value exceeds desk-scale caps";
        return out;
    }
    PartiteShape host = PartiteShape::uniform(j, eval.value.t);
    if (host.host_edge_count() > kMaxHostEdges) {
        out.note = "host at the claimed value exceeds desk-scale caps";
        return out;
    }

    SearchResult search = find_good_coloring(host, n, 7, options);
    switch (search.status) {
        case SearchStatus::kExhausted:
            out.status = UpperBoundResult::Status::kExhausted;
            break;
        case SearchStatus::kBudgetExceeded:
            out.note = "search budget exhausted before the tree was";
            break;
        case SearchStatus::kGoodColoring:
            out.note = "a good coloring exists at the claimed value; bound not certified";
            break;
    }
    out.search = std::move(search);
    return out;
}

}  // namespace ramsey
