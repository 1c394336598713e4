#ifndef RAMSEY_HOST_HPP
#define RAMSEY_HOST_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Desk-scale caps. Bit-packed adjacency rows assume <= 64 vertices.
inline constexpr int kMaxTotalVertices = 64;
inline constexpr int kMaxHostEdges = 4096;

struct VertexRef {
    int part = 0;
    int slot = 0;
    bool operator==(const VertexRef&) const = default;
};

// Complete multipartite host K_{j x t} (per-part sizes, so vertex-deleted
// restrictions with ragged parts are representable too).
//
// Linear vertex order is fixed everywhere: parts ascending, slots ascending.
class PartiteShape {
  public:
    explicit PartiteShape(std::vector<int> part_sizes);
    static PartiteShape uniform(int parts, int size);

    int parts() const { return static_cast<int>(sizes_.size()); }
    int part_size(int p) const { return sizes_.at(static_cast<size_t>(p)); }
    const std::vector<int>& part_sizes() const { return sizes_; }
    int total_vertices() const { return total_; }
    int host_edge_count() const;

    int part_of(int v) const;
    int vertex_index(VertexRef r) const;
    VertexRef vertex_ref(int v) const;
    bool same_part(int u, int v) const { return part_of(u) == part_of(v); }
    bool is_host_edge(int u, int v) const { return u != v && !same_part(u, v); }

    std::string describe() const;  // e.g. "K{2,2,2}"

    bool operator==(const PartiteShape& o) const { return sizes_ == o.sizes_; }

  private:
    std::vector<int> sizes_;
    std::vector<int> part_of_;  // linear vertex -> part
    int total_ = 0;
};

// All cross-part pairs (u < v) in the canonical order: lexicographic by (u, v).
std::vector<std::pair<int, int>> host_edges(const PartiteShape& shape);

// Canonical edge list plus O(1) pair->index lookup, shared by search and CNF export.
struct HostEdgeIndex {
    explicit HostEdgeIndex(const PartiteShape& shape);
    std::vector<std::pair<int, int>> edges;
    int index_of(int u, int v) const;  // -1 when (u,v) is not a host edge

  private:
    std::array<std::array<int16_t, kMaxTotalVertices>, kMaxTotalVertices> table_{};
};

// Set of host edges over a fixed shape, stored as per-vertex adjacency bitmasks.
// Within-part pairs are never members; cross-shape operations throw.
class EdgeSet {
  public:
    explicit EdgeSet(PartiteShape shape);
    static EdgeSet full_host(const PartiteShape& shape);

    const PartiteShape& shape() const { return shape_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int u, int v) const;
    void add(int u, int v);     // throws on a within-part pair
    void remove(int u, int v);
    void toggle(int u, int v);

    uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const;

    EdgeSet complement_in_host() const;

    // Members in canonical (u < v, lexicographic) order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const EdgeSet& o) const;

  private:
    PartiteShape shape_;
    std::array<uint64_t, kMaxTotalVertices> adj_{};
    int count_ = 0;

    void check_pair(int u, int v) const;
};

EdgeSet complement_in_host(const EdgeSet& edges);

// 2-coloring of the host: red is explicit, blue is host-minus-red.
struct Coloring {
    PartiteShape shape;
    EdgeSet red;

    explicit Coloring(PartiteShape s) : shape(s), red(std::move(s)) {}
    Coloring(PartiteShape s, EdgeSet r);

    EdgeSet blue() const { return red.complement_in_host(); }
};

// Removes one slot; red edges not incident to it survive under re-indexing.
// Deleting the last slot of a part drops the whole part and is only allowed
// with allow_empty_part (an empty part is not a valid shape).
Coloring delete_slot(const Coloring& coloring, VertexRef v, bool allow_empty_part = false);

// Host automorphism image. part_perm must map each part to an equal-size part;
// slot_perms[p] permutes the slots of source part p.
Coloring part_slot_permute(const Coloring& coloring, const std::vector<int>& part_perm,
                           const std::vector<std::vector<int>>& slot_perms);

}  // namespace ramsey

#endif
