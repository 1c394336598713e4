#include "ramsey/host.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ramsey {

PartiteShape::PartiteShape(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("shape needs at least one part");
    for (int s : sizes_) {
        if (s < 1) throw std::invalid_argument("every part size must be >= 1");
        total_ += s;
    }
    if (total_ > kMaxTotalVertices)
        throw std::invalid_argument("shape exceeds the " + std::to_string(kMaxTotalVertices) +
                                    "-vertex cap");
    part_of_.reserve(static_cast<size_t>(total_));
    for (int p = 0; p < parts(); ++p)
        for (int s = 0; s < sizes_[static_cast<size_t>(p)]; ++s) part_of_.push_back(p);
}

PartiteShape PartiteShape::uniform(int parts, int size) {
    if (parts < 1) throw std::invalid_argument("parts must be >= 1");
    return PartiteShape(std::vector<int>(static_cast<size_t>(parts), size));
}

int PartiteShape::host_edge_count() const {
    int within = 0;
    for (int s : sizes_) within += s * (s - 1) / 2;
    return total_ * (total_ - 1) / 2 - within;
}

int PartiteShape::part_of(int v) const {
    if (v < 0 || v >= total_) throw std::invalid_argument("vertex out of range");
    return part_of_[static_cast<size_t>(v)];
}

int PartiteShape::vertex_index(VertexRef r) const {
    if (r.part < 0 || r.part >= parts()) throw std::invalid_argument("part out of range");
    if (r.slot < 0 || r.slot >= sizes_[static_cast<size_t>(r.part)])
        throw std::invalid_argument("slot out of range");
    int base = 0;
    for (int p = 0; p < r.part; ++p) base += sizes_[static_cast<size_t>(p)];
    return base + r.slot;
}

VertexRef PartiteShape::vertex_ref(int v) const {
    int p = part_of(v);
    int base = 0;
    for (int q = 0; q < p; ++q) base += sizes_[static_cast<size_t>(q)];
    return VertexRef{p, v - base};
}

std::string PartiteShape::describe() const {
    std::ostringstream out;
    out << "K{";
    for (size_t i = 0; i < sizes_.size(); ++i) out << (i ? "," : "") << sizes_[i];
    out << "}";
    return out.str();
}

std::vector<std::pair<int, int>> host_edges(const PartiteShape& shape) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(shape.host_edge_count()));
    int n = shape.total_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!shape.same_part(u, v)) out.emplace_back(u, v);
    return out;
}

HostEdgeIndex::HostEdgeIndex(const PartiteShape& shape) : edges(host_edges(shape)) {
    for (auto& row : table_) row.fill(-1);
    for (size_t k = 0; k < edges.size(); ++k) {
        auto [u, v] = edges[k];
        table_[static_cast<size_t>(u)][static_cast<size_t>(v)] = static_cast<int16_t>(k);
        table_[static_cast<size_t>(v)][static_cast<size_t>(u)] = static_cast<int16_t>(k);
    }
}

int HostEdgeIndex::index_of(int u, int v) const {
    if (u < 0 || v < 0 || u >= kMaxTotalVertices || v >= kMaxTotalVertices) return -1;
    return table_[static_cast<size_t>(u)][static_cast<size_t>(v)];
}

EdgeSet::EdgeSet(PartiteShape shape) : shape_(std::move(shape)) {}

EdgeSet EdgeSet::full_host(const PartiteShape& shape) {
    EdgeSet out(shape);
    for (auto [u, v] : host_edges(shape)) out.add(u, v);
    return out;
}

void EdgeSet::check_pair(int u, int v) const {
    int n = shape_.total_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not host edges");
    if (shape_.same_part(u, v)) throw std::invalid_argument("within-part pair is not a host edge");
}

bool EdgeSet::contains(int u, int v) const {
    int n = shape_.total_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    return (adj_[static_cast<size_t>(u)] >> v) & 1u;
}

void EdgeSet::add(int u, int v) {
    check_pair(u, v);
    if (contains(u, v)) return;
    adj_[static_cast<size_t>(u)] |= 1ull << v;
    adj_[static_cast<size_t>(v)] |= 1ull << u;
    ++count_;
}

void EdgeSet::remove(int u, int v) {
    check_pair(u, v);
    if (!contains(u, v)) return;
    adj_[static_cast<size_t>(u)] &= ~(1ull << v);
    adj_[static_cast<size_t>(v)] &= ~(1ull << u);
    --count_;
}

void EdgeSet::toggle(int u, int v) {
    if (contains(u, v))
        remove(u, v);
    else
        add(u, v);
}

int EdgeSet::degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

EdgeSet EdgeSet::complement_in_host() const {
    EdgeSet out(shape_);
    for (auto [u, v] : host_edges(shape_))
        if (!contains(u, v)) out.add(u, v);
    return out;
}

std::vector<std::pair<int, int>> EdgeSet::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(count_));
    int n = shape_.total_vertices();
    for (int u = 0; u + 1 < n; ++u) {
        uint64_t higher = adj_[static_cast<size_t>(u)] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

bool EdgeSet::operator==(const EdgeSet& o) const {
    return shape_ == o.shape_ && count_ == o.count_ && adj_ == o.adj_;
}

EdgeSet complement_in_host(const EdgeSet& edges) { return edges.complement_in_host(); }

Coloring::Coloring(PartiteShape s, EdgeSet r) : shape(std::move(s)), red(std::move(r)) {
    if (!(red.shape() == shape)) throw std::invalid_argument("red edge set is over a different shape");
}

Coloring delete_slot(const Coloring& coloring, VertexRef v, bool allow_empty_part) {
    const PartiteShape& shape = coloring.shape;
    int gone = shape.vertex_index(v);  // validates v
    int psize = shape.part_size(v.part);
    if (psize == 1 && !allow_empty_part)
        throw std::invalid_argument("deleting the last slot of a part (pass allow_empty_part)");

    std::vector<int> new_sizes;
    for (int p = 0; p < shape.parts(); ++p) {
        int s = shape.part_size(p) - (p == v.part ? 1 : 0);
        if (s > 0) new_sizes.push_back(s);
    }
    if (new_sizes.empty()) throw std::invalid_argument("cannot delete the only vertex of the host");
    PartiteShape reduced(new_sizes);

    Coloring out(reduced);
    for (auto [a, b] : coloring.red.edges()) {
        if (a == gone || b == gone) continue;
        int na = a - (a > gone ? 1 : 0);
        int nb = b - (b > gone ? 1 : 0);
        out.red.add(na, nb);
    }
    return out;
}

Coloring part_slot_permute(const Coloring& coloring, const std::vector<int>& part_perm,
                           const std::vector<std::vector<int>>& slot_perms) {
    const PartiteShape& shape = coloring.shape;
    int j = shape.parts();
    if (static_cast<int>(part_perm.size()) != j || static_cast<int>(slot_perms.size()) != j)
        throw std::invalid_argument("permutation arity does not match the shape");

    std::vector<bool> hit(static_cast<size_t>(j), false);
    for (int p = 0; p < j; ++p) {
        int q = part_perm[static_cast<size_t>(p)];
        if (q < 0 || q >= j || hit[static_cast<size_t>(q)])
            throw std::invalid_argument("part_perm is not a permutation");
        hit[static_cast<size_t>(q)] = true;
        if (shape.part_size(q) != shape.part_size(p))
            throw std::invalid_argument("part_perm mixes unequal-size parts");
        const auto& sp = slot_perms[static_cast<size_t>(p)];
        int sz = shape.part_size(p);
        if (static_cast<int>(sp.size()) != sz)
            throw std::invalid_argument("slot_perms[" + std::to_string(p) + "] has wrong length");
        std::vector<bool> shit(static_cast<size_t>(sz), false);
        for (int s : sp) {
            if (s < 0 || s >= sz || shit[static_cast<size_t>(s)])
                throw std::invalid_argument("slot_perms[" + std::to_string(p) +
                                            "] is not a permutation");
            shit[static_cast<size_t>(s)] = true;
        }
    }

    // vertex image under the automorphism
    int n = shape.total_vertices();
    std::vector<int> image(static_cast<size_t>(n));
    for (int lin = 0; lin < n; ++lin) {
        VertexRef r = shape.vertex_ref(lin);
        VertexRef m{part_perm[static_cast<size_t>(r.part)],
                    slot_perms[static_cast<size_t>(r.part)][static_cast<size_t>(r.slot)]};
        image[static_cast<size_t>(lin)] = shape.vertex_index(m);
    }

    Coloring out(shape);
    for (auto [a, b] : coloring.red.edges())
        out.red.add(image[static_cast<size_t>(a)], image[static_cast<size_t>(b)]);
    return out;
}

}  // namespace ramsey
