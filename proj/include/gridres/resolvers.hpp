// Which vertices tell two grid vertices apart: the pair-resolver predicate,
// per-pair resolver sets, the dense table the exact solver runs on, and the
// clamping equivalence that reduces far-away vertices to box vertices.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridres/grid.hpp"
#include "gridres/vertex_set.hpp"

namespace gridres {

// z resolves {u, v} iff d(z,u) != d(z,v).
inline bool resolves(const GridDims& g, const Vertex& z, const Vertex& u, const Vertex& v) {
    if (u == v) throw DegeneratePairError("resolver query needs two distinct vertices");
    return distance(g, z, u) != distance(g, z, v);
}

inline VertexSet resolver_set(const GridDims& g, const Vertex& u, const Vertex& v) {
    if (u == v) throw DegeneratePairError("resolver set needs two distinct vertices");
    check_vertex(g, u);
    check_vertex(g, v);
    VertexSet s(g);
    for (Index i = 0; i < g.vertex_count(); ++i) {
        Vertex z = index_vertex(g, i);
        if (distance(g, z, u) != distance(g, z, v)) s.insert_index(i);
    }
    return s;
}

// Unordered pairs (i, j), i < j, enumerated row-major:
// (0,1), (0,2), ..., (0,N-1), (1,2), ...
inline Index pair_key(Index i, Index j, Index n) {
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline std::pair<Index, Index> pair_from_key(Index key, Index n) {
    Index i = 0;
    Index row = n - 1;
    while (key >= row) {
        key -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + key};
}

constexpr Index kDefaultTableCap = 4096;

// Resolver sets for every unordered vertex pair, stored as flat bit rows
// keyed by (min-index, max-index). Row bits are vertex indices.
class PairResolverTable {
public:
    explicit PairResolverTable(const GridDims& grid, Index cap = kDefaultTableCap)
        : grid_(grid), n_(grid.vertex_count()) {
        if (n_ > cap)
            throw ResourceLimitError("grid has " + std::to_string(n_) +
                                         " vertices, above the resolver-table cap of " +
                                         std::to_string(cap) + "; raise the cap to at least " +
                                         std::to_string(n_),
                                     n_);
        pair_count_ = n_ * (n_ - 1) / 2;
        words_per_row_ = static_cast<std::size_t>((n_ + 63) / 64);
        bits_.assign(static_cast<std::size_t>(pair_count_) * words_per_row_, 0);
        counts_.assign(static_cast<std::size_t>(pair_count_), 0);

        std::vector<Vertex> verts;
        verts.reserve(static_cast<std::size_t>(n_));
        for (Index i = 0; i < n_; ++i) verts.push_back(index_vertex(grid_, i));

        Index key = 0;
        for (Index i = 0; i < n_; ++i) {
            for (Index j = i + 1; j < n_; ++j, ++key) {
                std::uint64_t* row = row_ptr(key);
                int count = 0;
                for (Index z = 0; z < n_; ++z) {
                    if (distance(grid_, verts[static_cast<std::size_t>(z)],
                                 verts[static_cast<std::size_t>(i)]) !=
                        distance(grid_, verts[static_cast<std::size_t>(z)],
                                 verts[static_cast<std::size_t>(j)])) {
                        row[z >> 6] |= std::uint64_t{1} << (z & 63);
                        ++count;
                    }
                }
                counts_[static_cast<std::size_t>(key)] = count;
            }
        }
    }

    const GridDims& grid() const { return grid_; }
    Index vertex_count() const { return n_; }
    Index pair_count() const { return pair_count_; }
    std::size_t words_per_row() const { return words_per_row_; }

    std::span<const std::uint64_t> row(Index key) const {
        return {row_ptr(key), words_per_row_};
    }

    int resolver_count(Index key) const { return counts_[static_cast<std::size_t>(key)]; }

    bool resolves_pair(Index z, Index key) const {
        const std::uint64_t* r = row_ptr(key);
        return (r[z >> 6] >> (z & 63)) & 1;
    }

    VertexSet entry(Index i, Index j) const {
        VertexSet s(grid_);
        const std::uint64_t* r = row_ptr(pair_key(i, j, n_));
        for (Index z = 0; z < n_; ++z)
            if ((r[z >> 6] >> (z & 63)) & 1) s.insert_index(z);
        return s;
    }

    VertexSet entry(const Vertex& u, const Vertex& v) const {
        if (u == v) throw DegeneratePairError("resolver table lookup needs distinct vertices");
        return entry(vertex_index(grid_, u), vertex_index(grid_, v));
    }

private:
    const std::uint64_t* row_ptr(Index key) const {
        return bits_.data() + static_cast<std::size_t>(key) * words_per_row_;
    }
    std::uint64_t* row_ptr(Index key) {
        return bits_.data() + static_cast<std::size_t>(key) * words_per_row_;
    }

    GridDims grid_;
    Index n_;
    Index pair_count_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> counts_;
};

inline PairResolverTable resolver_table(const GridDims& g, Index cap = kDefaultTableCap) {
    return PairResolverTable(g, cap);
}

// Clamps every coordinate of z into the [min, max] interval of u and v on
// that axis. Resolution of {u, v} is invariant under the clamp, so queries
// about far-away vertices reduce to the shortest-path box.
inline Vertex anchor_equivalent(const GridDims& g, const Vertex& z, const Vertex& u,
                                const Vertex& v) {
    check_vertex(g, z);
    check_vertex(g, u);
    check_vertex(g, v);
    Vertex anchor = z;
    for (int i = 0; i < g.rank(); ++i) {
        const int lo = std::min(u[i], v[i]);
        const int hi = std::max(u[i], v[i]);
        anchor.coords[static_cast<std::size_t>(i)] = std::clamp(z[i], lo, hi);
    }
    return anchor;
}

// Walks the canonical shortest path from u to v (all axis-1 steps, then
// axis 2, then axis 3) and counts how many path vertices resolve the pair.
// Odd d(u,v): every path vertex resolves; even: all but the midpoint.
inline int shortest_path_resolver_count(const GridDims& g, const Vertex& u, const Vertex& v) {
    if (u == v) throw DegeneratePairError("shortest path needs two distinct vertices");
    check_vertex(g, u);
    check_vertex(g, v);
    int count = 0;
    Vertex z = u;
    auto visit = [&] {
        if (distance(g, z, u) != distance(g, z, v)) ++count;
    };
    visit();
    for (int axis = 0; axis < g.rank(); ++axis) {
        const int step = v[axis] > z[axis] ? 1 : -1;
        while (z[axis] != v[axis]) {
            z.coords[static_cast<std::size_t>(axis)] += step;
            visit();
        }
    }
    return count;
}

}  // namespace gridres
