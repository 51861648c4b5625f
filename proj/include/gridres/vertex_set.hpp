// Dense bit-indexed vertex sets over a fixed grid, plus the face and corner
// sets of a grid. Intersection counts are exact popcounts; this is the
// solver's inner-loop currency.
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gridres/grid.hpp"

namespace gridres {

class VertexSet {
public:
    explicit VertexSet(GridDims grid) : grid_(std::move(grid)) {
        const Index n = grid_.vertex_count();
        if (n > (Index{1} << 28))
            throw ResourceLimitError("vertex set too large to materialize", n);
        words_.assign(static_cast<std::size_t>((n + 63) / 64), 0);
    }

    const GridDims& grid() const { return grid_; }
    Index universe_size() const { return grid_.vertex_count(); }

    bool contains_index(Index i) const {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }
    bool contains(const Vertex& u) const { return contains_index(vertex_index(grid_, u)); }

    void insert_index(Index i) {
        words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
    void insert(const Vertex& u) { insert_index(vertex_index(grid_, u)); }

    void erase_index(Index i) {
        words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }
    void erase(const Vertex& u) { erase_index(vertex_index(grid_, u)); }

    Index size() const {
        Index total = 0;
        for (std::uint64_t w : words_) total += std::popcount(w);
        return total;
    }
    bool empty() const {
        for (std::uint64_t w : words_) if (w) return false;
        return true;
    }

    // Members in increasing index order.
    std::vector<Index> indices() const {
        std::vector<Index> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(static_cast<Index>(w) * 64 + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (Index i : indices()) out.push_back(index_vertex(grid_, i));
        return out;
    }

    friend Index intersection_count(const VertexSet& a, const VertexSet& b) {
        a.check_same_grid(b);
        Index total = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            total += std::popcount(a.words_[w] & b.words_[w]);
        return total;
    }

    friend bool is_subset(const VertexSet& a, const VertexSet& b) {
        a.check_same_grid(b);
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            if (a.words_[w] & ~b.words_[w]) return false;
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.grid_ == b.grid_ && a.words_ == b.words_;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_same_grid(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
        return *this;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_same_grid(const VertexSet& other) const {
        if (!(grid_ == other.grid_))
            throw GridMismatchError("vertex sets belong to different grids");
    }

    GridDims grid_;
    std::vector<std::uint64_t> words_;
};

inline VertexSet full_set(const GridDims& g) {
    VertexSet s(g);
    for (Index i = 0; i < g.vertex_count(); ++i) s.insert_index(i);
    return s;
}

inline VertexSet make_set(const GridDims& g, const std::vector<Vertex>& members) {
    VertexSet s(g);
    for (const Vertex& u : members) s.insert(u);
    return s;
}

// All non-interior vertices: some coordinate equal to 0 or n_i - 1.
// |F| = 2(n1n2 + n2n3 + n1n3) - 4(n1 + n2 + n3) + 8.
inline VertexSet face_set(const GridDims& g) {
    require_rank3(g);
    VertexSet s(g);
    for (Index i = 0; i < g.vertex_count(); ++i) {
        Vertex u = index_vertex(g, i);
        if (!is_interior(g, u)) s.insert_index(i);
    }
    return s;
}

inline Index face_count_formula(const GridDims& g) {
    require_rank3(g);
    const Index n1 = g.dim(0), n2 = g.dim(1), n3 = g.dim(2);
    return 2 * (n1 * n2 + n2 * n3 + n1 * n3) - 4 * (n1 + n2 + n3) + 8;
}

// The 2^r vertices with every coordinate extreme.
inline VertexSet corners(const GridDims& g) {
    VertexSet s(g);
    for (Index i = 0; i < g.vertex_count(); ++i) {
        Vertex u = index_vertex(g, i);
        if (is_corner(g, u)) s.insert_index(i);
    }
    return s;
}

// Deletes the given 1-based coordinate from every member; duplicates merge.
inline std::vector<std::array<int, 2>> projection(const VertexSet& s, int axis) {
    require_rank3(s.grid());
    const auto keep = projection_axes(axis);
    std::vector<std::array<int, 2>> out;
    for (const Vertex& u : s.vertices()) {
        std::array<int, 2> p{u[keep[0]], u[keep[1]]};
        bool seen = false;
        for (const auto& q : out)
            if (q == p) { seen = true; break; }
        if (!seen) out.push_back(p);
    }
    return out;
}

}  // namespace gridres
