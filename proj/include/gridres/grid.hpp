// r-dimensional grid graphs with closed-form L1 distances, vertex indexing,
// quadrant regions and shortest-path boxes. The 3D case is the main citizen;
// generic-rank support covers construction, indexing and distance only.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "gridres/errors.hpp"

namespace gridres {

using Index = std::int64_t;

struct Vertex {
    std::vector<int> coords;

    Vertex() = default;
    explicit Vertex(std::vector<int> c) : coords(std::move(c)) {}
    Vertex(int x1, int x2, int x3) : coords{x1, x2, x3} {}

    int rank() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Grid shape after normalization: unit factors are dropped (a path factor of
// length 1 does not change the graph), so every stored dimension is >= 2.
// The all-units input collapses to the single-vertex grid with rank 0.
struct GridDims {
    std::vector<int> dims;
    int dropped_units = 0;

    int rank() const { return static_cast<int>(dims.size()); }
    bool trivial() const { return dims.empty(); }
    int dim(int axis) const { return dims[static_cast<std::size_t>(axis)]; }

    Index vertex_count() const {
        Index n = 1;
        for (int d : dims) n *= d;
        return n;
    }

    bool in_bounds(const Vertex& u) const {
        if (u.rank() != rank()) return false;
        for (int i = 0; i < rank(); ++i)
            if (u[i] < 0 || u[i] >= dim(i)) return false;
        return true;
    }

    friend bool operator==(const GridDims& a, const GridDims& b) {
        return a.dims == b.dims;
    }
};

inline GridDims make_grid(const std::vector<int>& raw) {
    if (raw.empty()) throw InvalidDimsError("grid dimensions must be non-empty");
    for (int d : raw) {
        if (d < 1)
            throw InvalidDimsError("grid dimension must be >= 1, got " + std::to_string(d));
    }
    GridDims g;
    for (int d : raw) {
        if (d == 1)
            ++g.dropped_units;
        else
            g.dims.push_back(d);
    }
    return g;
}

inline void check_vertex(const GridDims& g, const Vertex& u) {
    if (!g.in_bounds(u))
        throw GridMismatchError("vertex does not belong to the given grid");
}

inline void require_rank3(const GridDims& g, const char* what = "operation") {
    if (g.rank() != 3)
        throw UnsupportedRankError(std::string(what) + " requires a 3D grid, rank is " +
                                   std::to_string(g.rank()));
}

// Index layout is x1-fastest mixed radix: index = x1 + n1*(x2 + n2*x3) for
// rank 3. Fixed so serialization and tie-breaking are reproducible.
inline Index vertex_index(const GridDims& g, const Vertex& u) {
    check_vertex(g, u);
    Index idx = 0;
    for (int i = g.rank() - 1; i >= 0; --i) idx = idx * g.dim(i) + u[i];
    return idx;
}

inline Vertex index_vertex(const GridDims& g, Index idx) {
    if (idx < 0 || idx >= g.vertex_count())
        throw GridMismatchError("vertex index out of range");
    Vertex u;
    u.coords.resize(static_cast<std::size_t>(g.rank()));
    for (int i = 0; i < g.rank(); ++i) {
        u.coords[static_cast<std::size_t>(i)] = static_cast<int>(idx % g.dim(i));
        idx /= g.dim(i);
    }
    return u;
}

// L1 distance: sum of per-axis coordinate gaps.
inline int distance(const GridDims& g, const Vertex& u, const Vertex& v) {
    check_vertex(g, u);
    check_vertex(g, v);
    int d = 0;
    for (int i = 0; i < g.rank(); ++i) d += std::abs(u[i] - v[i]);
    return d;
}

inline bool is_corner(const GridDims& g, const Vertex& u) {
    check_vertex(g, u);
    for (int i = 0; i < g.rank(); ++i)
        if (u[i] != 0 && u[i] != g.dim(i) - 1) return false;
    return true;
}

// Each axis contributes 1 neighbor at a boundary coordinate and 2 in the
// interior, so degrees range over rank..2*rank.
inline int degree(const GridDims& g, const Vertex& u) {
    check_vertex(g, u);
    int deg = 0;
    for (int i = 0; i < g.rank(); ++i)
        deg += (u[i] == 0 || u[i] == g.dim(i) - 1) ? 1 : 2;
    return deg;
}

inline bool is_interior(const GridDims& g, const Vertex& u) {
    return degree(g, u) == 2 * g.rank();
}

// Axis-aligned box of all vertices on some shortest path between u and v:
// z is inside iff d(u,z) + d(z,v) = d(u,v).
struct VertexBox {
    Vertex lo;
    Vertex hi;

    bool contains(const Vertex& z) const {
        if (z.rank() != lo.rank()) return false;
        for (int i = 0; i < lo.rank(); ++i)
            if (z[i] < lo[i] || z[i] > hi[i]) return false;
        return true;
    }

    Index vertex_count() const {
        Index n = 1;
        for (int i = 0; i < lo.rank(); ++i) n *= hi[i] - lo[i] + 1;
        return n;
    }
};

inline VertexBox shortest_path_box(const GridDims& g, const Vertex& u, const Vertex& v) {
    check_vertex(g, u);
    check_vertex(g, v);
    VertexBox box{u, u};
    for (int i = 0; i < g.rank(); ++i) {
        box.lo.coords[static_cast<std::size_t>(i)] = std::min(u[i], v[i]);
        box.hi.coords[static_cast<std::size_t>(i)] = std::max(u[i], v[i]);
    }
    return box;
}

// Quadrants of a 2D grid split by cuts (a1, a2); coordinates below a cut are
// the "minus" side, at or above it the "plus" side. The four quadrants
// partition the 2D grid.
enum class Quadrant { MM, PP, MP, PM };

inline const char* quadrant_name(Quadrant q) {
    switch (q) {
        case Quadrant::MM: return "MM";
        case Quadrant::PP: return "PP";
        case Quadrant::MP: return "MP";
        case Quadrant::PM: return "PM";
    }
    return "?";
}

struct RegionLabel {
    Quadrant quadrant;
    int axis;  // projection axis (1-based) the 2D grid came from; 0 if direct
    int a1;
    int a2;
};

inline Quadrant region_of(int n1, int n2, std::array<int, 2> p, int a1, int a2) {
    if (a1 < 1 || a1 > n1 - 1 || a2 < 1 || a2 > n2 - 1)
        throw DomainError("region cut values out of range");
    if (p[0] < 0 || p[0] >= n1 || p[1] < 0 || p[1] >= n2)
        throw DomainError("2D point out of bounds");
    const bool lo1 = p[0] < a1;
    const bool lo2 = p[1] < a2;
    if (lo1 && lo2) return Quadrant::MM;
    if (!lo1 && !lo2) return Quadrant::PP;
    if (lo1) return Quadrant::MP;
    return Quadrant::PM;
}

// The two axes that survive when projecting a 3D grid along `axis` (1-based),
// in their original order.
inline std::array<int, 2> projection_axes(int axis) {
    switch (axis) {
        case 1: return {1, 2};
        case 2: return {0, 2};
        case 3: return {0, 1};
        default: throw DomainError("projection axis must be 1, 2 or 3");
    }
}

// --- canonical textual forms -------------------------------------------------
// Grid "n1xn2xn3", vertex "(x1,x2,x3)". Used verbatim in CLI I/O and JSON.

inline std::string format_grid(const GridDims& g) {
    if (g.trivial()) return "1";
    std::string out;
    for (int i = 0; i < g.rank(); ++i) {
        if (i) out += 'x';
        out += std::to_string(g.dim(i));
    }
    return out;
}

inline std::string format_vertex(const Vertex& u) {
    std::string out = "(";
    for (int i = 0; i < u.rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(u[i]);
    }
    out += ')';
    return out;
}

// Parses "AxBxC" (lowercase x separators). Dimensions are normalized through
// make_grid, so "1x4x5" yields the 2D grid 4x5.
inline GridDims parse_grid(const std::string& text) {
    std::vector<int> dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('x', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("expected grid literal like 2x3x4", 1, static_cast<int>(pos) + 1);
        long val = std::stol(tok);
        if (val > 1'000'000)
            throw ParseError("grid dimension too large", 1, static_cast<int>(pos) + 1);
        dims.push_back(static_cast<int>(val));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (dims.empty()) throw ParseError("empty grid literal", 1, 1);
    return make_grid(dims);
}

// Parses "(x1,x2,...)" starting at text[pos]; advances pos past the vertex.
// line/col_base feed error positions for multi-line set files.
inline Vertex parse_vertex_at(const std::string& text, std::size_t& pos, int line,
                              int col_base) {
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(msg, line, col_base + static_cast<int>(pos));
    };
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> coords;
    while (true) {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw fail("expected coordinate");
        long val = std::stol(text.substr(start, pos - start));
        coords.push_back(static_cast<int>(neg ? -val : val));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
        }
        throw fail("expected ',' or ')'");
    }
    return Vertex(std::move(coords));
}

inline Vertex parse_vertex(const std::string& text) {
    std::size_t pos = 0;
    Vertex u = parse_vertex_at(text, pos, 1, 1);
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos != text.size())
        throw ParseError("trailing characters after vertex", 1, static_cast<int>(pos) + 1);
    return u;
}

}  // namespace gridres
