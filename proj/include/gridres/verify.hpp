// Resolving-strength verification: exact strength with a minimizing witness
// pair, the early-exit k-resolving check, and the cut-plane region witness
// that explains failures of quadrant-confined sets.
#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "gridres/grid.hpp"
#include "gridres/resolvers.hpp"
#include "gridres/vertex_set.hpp"

namespace gridres {

// Least-resolved pair of the scan, keyed lexicographically by
// (min vertex index, max vertex index).
struct Witness {
    Vertex u;
    Vertex v;
    int count = 0;
};

struct VerifyReport {
    GridDims grid;
    VertexSet input_set;
    int strength = 0;
    Witness witness;
    double elapsed_ms = 0;
};

namespace detail {

inline std::vector<Vertex> all_vertices(const GridDims& g) {
    std::vector<Vertex> verts;
    verts.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Index i = 0; i < g.vertex_count(); ++i) verts.push_back(index_vertex(g, i));
    return verts;
}

}  // namespace detail

// strength(S) = min over unordered vertex pairs of |resolvers(u,v) ∩ S|.
// S is k-resolving iff strength(S) >= k. Full scan; the witness is the
// first minimizing pair in (min,max)-index order.
inline VerifyReport resolving_strength(const GridDims& g, const VertexSet& s) {
    if (g.vertex_count() < 2)
        throw DomainError("resolving strength needs a grid with at least two vertices");
    if (!(s.grid() == g)) throw GridMismatchError("set was built over a different grid");
    const auto t0 = std::chrono::steady_clock::now();

    const auto verts = detail::all_vertices(g);
    const auto members = s.vertices();
    const Index n = g.vertex_count();

    int best = static_cast<int>(members.size()) + 1;
    Index best_i = 0, best_j = 1;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            int count = 0;
            for (const Vertex& m : members) {
                if (distance(g, m, verts[static_cast<std::size_t>(i)]) !=
                    distance(g, m, verts[static_cast<std::size_t>(j)]))
                    ++count;
            }
            if (count < best) {
                best = count;
                best_i = i;
                best_j = j;
            }
        }
    }

    VerifyReport report{g, s, best,
                        Witness{verts[static_cast<std::size_t>(best_i)],
                                verts[static_cast<std::size_t>(best_j)], best},
                        0};
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

struct KResolvingCheck {
    bool ok = false;
    std::optional<Witness> witness;  // first pair below k, in (min,max)-index order
};

// Early-exit scan: stops at the first pair with fewer than k resolvers in S.
inline KResolvingCheck is_k_resolving(const GridDims& g, const VertexSet& s, int k) {
    if (k < 1) throw DomainError("k-resolving check needs k >= 1");
    if (g.vertex_count() < 2)
        throw DomainError("k-resolving check needs a grid with at least two vertices");
    if (!(s.grid() == g)) throw GridMismatchError("set was built over a different grid");

    const auto verts = detail::all_vertices(g);
    const auto members = s.vertices();
    const Index n = g.vertex_count();

    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            int count = 0;
            for (const Vertex& m : members) {
                if (distance(g, m, verts[static_cast<std::size_t>(i)]) !=
                    distance(g, m, verts[static_cast<std::size_t>(j)]))
                    ++count;
            }
            if (count < k)
                return {false, Witness{verts[static_cast<std::size_t>(i)],
                                       verts[static_cast<std::size_t>(j)], count}};
        }
    }
    return {true, std::nullopt};
}

// Largest k for which any k-resolving set exists: the strength of the full
// vertex set. Above it even S = V fails, so every S does.
inline int existence_max_k(const GridDims& g) {
    return resolving_strength(g, full_set(g)).strength;
}

enum class DiagonalKind { MmPp, MpPm };

// A cut (a1, a2) on the projection plane of `axis` whose four open quadrants
// contain the projection of S only on one diagonal, plus a vertex pair no
// member of S resolves.
struct RegionWitnessInfo {
    int axis = 1;  // 1-based projection axis
    int a1 = 1;
    int a2 = 1;
    DiagonalKind diagonal = DiagonalKind::MmPp;
    Vertex u;
    Vertex v;
};

// Scans axes 1..3, cuts in ascending (a1, a2), the -- ∪ ++ diagonal before
// -+ ∪ +-, and returns the first cut confining pr_axis(S) to one diagonal.
// The returned pair is unresolved by all of S.
inline std::optional<RegionWitnessInfo> region_witness(const GridDims& g, const VertexSet& s) {
    require_rank3(g, "region witness");
    if (!(s.grid() == g)) throw GridMismatchError("set was built over a different grid");

    const auto members = s.vertices();
    for (int axis = 1; axis <= 3; ++axis) {
        const auto kept = projection_axes(axis);
        const int na = g.dim(kept[0]);
        const int nb = g.dim(kept[1]);
        std::vector<std::array<int, 2>> proj;
        proj.reserve(members.size());
        for (const Vertex& m : members) proj.push_back({m[kept[0]], m[kept[1]]});

        for (int a1 = 1; a1 < na; ++a1) {
            for (int a2 = 1; a2 < nb; ++a2) {
                bool mm_pp = true, mp_pm = true;
                for (const auto& p : proj) {
                    switch (region_of(na, nb, p, a1, a2)) {
                        case Quadrant::MM:
                        case Quadrant::PP:
                            mp_pm = false;
                            break;
                        case Quadrant::MP:
                        case Quadrant::PM:
                            mm_pp = false;
                            break;
                    }
                    if (!mm_pp && !mp_pm) break;
                }
                if (!mm_pp && !mp_pm) continue;

                RegionWitnessInfo w;
                w.axis = axis;
                w.a1 = a1;
                w.a2 = a2;
                std::array<int, 2> pu, pv;
                if (mm_pp) {
                    w.diagonal = DiagonalKind::MmPp;
                    pu = {a1 - 1, a2};
                    pv = {a1, a2 - 1};
                } else {
                    w.diagonal = DiagonalKind::MpPm;
                    pu = {a1 - 1, a2 - 1};
                    pv = {a1, a2};
                }
                std::vector<int> cu(3, 0), cv(3, 0);
                cu[static_cast<std::size_t>(kept[0])] = pu[0];
                cu[static_cast<std::size_t>(kept[1])] = pu[1];
                cv[static_cast<std::size_t>(kept[0])] = pv[0];
                cv[static_cast<std::size_t>(kept[1])] = pv[1];
                w.u = Vertex{cu};
                w.v = Vertex{cv};
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace gridres
