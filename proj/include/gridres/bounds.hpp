// Closed-form bounds for 3D grids: the two face thresholds, the regime map
// for predicted k-metric dimensions, the gap-regime conjectured value, and
// the face lower bound on per-pair resolver counts.
#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "gridres/grid.hpp"
#include "gridres/vertex_set.hpp"

namespace gridres {

// Fewest face resolvers over pairs differing in exactly one coordinate.
inline int alpha_m(const GridDims& g) {
    require_rank3(g, "alpha_m");
    return 2 * (g.dim(0) + g.dim(1) + g.dim(2)) - 8;
}

// Fewest face resolvers over all pairs; equals the strength of the full
// vertex set, so it is also the existence threshold for k-resolving sets.
inline int alpha_M(const GridDims& g) {
    require_rank3(g, "alpha_M");
    const int n1 = g.dim(0), n2 = g.dim(1), n3 = g.dim(2);
    return std::min({n1 * (n2 + n3 - 2), n2 * (n1 + n3 - 2), n3 * (n1 + n2 - 2)});
}

// Metric dimension of every 3D grid with all factors >= 2.
inline int metric_dim_value(const GridDims& g) {
    require_rank3(g, "metric dimension");
    return 3;
}

enum class PredictStatus { Exact, UpperBoundOnly, Nonexistent };
enum class Regime { BelowAlphaMin, Gap, AtOrAboveAlphaMax };

inline const char* predict_status_name(PredictStatus s) {
    switch (s) {
        case PredictStatus::Exact: return "exact";
        case PredictStatus::UpperBoundOnly: return "upper-bound-only";
        case PredictStatus::Nonexistent: return "nonexistent";
    }
    return "?";
}

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::BelowAlphaMin: return "below_alpha_m";
        case Regime::Gap: return "gap";
        case Regime::AtOrAboveAlphaMax: return "at_or_above_alpha_M";
    }
    return "?";
}

// Prediction for the (k+1)-metric dimension: the smallest set that still
// resolves after any k members fail. k counts tolerated failures.
struct DimPrediction {
    int k = 1;
    PredictStatus status = PredictStatus::Exact;
    std::optional<Index> value;  // exact size, or the face upper bound
    Regime regime = Regime::BelowAlphaMin;
    std::string provenance;
    std::optional<std::string> note;
};

inline DimPrediction predict_dim(const GridDims& g, int k) {
    require_rank3(g, "dimension prediction");
    if (k < 1) throw DomainError("prediction needs k >= 1 tolerated failures");
    const int am = alpha_m(g);
    const int aM = alpha_M(g);

    DimPrediction p;
    p.k = k;
    if (k >= aM) {
        p.status = PredictStatus::Nonexistent;
        p.regime = Regime::AtOrAboveAlphaMax;
        p.provenance = "no set of any size survives this many failures";
        return p;
    }
    if (k >= am) {
        p.status = PredictStatus::UpperBoundOnly;
        p.regime = Regime::Gap;
        p.value = face_count_formula(g);
        p.provenance = "face set stays feasible up to the existence threshold";
        return p;
    }
    p.status = PredictStatus::Exact;
    p.regime = Regime::BelowAlphaMin;
    p.value = (k % 2 == 1) ? Index{2 * k + 2} : Index{2 * k + 3};
    p.provenance = "matched frame constructions and parity floor";
    if (k == 1) p.note = "odd-k frame construction applied at k = 1";
    return p;
}

// Conjectured exact value inside the gap regime alpha_m <= k < alpha_M.
inline Index conjecture_value(const GridDims& g, int k) {
    require_rank3(g, "conjectured dimension");
    const int am = alpha_m(g);
    const int aM = alpha_M(g);
    if (k < am || k >= aM)
        throw DomainError("conjectured value is defined only for alpha_m <= k < alpha_M");
    return std::min<Index>(4 * k - 2 * am + 4, face_count_formula(g));
}

// Every pair has at least alpha_M face resolvers; a pair spanning a full
// axis (coordinates 0 and n-1 on it) has at least n*(n'+n''-2), which can
// exceed alpha_M.
struct FaceBoundInfo {
    Index bound = 0;
    int differing_axes = 0;
    std::optional<int> spanning_axis;  // 1-based, first axis achieving the sharper bound
    std::optional<Index> spanning_bound;
};

inline FaceBoundInfo face_resolver_lower_bound(const GridDims& g, const Vertex& u,
                                               const Vertex& v) {
    require_rank3(g, "face resolver bound");
    if (u == v) throw DegeneratePairError("face resolver bound needs distinct vertices");
    check_vertex(g, u);
    check_vertex(g, v);

    FaceBoundInfo info;
    info.bound = alpha_M(g);
    for (int i = 0; i < 3; ++i)
        if (u[i] != v[i]) ++info.differing_axes;
    for (int i = 0; i < 3; ++i) {
        const int lo = std::min(u[i], v[i]);
        const int hi = std::max(u[i], v[i]);
        if (lo == 0 && hi == g.dim(i) - 1) {
            const int j = (i + 1) % 3, h = (i + 2) % 3;
            const Index b = Index{g.dim(i)} * (g.dim(j) + g.dim(h) - 2);
            if (!info.spanning_bound || b > *info.spanning_bound) {
                info.spanning_axis = i + 1;
                info.spanning_bound = b;
            }
        }
    }
    if (info.spanning_bound) info.bound = std::max(info.bound, *info.spanning_bound);
    return info;
}

}  // namespace gridres
