// Certified resolving-set constructions: corner basis, four-point sets,
// the frame family along box edges, the odd/even frame unions, and the
// full face set. Each returns a Certificate, machine-verified when the
// grid is small enough.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gridres/bounds.hpp"
#include "gridres/grid.hpp"
#include "gridres/verify.hpp"
#include "gridres/vertex_set.hpp"

namespace gridres {

constexpr Index kDefaultVerifyCap = 200;

// claimed_k is the resolving level: the set claims strength >= claimed_k.
struct Certificate {
    std::string name;
    GridDims grid;
    VertexSet set;
    int claimed_k = 1;
    bool verified_flag = false;
    std::optional<VerifyReport> verified;
};

namespace detail {

inline Certificate certify(std::string name, const GridDims& g, VertexSet set, int claimed_k,
                           Index verify_cap, bool force_verify) {
    Certificate cert{std::move(name), g, std::move(set), claimed_k, false, std::nullopt};
    if (force_verify || g.vertex_count() <= verify_cap) {
        cert.verified = resolving_strength(g, cert.set);
        cert.verified_flag = true;
        if (cert.verified->strength < claimed_k)
            throw std::logic_error("construction '" + cert.name + "' verified at strength " +
                                   std::to_string(cert.verified->strength) +
                                   ", below its claimed level " + std::to_string(claimed_k));
    }
    return cert;
}

}  // namespace detail

// Three corners of one face: a minimum resolving set.
inline Certificate corner_basis(const GridDims& g, Index verify_cap = kDefaultVerifyCap,
                                bool force_verify = false) {
    require_rank3(g, "corner basis");
    VertexSet s(g);
    s.insert(Vertex{0, 0, 0});
    s.insert(Vertex{g.dim(0) - 1, 0, 0});
    s.insert(Vertex{0, g.dim(1) - 1, 0});
    return detail::certify("corner-basis", g, std::move(s), 1, verify_cap, force_verify);
}

// {(0,0,h), (n1-1,0,h), (0,n2-1,h), (i,j,h')} with h != h' resolves.
inline Certificate four_point_set(const GridDims& g, int h, int h_prime, int i, int j,
                                  Index verify_cap = kDefaultVerifyCap,
                                  bool force_verify = false) {
    require_rank3(g, "four-point set");
    if (h == h_prime) throw DomainError("four-point set needs two distinct layers h and h'");
    auto layer_ok = [&](int x) { return 0 <= x && x < g.dim(2); };
    if (!layer_ok(h) || !layer_ok(h_prime))
        throw DomainError("four-point layer index out of range");
    if (i < 0 || i >= g.dim(0) || j < 0 || j >= g.dim(1))
        throw DomainError("four-point (i, j) out of range");
    VertexSet s(g);
    s.insert(Vertex{0, 0, h});
    s.insert(Vertex{g.dim(0) - 1, 0, h});
    s.insert(Vertex{0, g.dim(1) - 1, h});
    s.insert(Vertex{i, j, h_prime});
    return detail::certify("four-point", g, std::move(s), 1, verify_cap, force_verify);
}

// One 4-vertex set of the frame family: four box-edge vertices sharing one
// fixed coordinate on `axis` (1-based).
struct FrameSet {
    int axis = 1;
    int index = 0;
    std::array<Vertex, 4> members;
};

// The n1+n2+n3-4 pairwise disjoint frame sets, in axis-1 layers first
// (i = 0..n1-1), then interior axis-2 layers (j = 1..n2-2), then interior
// axis-3 layers (h = 1..n3-2). Their union lies on the box edges.
inline std::vector<FrameSet> frame_family(const GridDims& g) {
    require_rank3(g, "frame family");
    const int n1 = g.dim(0), n2 = g.dim(1), n3 = g.dim(2);
    std::vector<FrameSet> family;
    family.reserve(static_cast<std::size_t>(n1 + n2 + n3 - 4));
    for (int i = 0; i < n1; ++i)
        family.push_back({1, i,
                          {Vertex{i, 0, 0}, Vertex{i, n2 - 1, 0}, Vertex{i, 0, n3 - 1},
                           Vertex{i, n2 - 1, n3 - 1}}});
    for (int j = 1; j < n2 - 1; ++j)
        family.push_back({2, j,
                          {Vertex{0, j, 0}, Vertex{n1 - 1, j, 0}, Vertex{0, j, n3 - 1},
                           Vertex{n1 - 1, j, n3 - 1}}});
    for (int h = 1; h < n3 - 1; ++h)
        family.push_back({3, h,
                          {Vertex{0, 0, h}, Vertex{n1 - 1, 0, h}, Vertex{0, n2 - 1, h},
                           Vertex{n1 - 1, n2 - 1, h}}});
    return family;
}

// Deleting any k vertices leaves three survivors in some frame set, which
// still resolve. k counts tolerated failures; the level claimed is k+1.
inline Certificate odd_k_construction(const GridDims& g, int k,
                                      Index verify_cap = kDefaultVerifyCap,
                                      bool force_verify = false) {
    require_rank3(g, "odd-k construction");
    if (k < 1 || k % 2 == 0) throw DomainError("odd-k construction needs odd k >= 1");
    if (k >= alpha_m(g))
        throw DomainError("odd-k construction needs k < alpha_m = " +
                          std::to_string(alpha_m(g)));
    const auto family = frame_family(g);
    VertexSet s(g);
    const int take = (k + 1) / 2;
    for (int t = 0; t < take; ++t)
        for (const Vertex& v : family[static_cast<std::size_t>(t)].members) s.insert(v);
    return detail::certify("odd-k", g, std::move(s), k + 1, verify_cap, force_verify);
}

inline Certificate even_k_construction(const GridDims& g, int k,
                                       Index verify_cap = kDefaultVerifyCap,
                                       bool force_verify = false) {
    require_rank3(g, "even-k construction");
    if (k < 2 || k % 2 == 1) throw DomainError("even-k construction needs even k >= 2");
    if (k >= alpha_m(g))
        throw DomainError("even-k construction needs k < alpha_m = " +
                          std::to_string(alpha_m(g)));
    const auto family = frame_family(g);
    VertexSet s(g);
    const int take = k / 2 + 1;
    for (int t = 0; t < take; ++t)
        for (const Vertex& v : family[static_cast<std::size_t>(t)].members) s.insert(v);
    s.erase(Vertex{0, 0, 0});
    return detail::certify("even-k", g, std::move(s), k + 1, verify_cap, force_verify);
}

// The full face set, feasible for every k below the existence threshold.
inline Certificate face_construction(const GridDims& g, int k,
                                     Index verify_cap = kDefaultVerifyCap,
                                     bool force_verify = false) {
    require_rank3(g, "face construction");
    if (k < 0) throw DomainError("face construction needs k >= 0");
    if (k >= alpha_M(g))
        throw DomainError("face construction needs k < alpha_M = " +
                          std::to_string(alpha_M(g)));
    return detail::certify("face", g, face_set(g), k + 1, verify_cap, force_verify);
}

}  // namespace gridres
