#pragma once

// Value types shared by the counting kernels and the 2D/3D pipelines.

#include <cstddef>
#include <cstdint>

#include "digitopo/grid.hpp"

namespace digitopo {

/// Boundary-pixel classes of one 2D component. A pixel is a boundary pixel
/// iff it is foreground and at least one of its 8 neighbors is background;
/// cp<i> counts boundary pixels with exactly i foreground 4-neighbors.
struct CornerHistogram {
    std::size_t cp0 = 0; // isolated pixel, no 4-neighbors at all
    std::size_t cp1 = 0;
    std::size_t cp2 = 0; // outward corners (and thin pixels)
    std::size_t cp3 = 0;
    std::size_t cp4 = 0; // inward corners
    std::size_t thin = 0;        // cp2 pixels whose two neighbors are opposite
    std::size_t multi_curve = 0; // boundary pixels whose background ring splits into >1 run

    std::size_t total() const noexcept { return cp0 + cp1 + cp2 + cp3 + cp4; }

    CornerHistogram& operator+=(const CornerHistogram& o) noexcept {
        cp0 += o.cp0; cp1 += o.cp1; cp2 += o.cp2; cp3 += o.cp3; cp4 += o.cp4;
        thin += o.thin; multi_curve += o.multi_curve;
        return *this;
    }
    friend bool operator==(const CornerHistogram&, const CornerHistogram&) = default;
};

/// Surface points of a closed digital surface, bucketed by how many surface
/// neighbors they have. Curvature per class in quarter-pi units:
/// M3 = +2, M4 = 0, M5 = -2, M6 = -4.
struct SurfaceHistogram {
    std::size_t m3 = 0;
    std::size_t m4 = 0;
    std::size_t m5 = 0;
    std::size_t m6 = 0;
    std::size_t irregular = 0;

    std::size_t total() const noexcept { return m3 + m4 + m5 + m6 + irregular; }

    void add_degree(int degree) noexcept {
        switch (degree) {
        case 3: ++m3; break;
        case 4: ++m4; break;
        case 5: ++m5; break;
        case 6: ++m6; break;
        default: ++irregular; break;
        }
    }

    SurfaceHistogram& operator+=(const SurfaceHistogram& o) noexcept {
        m3 += o.m3; m4 += o.m4; m5 += o.m5; m6 += o.m6; irregular += o.irregular;
        return *this;
    }
    friend bool operator==(const SurfaceHistogram&, const SurfaceHistogram&) = default;
};

enum class PathologyKind2D : std::uint8_t {
    DiagMain, // [[1,0],[0,1]]
    DiagAnti, // [[0,1],[1,0]]
};

struct Pathology2D {
    int x = 0;
    int y = 0;
    PathologyKind2D kind = PathologyKind2D::DiagMain;
    friend bool operator==(const Pathology2D&, const Pathology2D&) = default;
};

enum class PathologyKind3D : std::uint8_t {
    VertexPair,           // two object voxels touching only at a vertex
    EdgePair,             // two object voxels touching only along an edge
    ComplementVertexPair, // 2x2x2 block with exactly two antipodal empty voxels
};

/// `anchor` is the minimal voxel of the 2x2x2 (vertex) or 2x2 (edge) window.
/// `axis` is the edge direction for EdgePair (0=x,1=y,2=z) and -1 otherwise.
/// `first`/`second` are the two object voxels of the offending pair, or the
/// two empty voxels for ComplementVertexPair, in scan order.
struct Pathology3D {
    Coord3 anchor;
    PathologyKind3D kind = PathologyKind3D::VertexPair;
    int axis = -1;
    Coord3 first;
    Coord3 second;
    friend bool operator==(const Pathology3D&, const Pathology3D&) = default;
};

enum class RepairOp : std::uint8_t { Delete, Add };

enum class RepairReason : std::uint8_t {
    Speckle,
    PathologyFix,
    VertexContact, // 3D: pair sharing only a 0-cell
    EdgeContact,   // 3D: pair sharing only a 1-cell
    ComplementFill // 3D: 2x2x2 block with two antipodal holes
};

struct RepairAction {
    int x = 0;
    int y = 0;
    int z = 0;
    RepairOp op = RepairOp::Delete;
    RepairReason reason = RepairReason::PathologyFix;
    friend bool operator==(const RepairAction&, const RepairAction&) = default;
};

const char* to_string(PathologyKind2D k) noexcept;
const char* to_string(PathologyKind3D k) noexcept;
const char* to_string(RepairOp op) noexcept;
const char* to_string(RepairReason r) noexcept;

} // namespace digitopo
