#pragma once

// Brute-force ground truth. Nothing here uses the corner or surface-point
// formulas; results come from flood fill and explicit cell counting.

#include <cstdint>
#include <vector>

#include "digitopo/grid.hpp"
#include "digitopo/types.hpp"

namespace digitopo {

struct CellComplexSummary {
    std::int64_t v = 0; // 0-cells
    std::int64_t e = 0; // 1-cells
    std::int64_t f = 0; // 2-cells
    std::int64_t chi = 0;
    /// Minimal vertex (linear VertexGrid index) of the complex; orders the
    /// boundary surfaces of a volume.
    std::uint64_t min_vertex = 0;

    /// Genus of a closed orientable surface with this Euler characteristic.
    std::int64_t genus() const noexcept { return (2 - chi) / 2; }
};

/// (number of 4-connected background regions, outer one included) - 1.
long holes_by_floodfill(const Image2D& component);

/// Cubical complex of the closed pixels: f pixels, e distinct unit edges,
/// v distinct corners. For a connected component holes = 1 - chi.
CellComplexSummary euler_2d(const Image2D& component);

/// Boundary faces (unit squares between an object and a background voxel),
/// grouped into surfaces by shared edges, one summary per surface ordered by
/// minimal vertex. Throws ErrorKind::NonManifold when a surface has odd chi.
std::vector<CellComplexSummary> euler_surface_3d(const Volume3D& vol);

/// Discrete Gauss-Bonnet in quarter-pi units:
/// 2*m3 - 2*m5 - 4*m6 == 8*(2 - 2g).
bool curvature_audit(const SurfaceHistogram& h, std::int64_t genus);

} // namespace digitopo
