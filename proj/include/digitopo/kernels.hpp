#pragma once

// Counting kernels. Every kernel exists twice: `serial` is the plain
// reference used by the tests, `parallel` splits the scan over rows / z-slabs
// with OpenMP and folds the partial results in slab order. Both must return
// identical results on every input.

#include <array>
#include <cstdint>
#include <vector>

#include "digitopo/grid.hpp"
#include "digitopo/types.hpp"

namespace digitopo {

/// Grid vertex (i,j,k), 0 <= i <= nx etc. Vertex (i,j,k) is a corner of the
/// voxels (i-1..i, j-1..j, k-1..k).
struct VertexGrid {
    int nx = 0; // vertex extents = voxel extents + 1
    int ny = 0;
    int nz = 0;

    static VertexGrid of(const Volume3D& vol) noexcept {
        return {vol.nx() + 1, vol.ny() + 1, vol.nz() + 1};
    }
    std::size_t size() const noexcept {
        return static_cast<std::size_t>(nx) * ny * nz;
    }
    std::size_t index(int i, int j, int k) const noexcept {
        return (static_cast<std::size_t>(k) * ny + j) * nx + i;
    }
    Coord3 coord(std::size_t v) const noexcept {
        const auto sx = static_cast<std::size_t>(nx), sy = static_cast<std::size_t>(ny);
        return {static_cast<int>(v % sx), static_cast<int>((v / sx) % sy),
                static_cast<int>(v / (sx * sy))};
    }
};

/// Occupancy of the 8 voxels incident to vertex (i,j,k), packed with the
/// window8 bit order anchored at voxel (i-1,j-1,k-1).
std::uint8_t vertex_config(const Volume3D& vol, int i, int j, int k) noexcept;

/// Same, reading from two z-slabs (`below` = voxel slab k-1, `above` = voxel
/// slab k; either may be empty to mean "outside the volume").
std::uint8_t vertex_config(std::span<const std::uint8_t> below,
                           std::span<const std::uint8_t> above, int nx, int ny, int i,
                           int j) noexcept;

/// Number of surface edges at a vertex with the given config. An edge is a
/// surface edge iff its four incident voxels are neither all object nor all
/// background; those four are exactly one half of the vertex config.
int surface_degree(std::uint8_t config) noexcept;

/// True iff the half of the config on the given side of the vertex is mixed.
/// `dir` indexes -x,+x,-y,+y,-z,+z.
bool surface_edge(std::uint8_t config, int dir) noexcept;

inline bool is_surface_config(std::uint8_t config) noexcept {
    return config != 0 && config != 0xFF;
}

namespace serial {

CornerHistogram corner_histogram(const Image2D& img);
std::vector<Pathology2D> pathologies_2d(const Image2D& img);

/// Linear vertex indices (VertexGrid order) of every surface point.
std::vector<std::uint64_t> surface_points(const Volume3D& vol);
/// Histogram over all surface points of the volume (every sheet summed).
SurfaceHistogram surface_histogram(const Volume3D& vol);
/// Linear voxel indices of object voxels with a background 26-neighbor.
std::vector<std::uint64_t> boundary_voxels(const Volume3D& vol);
/// As boundary_voxels, also counting occupancy reads into `reads`.
std::vector<std::uint64_t> boundary_voxels_counted(const Volume3D& vol, std::uint64_t& reads);
std::vector<Pathology3D> pathologies_3d(const Volume3D& vol);

} // namespace serial

namespace parallel {

CornerHistogram corner_histogram(const Image2D& img);
std::vector<Pathology2D> pathologies_2d(const Image2D& img);
std::vector<std::uint64_t> surface_points(const Volume3D& vol);
SurfaceHistogram surface_histogram(const Volume3D& vol);
std::vector<std::uint64_t> boundary_voxels(const Volume3D& vol);
std::vector<Pathology3D> pathologies_3d(const Volume3D& vol);

} // namespace parallel

namespace detail {

/// Classifies pixel (x,y) into `h` if it is a boundary pixel.
void classify_pixel(const Image2D& img, int x, int y, CornerHistogram& h) noexcept;
/// Appends pathological 2x2 windows anchored on row y (x = -1 .. w-1).
void scan_pathology_row(const Image2D& img, int y, std::vector<Pathology2D>& out);
/// Appends 3D pathologies whose window anchor lies in voxel slab z.
void scan_pathology_slab(const Volume3D& vol, int z, std::vector<Pathology3D>& out);
/// Number of 4-connected background runs in the 8-ring around (x,y).
int background_runs(const Image2D& img, int x, int y) noexcept;

} // namespace detail

} // namespace digitopo
