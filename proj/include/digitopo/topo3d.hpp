#pragma once

// Genus and homology ranks of 3D binary volumes.
//
// Pipeline: 26-connected components -> repair of vertex/edge-only contacts ->
// 6-connected components -> boundary surface in point space (the dual grid of
// voxel corners) -> per-surface neighbor histogram -> genus
//     g = 1 + (m5 + 2*m6 - m3) / 8
// -> Betti ranks (1, sum g, #surfaces - 1, 0).

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "digitopo/grid.hpp"
#include "digitopo/kernels.hpp"
#include "digitopo/types.hpp"

namespace digitopo {

std::vector<Pathology3D> find_pathologies_3d(const Volume3D& vol);

struct Repair3DResult {
    Volume3D volume;
    std::vector<RepairAction> actions;
};

/// One scan handles, in order: complement pairs (fill the empty voxel with
/// more object face-neighbors, first in scan order on ties), then vertex and
/// edge pairs (delete the voxel with fewer object face-neighbors; on ties
/// prefer the one whose deletion is licensed by the boundary-neighbor rule,
/// then the later one in scan order). Voxels added by the repair are never
/// deleted again; a pair whose two voxels are both such additions is bridged
/// by adding face neighbors. Scans repeat until clean. Throws
/// ErrorKind::NotConverged after 4*nx*ny*nz actions.
Repair3DResult repair_3d(const Volume3D& vol);

/// Object voxel v with a background voxel among its 26 neighbors, which
/// also shares a face with an object voxel u that itself touches background
/// through an edge or vertex. Deleting such a v leaves u on the boundary.
bool deletion_keeps_boundary(const Volume3D& vol, const Coord3& v);

/// Object voxels with at least one background 26-neighbor, scan order.
std::vector<Coord3> boundary_voxels(const Volume3D& vol);

/// Grid vertices incident to at least one object and one background voxel.
/// Holds a non-owning pointer to its volume, which must outlive the set.
struct SurfacePointSet {
    VertexGrid grid;
    std::vector<std::uint64_t> points; // sorted linear vertex indices
    const Volume3D* owner = nullptr;

    std::size_t size() const noexcept { return points.size(); }
    bool contains(std::uint64_t v) const;
};

SurfacePointSet to_point_space(const Volume3D& vol);

/// Neighbors q of p along grid axes with q in s and pq a surface edge.
/// Throws InvalidArgument when p is not in s.
int surface_neighbors(const Coord3& p, const SurfacePointSet& s);

/// Connected components under the surface-edge relation, ordered by minimal
/// vertex.
std::vector<SurfacePointSet> split_surface_components(const SurfacePointSet& s);

SurfaceHistogram classify_surface(const SurfacePointSet& s);

/// Throws ErrorKind::InvalidSurface when the histogram has irregular points
/// or m5 + 2*m6 - m3 is not a multiple of 8.
long genus(const SurfaceHistogram& h);

enum class GenusMethod : std::uint8_t { Formula, OracleFallback };
const char* to_string(GenusMethod m) noexcept;

struct SurfaceReport {
    std::size_t points = 0;
    SurfaceHistogram histogram;
    long genus = 0;
    long chi = 2;
    std::uint64_t min_vertex = 0;
    GenusMethod method = GenusMethod::Formula;
};

struct TopoReport3D {
    std::uint32_t component_id = 0;
    std::uint32_t source_component = 0; // 26-label in the input volume
    std::size_t voxel_count = 0;
    std::vector<SurfaceReport> boundary_surfaces;
    std::array<long, 4> betti{};
    std::vector<RepairAction> repair_actions; // of the source component
};

/// Report for one repaired, 6-connected component. With `allow_fallback`
/// an invalid surface histogram switches every surface to the Euler oracle;
/// otherwise ErrorKind::InvalidSurface propagates.
TopoReport3D homology(const Volume3D& component, bool allow_fallback = true);

/// Same result computed by streaming the volume through the slab counter.
TopoReport3D homology_streaming(const Volume3D& component, bool allow_fallback = true);

struct VolumeOptions {
    bool repair = true;
    bool fallback_oracle = true;
    bool streaming = false;
};

struct VolumeResult {
    std::vector<TopoReport3D> reports;
    std::vector<RepairAction> actions; // input-volume coordinates
};

VolumeResult analyze_volume(const Volume3D& vol, const VolumeOptions& opts = {});

/// Same, calling `visit` with each final 6-connected piece and its report.
using VolumePieceVisitor = std::function<void(const Volume3D& piece, const TopoReport3D& report)>;
VolumeResult analyze_volume(const Volume3D& vol, const VolumeOptions& opts, const VolumePieceVisitor& visit);

} // namespace digitopo
