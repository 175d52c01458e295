#pragma once

// Hole counting for 2D binary images: speckle removal, repair of diagonal
// (non-well-composed) contacts, boundary-pixel classification and the
// corner-count hole formula  h = 1 + (cp4 - cp2) / 4.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "digitopo/grid.hpp"
#include "digitopo/types.hpp"

namespace digitopo {

struct Repair2DResult {
    Image2D image;
    std::vector<RepairAction> actions;
};

/// Fills background pixels whose 8 neighbors are all foreground and deletes
/// foreground pixels whose 8 neighbors are all background. Each pass is one
/// in-place row-major sweep; passes repeat until nothing changes.
Repair2DResult remove_speckles(const Image2D& img);

/// Every 2x2 window (border-overhanging ones included) holding a diagonal-only
/// pair, in row-major anchor order.
std::vector<Pathology2D> find_pathologies_2d(const Image2D& img);

/// Removes every pathological window. For each pathology the candidates are
/// tried in order: add the first background pixel of the window (row-major),
/// add the other, delete the first foreground pixel, delete the other. The
/// first candidate after which the surrounding 4x4 region holds no pathology
/// wins; if none does, the first foreground pixel is deleted. Throws
/// ErrorKind::NotConverged after 4*width*height actions.
Repair2DResult repair_2d(const Image2D& img);

/// Throws ErrorKind::EmptyComponent on an image without foreground.
CornerHistogram classify_boundary_2d(const Image2D& component);

struct Diagnostic2D {
    Coord2 at;
    std::string reason;
};

struct PreconditionReport2D {
    bool ok = false;
    bool no_pathologies = false;
    bool no_dangling = false;     // cp0 == 0 && cp1 == 0
    bool not_thin = false;        // thin == 0
    bool single_crossing = false; // multi_curve == 0
    bool divisible = false;       // (cp4 - cp2) % 4 == 0
    std::vector<Diagnostic2D> diagnostics;
};

/// The corner formula is only trusted on components whose boundary is a set
/// of disjoint simple closed 4-curves; this checks a sufficient local version
/// of that and lists offending pixels.
PreconditionReport2D check_preconditions_2d(const Image2D& component, const CornerHistogram& hist);

enum class HoleMethod : std::uint8_t { Formula, OracleFallback };
const char* to_string(HoleMethod m) noexcept;

struct HoleReport {
    std::uint32_t component_id = 0;
    std::uint32_t source_component = 0; // 4-label in the input image
    std::size_t area = 0;
    CornerHistogram histogram;
    long holes = 0;
    HoleMethod method = HoleMethod::Formula;
    bool precondition_ok = false;
};

/// Corner-formula hole count of one 4-connected component. When the
/// preconditions fail the flood-fill count is used (method = OracleFallback)
/// unless `allow_fallback` is false, in which case
/// ErrorKind::PreconditionFailed is thrown.
HoleReport hole_count(const Image2D& component, bool allow_fallback = true);

/// Formula value alone, 1 + (cp4 - cp2)/4. Throws InvalidSurface when the
/// difference is not divisible by 4.
long hole_formula(const CornerHistogram& hist);

struct HolesOptions {
    bool repair = true;
    bool fallback_oracle = true;
};

struct HolesResult {
    std::vector<HoleReport> reports;
    std::vector<RepairAction> actions; // in input-image coordinates
};

/// Label (4-adjacency), then per component: speckle removal, repair,
/// relabel, classify and count. One report per surviving component.
HolesResult holes_pipeline(const Image2D& img, const HolesOptions& opts = {});

/// Same, calling `visit` with each final (repaired, 4-connected, padded)
/// component next to its report.
using HolePieceVisitor = std::function<void(const Image2D& piece, const HoleReport& report)>;
HolesResult holes_pipeline(const Image2D& img, const HolesOptions& opts, const HolePieceVisitor& visit);

} // namespace digitopo
