#pragma once

// Versioned JSON reports. Key order is fixed and every number is an
// integer, so identical input and options give byte-identical output.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "digitopo/grid.hpp"
#include "digitopo/topo2d.hpp"
#include "digitopo/topo3d.hpp"

namespace digitopo {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t h = 0xcbf29ce484222325ull);

/// "fnv1a64:<16 hex digits>" over the extents and the 0/1 cells, so the same
/// grid read from P1 or P4 has the same digest.
std::string grid_digest(const Image2D& img);
std::string grid_digest(const Volume3D& vol);

Json to_json(const CornerHistogram& h);
Json to_json(const SurfaceHistogram& h);
Json to_json(const RepairAction& a);
Json to_json(const std::vector<RepairAction>& actions);
Json to_json(const HoleReport& r);
Json to_json(const TopoReport3D& r);

/// Common envelope: schema_version, command, input {kind, extents, digest},
/// options. Callers append their own sections.
Json report_header(const std::string& command, const Image2D& img);
Json report_header(const std::string& command, const Volume3D& vol);

Json holes_report(const std::string& command, const Image2D& img, const HolesOptions& opts,
                  const HolesResult& result);
Json volume_report(const std::string& command, const Volume3D& vol, const VolumeOptions& opts,
                   const VolumeResult& result);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

} // namespace digitopo
