#include "digitopo/report.hpp"

#include <cstdio>

namespace digitopo {

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t h) {
    for (const auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

std::uint64_t hash_extents(std::initializer_list<int> dims) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const int d : dims) {
        std::uint8_t le[4];
        for (int k = 0; k < 4; ++k) le[k] = static_cast<std::uint8_t>(static_cast<std::uint32_t>(d) >> (8 * k));
        h = fnv1a64(le, h);
    }
    return h;
}

std::uint64_t hash_cells(std::span<const std::uint8_t> cells, std::uint64_t h) {
    for (const auto c : cells) {
        const std::uint8_t b = c ? 1 : 0;
        h = fnv1a64({&b, 1}, h);
    }
    return h;
}

std::string hex_digest(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace

std::string grid_digest(const Image2D& img) {
    return hex_digest(hash_cells(img.cells(), hash_extents({img.width(), img.height()})));
}

std::string grid_digest(const Volume3D& vol) {
    return hex_digest(hash_cells(vol.cells(), hash_extents({vol.nx(), vol.ny(), vol.nz()})));
}

Json to_json(const CornerHistogram& h) {
    return Json{{"cp0", h.cp0}, {"cp1", h.cp1}, {"cp2", h.cp2}, {"cp3", h.cp3},
                {"cp4", h.cp4}, {"thin", h.thin}, {"multi_curve", h.multi_curve}};
}

Json to_json(const SurfaceHistogram& h) {
    return Json{{"m3", h.m3}, {"m4", h.m4}, {"m5", h.m5}, {"m6", h.m6}, {"irregular", h.irregular}};
}

Json to_json(const RepairAction& a) {
    return Json{{"x", a.x}, {"y", a.y}, {"z", a.z}, {"op", to_string(a.op)}, {"reason", to_string(a.reason)}};
}

Json to_json(const std::vector<RepairAction>& actions) {
    Json arr = Json::array();
    for (const auto& a : actions) arr.push_back(to_json(a));
    return arr;
}

Json to_json(const HoleReport& r) {
    return Json{{"component_id", r.component_id},
                {"source_component", r.source_component},
                {"area", r.area},
                {"histogram", to_json(r.histogram)},
                {"holes", r.holes},
                {"method", to_string(r.method)},
                {"precondition_ok", r.precondition_ok}};
}

Json to_json(const TopoReport3D& r) {
    Json surfaces = Json::array();
    for (const auto& s : r.boundary_surfaces)
        surfaces.push_back(Json{{"min_vertex", s.min_vertex},
                                {"points", s.points},
                                {"histogram", to_json(s.histogram)},
                                {"genus", s.genus},
                                {"chi", s.chi},
                                {"method", to_string(s.method)}});
    return Json{{"component_id", r.component_id},
                {"source_component", r.source_component},
                {"voxel_count", r.voxel_count},
                {"betti", r.betti},
                {"boundary_surfaces", surfaces}};
}

Json report_header(const std::string& command, const Image2D& img) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"input",
                 Json{{"kind", "image2d"},
                      {"extents", Json::array({img.width(), img.height()})},
                      {"foreground", img.count()},
                      {"digest", grid_digest(img)}}}};
}

Json report_header(const std::string& command, const Volume3D& vol) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"input",
                 Json{{"kind", "volume3d"},
                      {"extents", Json::array({vol.nx(), vol.ny(), vol.nz()})},
                      {"foreground", vol.count()},
                      {"digest", grid_digest(vol)}}}};
}

Json holes_report(const std::string& command, const Image2D& img, const HolesOptions& opts,
                  const HolesResult& result) {
    Json j = report_header(command, img);
    j["options"] = Json{{"repair", opts.repair}, {"fallback_oracle", opts.fallback_oracle}};
    Json comps = Json::array();
    long total = 0;
    for (const auto& r : result.reports) {
        comps.push_back(to_json(r));
        total += r.holes;
    }
    j["component_count"] = result.reports.size();
    j["total_holes"] = total;
    j["components"] = comps;
    j["repair_actions"] = to_json(result.actions);
    return j;
}

Json volume_report(const std::string& command, const Volume3D& vol, const VolumeOptions& opts,
                   const VolumeResult& result) {
    Json j = report_header(command, vol);
    j["options"] = Json{{"repair", opts.repair},
                        {"fallback_oracle", opts.fallback_oracle},
                        {"streaming", opts.streaming}};
    Json comps = Json::array();
    std::array<long, 4> betti{};
    for (const auto& r : result.reports) {
        comps.push_back(to_json(r));
        for (int k = 0; k < 4; ++k) betti[k] += r.betti[k];
    }
    j["component_count"] = result.reports.size();
    j["betti"] = betti;
    j["components"] = comps;
    j["repair_actions"] = to_json(result.actions);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace digitopo
