#include "digitopo/topo3d.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "digitopo/error.hpp"
#include "digitopo/oracle.hpp"
#include "digitopo/streaming.hpp"

namespace digitopo {

const char* to_string(GenusMethod m) noexcept {
    return m == GenusMethod::Formula ? "formula" : "oracle_fallback";
}

std::vector<Pathology3D> find_pathologies_3d(const Volume3D& vol) {
    return parallel::pathologies_3d(vol);
}

// ---- repair ----------------------------------------------------------------

namespace {

constexpr int kFace[6][3] = {{-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1}};

int object_face_neighbors(const Volume3D& vol, const Coord3& c) {
    int n = 0;
    for (const auto& d : kFace) n += vol.at(c.x + d[0], c.y + d[1], c.z + d[2]);
    return n;
}

std::size_t scan_index(const Volume3D& vol, const Coord3& c) { return vol.index(c.x, c.y, c.z); }

bool still_pathological(const Volume3D& vol, const Pathology3D& p) {
    switch (p.kind) {
    case PathologyKind3D::VertexPair:
    case PathologyKind3D::ComplementVertexPair: {
        const std::uint8_t m = window8_mask(vol, p.anchor.x, p.anchor.y, p.anchor.z);
        auto bit = [&](const Coord3& c) {
            return 1u << ((c.x - p.anchor.x) | ((c.y - p.anchor.y) << 1) | ((c.z - p.anchor.z) << 2));
        };
        const auto pair = static_cast<std::uint8_t>(bit(p.first) | bit(p.second));
        return p.kind == PathologyKind3D::VertexPair ? m == pair
                                                     : m == static_cast<std::uint8_t>(~pair);
    }
    case PathologyKind3D::EdgePair: {
        // The other diagonal of the square: step from `first` along one of
        // the two differing axes.
        Coord3 others[2];
        int k = 0;
        const int diff[3] = {p.second.x - p.first.x, p.second.y - p.first.y, p.second.z - p.first.z};
        for (int a = 0; a < 3; ++a) {
            if (diff[a] == 0) continue;
            Coord3 o = p.first;
            (a == 0 ? o.x : a == 1 ? o.y : o.z) += diff[a];
            others[k++] = o;
        }
        return vol.at(p.first) && vol.at(p.second) && !vol.at(others[0]) && !vol.at(others[1]);
    }
    }
    return false;
}

} // namespace

bool deletion_keeps_boundary(const Volume3D& vol, const Coord3& v) {
    if (!vol.at(v)) return false;
    bool boundary = false;
    for (int dz = -1; dz <= 1 && !boundary; ++dz)
        for (int dy = -1; dy <= 1 && !boundary; ++dy)
            for (int dx = -1; dx <= 1 && !boundary; ++dx)
                if ((dx || dy || dz) && !vol.at(v.x + dx, v.y + dy, v.z + dz)) boundary = true;
    if (!boundary) return false;
    for (const auto& d : kFace) {
        const Coord3 u{v.x + d[0], v.y + d[1], v.z + d[2]};
        if (!vol.at(u)) continue;
        // u must touch background through a 0- or 1-cell (non-face neighbor).
        for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (std::abs(dx) + std::abs(dy) + std::abs(dz) < 2) continue;
                    const Coord3 w{u.x + dx, u.y + dy, u.z + dz};
                    if (w == v) continue;
                    if (!vol.at(w)) return true;
                }
    }
    return false;
}

Repair3DResult repair_3d(const Volume3D& input) {
    Repair3DResult out{input, {}};
    Volume3D& vol = out.volume;
    const std::size_t cap = 4 * vol.size();
    // Voxels added by the repair are pinned and never deleted again. This is
    // what breaks fill/delete oscillations: every voxel changes at most twice.
    std::vector<std::uint8_t> pinned(vol.size(), 0);
    auto record = [&](const Coord3& c, RepairOp op, RepairReason why) {
        vol.set(c.x, c.y, c.z, op == RepairOp::Add);
        if (op == RepairOp::Add) pinned[scan_index(vol, c)] = 1;
        out.actions.push_back({c.x, c.y, c.z, op, why});
        if (out.actions.size() > cap) throw Error(ErrorKind::NotConverged, "repair did not converge");
    };
    auto is_pinned = [&](const Coord3& c) { return pinned[scan_index(vol, c)] != 0; };
    auto more_faces = [&](const Coord3& a, const Coord3& b) {
        return object_face_neighbors(vol, b) > object_face_neighbors(vol, a) ? b : a;
    };

    for (;;) {
        const auto found = find_pathologies_3d(vol);
        if (found.empty()) break;

        for (const auto& p : found) {
            if (p.kind != PathologyKind3D::ComplementVertexPair || !still_pathological(vol, p)) continue;
            record(more_faces(p.first, p.second), RepairOp::Add, RepairReason::ComplementFill);
        }

        for (const auto& p : found) {
            if (p.kind == PathologyKind3D::ComplementVertexPair || !still_pathological(vol, p)) continue;
            const RepairReason why =
                p.kind == PathologyKind3D::VertexPair ? RepairReason::VertexContact : RepairReason::EdgeContact;
            const int a = object_face_neighbors(vol, p.first);
            const int b = object_face_neighbors(vol, p.second);
            Coord3 victim;
            if (a != b) {
                victim = a < b ? p.first : p.second;
            } else {
                const bool ca = deletion_keeps_boundary(vol, p.first);
                const bool cb = deletion_keeps_boundary(vol, p.second);
                const bool first_later = scan_index(vol, p.first) > scan_index(vol, p.second);
                if (ca != cb) victim = ca ? p.first : p.second;
                else victim = first_later ? p.first : p.second;
            }
            if (is_pinned(victim)) victim = victim == p.first ? p.second : p.first;
            if (!is_pinned(victim)) {
                record(victim, RepairOp::Delete, why);
                continue;
            }
            // Both ends were added by the repair: bridge them with face
            // neighbors instead.
            const int d[3] = {p.second.x - p.first.x, p.second.y - p.first.y, p.second.z - p.first.z};
            if (p.kind == PathologyKind3D::EdgePair) {
                Coord3 others[2];
                int k = 0;
                for (int axis = 0; axis < 3; ++axis) {
                    if (d[axis] == 0) continue;
                    Coord3 o = p.first;
                    (axis == 0 ? o.x : axis == 1 ? o.y : o.z) += d[axis];
                    others[k++] = o;
                }
                record(more_faces(others[0], others[1]), RepairOp::Add, why);
            } else {
                const Coord3 step1{p.first.x + d[0], p.first.y, p.first.z};
                const Coord3 step2{p.first.x + d[0], p.first.y + d[1], p.first.z};
                record(step1, RepairOp::Add, why);
                record(step2, RepairOp::Add, why);
            }
        }
    }
    return out;
}

// ---- boundary / point space ------------------------------------------------

std::vector<Coord3> boundary_voxels(const Volume3D& vol) {
    std::vector<Coord3> out;
    for (auto i : parallel::boundary_voxels(vol)) out.push_back(vol.coord(i));
    return out;
}

bool SurfacePointSet::contains(std::uint64_t v) const {
    return std::binary_search(points.begin(), points.end(), v);
}

SurfacePointSet to_point_space(const Volume3D& vol) {
    return {VertexGrid::of(vol), parallel::surface_points(vol), &vol};
}

namespace {

std::uint8_t config_at(const SurfacePointSet& s, std::uint64_t v) {
    const Coord3 c = s.grid.coord(v);
    return vertex_config(*s.owner, c.x, c.y, c.z);
}

} // namespace

int surface_neighbors(const Coord3& p, const SurfacePointSet& s) {
    if (p.x < 0 || p.y < 0 || p.z < 0 || p.x >= s.grid.nx || p.y >= s.grid.ny || p.z >= s.grid.nz ||
        !s.contains(s.grid.index(p.x, p.y, p.z)))
        throw Error(ErrorKind::InvalidArgument, "point is not a surface point");
    return surface_degree(vertex_config(*s.owner, p.x, p.y, p.z));
}

std::vector<SurfacePointSet> split_surface_components(const SurfacePointSet& s) {
    constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> comp(s.grid.size(), kUnseen);
    std::vector<SurfacePointSet> out;
    std::vector<std::uint64_t> queue;
    const std::int64_t step[6] = {-1, 1, -static_cast<std::int64_t>(s.grid.nx), s.grid.nx,
                                  -static_cast<std::int64_t>(s.grid.nx) * s.grid.ny,
                                  static_cast<std::int64_t>(s.grid.nx) * s.grid.ny};

    for (const auto seed : s.points) {
        if (comp[seed] != kUnseen) continue;
        const auto id = static_cast<std::uint32_t>(out.size());
        out.push_back({s.grid, {}, s.owner});
        comp[seed] = id;
        queue.assign(1, seed);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto v = queue[head];
            const auto cfg = config_at(s, v);
            for (int dir = 0; dir < 6; ++dir) {
                if (!surface_edge(cfg, dir)) continue;
                const auto w = static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + step[dir]);
                if (comp[w] != kUnseen) continue;
                comp[w] = id;
                queue.push_back(w);
            }
        }
        std::sort(queue.begin(), queue.end());
        out.back().points = queue;
    }
    return out;
}

SurfaceHistogram classify_surface(const SurfacePointSet& s) {
    SurfaceHistogram h;
    for (const auto v : s.points) h.add_degree(surface_degree(config_at(s, v)));
    return h;
}

long genus(const SurfaceHistogram& h) {
    if (h.irregular != 0) throw Error(ErrorKind::InvalidSurface, "not a valid digital surface");
    const long num = static_cast<long>(h.m5) + 2 * static_cast<long>(h.m6) - static_cast<long>(h.m3);
    if (num % 8 != 0) throw Error(ErrorKind::InvalidSurface, "not a valid digital surface");
    const long g = 1 + num / 8;
    if (g < 0) throw Error(ErrorKind::InvalidSurface, "not a valid digital surface");
    return g;
}

// ---- homology --------------------------------------------------------------

namespace {

void fill_betti(TopoReport3D& rep) {
    long b1 = 0;
    for (const auto& s : rep.boundary_surfaces) b1 += s.genus;
    rep.betti = {1, b1, static_cast<long>(rep.boundary_surfaces.size()) - 1, 0};
}

void apply_formula_or_fallback(TopoReport3D& rep, const Volume3D& component, bool allow_fallback) {
    try {
        for (auto& s : rep.boundary_surfaces) {
            s.genus = genus(s.histogram);
            s.chi = 2 - 2 * s.genus;
            s.method = GenusMethod::Formula;
        }
    } catch (const Error&) {
        if (!allow_fallback) throw;
        std::vector<SurfaceReport> surfaces;
        for (const auto& e : euler_surface_3d(component)) {
            SurfaceReport s;
            s.points = static_cast<std::size_t>(e.v);
            s.chi = static_cast<long>(e.chi);
            s.genus = static_cast<long>(e.genus());
            s.min_vertex = e.min_vertex;
            s.method = GenusMethod::OracleFallback;
            surfaces.push_back(s);
        }
        rep.boundary_surfaces = std::move(surfaces);
    }
    fill_betti(rep);
}

} // namespace

TopoReport3D homology(const Volume3D& component, bool allow_fallback) {
    TopoReport3D rep;
    rep.voxel_count = component.count();
    if (rep.voxel_count == 0) throw Error(ErrorKind::EmptyComponent, "empty component");
    for (const auto& part : split_surface_components(to_point_space(component))) {
        SurfaceReport s;
        s.points = part.size();
        s.histogram = classify_surface(part);
        s.min_vertex = part.points.front();
        rep.boundary_surfaces.push_back(s);
    }
    apply_formula_or_fallback(rep, component, allow_fallback);
    return rep;
}

TopoReport3D homology_streaming(const Volume3D& component, bool allow_fallback) {
    TopoReport3D rep;
    rep.voxel_count = component.count();
    if (rep.voxel_count == 0) throw Error(ErrorKind::EmptyComponent, "empty component");
    for (const auto& part : stream_surfaces(component)) {
        SurfaceReport s;
        s.points = part.points;
        s.histogram = part.histogram;
        s.min_vertex = part.min_vertex;
        rep.boundary_surfaces.push_back(s);
    }
    apply_formula_or_fallback(rep, component, allow_fallback);
    return rep;
}

VolumeResult analyze_volume(const Volume3D& vol, const VolumeOptions& opts) {
    return analyze_volume(vol, opts, nullptr);
}

VolumeResult analyze_volume(const Volume3D& vol, const VolumeOptions& opts, const VolumePieceVisitor& visit) {
    VolumeResult out;
    const Labeling lab = label_components_3d(vol, Adjacency::Indirect3D);
    auto extracted = extract_all_components_3d(lab);
    for (std::uint32_t id = 1; id <= lab.count; ++id) {
        auto& [comp, origin] = extracted[id - 1];
        std::vector<RepairAction> actions;
        if (opts.repair) {
            auto repaired = repair_3d(comp);
            comp = std::move(repaired.volume);
            for (auto a : repaired.actions) {
                a.x += origin.x;
                a.y += origin.y;
                a.z += origin.z;
                actions.push_back(a);
            }
            out.actions.insert(out.actions.end(), actions.begin(), actions.end());
        }
        const Labeling parts = label_components_3d(comp, Adjacency::Direct3D);
        const auto pieces = extract_all_components_3d(parts);
        for (std::uint32_t part = 1; part <= parts.count; ++part) {
            const Volume3D& piece = pieces[part - 1].volume;
            TopoReport3D rep = opts.streaming ? homology_streaming(piece, opts.fallback_oracle)
                                              : homology(piece, opts.fallback_oracle);
            rep.component_id = static_cast<std::uint32_t>(out.reports.size() + 1);
            rep.source_component = id;
            rep.repair_actions = actions;
            if (visit) visit(piece, rep);
            out.reports.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace digitopo
