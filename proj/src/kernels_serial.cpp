#include "digitopo/kernels.hpp"

#include <array>
#include <bit>
#include <span>

namespace digitopo {

namespace {

// Bit masks of the six halves of a vertex config (-x,+x,-y,+y,-z,+z).
constexpr std::array<std::uint8_t, 6> kHalf = {0x55, 0xAA, 0x33, 0xCC, 0x0F, 0xF0};

constexpr std::array<std::uint8_t, 256> make_degree_table() {
    std::array<std::uint8_t, 256> t{};
    for (int c = 0; c < 256; ++c) {
        int d = 0;
        for (auto half : kHalf) {
            const int bits = c & half;
            if (bits != 0 && bits != half) ++d;
        }
        t[c] = static_cast<std::uint8_t>(d);
    }
    return t;
}

constexpr auto kDegree = make_degree_table();

} // namespace

int surface_degree(std::uint8_t config) noexcept { return kDegree[config]; }

bool surface_edge(std::uint8_t config, int dir) noexcept {
    const int bits = config & kHalf[dir];
    return bits != 0 && bits != kHalf[dir];
}

std::uint8_t vertex_config(const Volume3D& vol, int i, int j, int k) noexcept {
    return window8_mask(vol, i - 1, j - 1, k - 1);
}

std::uint8_t vertex_config(std::span<const std::uint8_t> below,
                           std::span<const std::uint8_t> above, int nx, int ny, int i,
                           int j) noexcept {
    std::uint8_t m = 0;
    const bool x0 = i - 1 >= 0, x1 = i < nx;
    const bool y0 = j - 1 >= 0, y1 = j < ny;
    auto read = [&](std::span<const std::uint8_t> s, int x, int y) -> std::uint8_t {
        return s[static_cast<std::size_t>(y) * nx + x];
    };
    if (!below.empty()) {
        if (y0 && x0 && read(below, i - 1, j - 1)) m |= 0x01;
        if (y0 && x1 && read(below, i, j - 1)) m |= 0x02;
        if (y1 && x0 && read(below, i - 1, j)) m |= 0x04;
        if (y1 && x1 && read(below, i, j)) m |= 0x08;
    }
    if (!above.empty()) {
        if (y0 && x0 && read(above, i - 1, j - 1)) m |= 0x10;
        if (y0 && x1 && read(above, i, j - 1)) m |= 0x20;
        if (y1 && x0 && read(above, i - 1, j)) m |= 0x40;
        if (y1 && x1 && read(above, i, j)) m |= 0x80;
    }
    return m;
}

namespace detail {

int background_runs(const Image2D& img, int x, int y) noexcept {
    // Ring in cyclic order; consecutive ring cells are 4-adjacent.
    static constexpr int ring[8][2] = {{0, -1}, {1, -1}, {1, 0},  {1, 1},
                                       {0, 1},  {-1, 1}, {-1, 0}, {-1, -1}};
    bool bg[8];
    for (int k = 0; k < 8; ++k) bg[k] = !img.at(x + ring[k][0], y + ring[k][1]);
    int runs = 0;
    for (int k = 0; k < 8; ++k)
        if (bg[k] && !bg[(k + 7) % 8]) ++runs;
    if (runs == 0 && bg[0]) runs = 1; // whole ring is background
    return runs;
}

void classify_pixel(const Image2D& img, int x, int y, CornerHistogram& h) noexcept {
    if (!img.at(x, y)) return;
    bool boundary = false;
    for (int dy = -1; dy <= 1 && !boundary; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            if ((dx || dy) && !img.at(x + dx, y + dy)) {
                boundary = true;
                break;
            }
    if (!boundary) return;

    const bool l = img.at(x - 1, y), r = img.at(x + 1, y);
    const bool u = img.at(x, y - 1), d = img.at(x, y + 1);
    switch (int(l) + int(r) + int(u) + int(d)) {
    case 0: ++h.cp0; break;
    case 1: ++h.cp1; break;
    case 2:
        ++h.cp2;
        if ((l && r) || (u && d)) ++h.thin;
        break;
    case 3: ++h.cp3; break;
    default: ++h.cp4; break;
    }
    if (background_runs(img, x, y) > 1) ++h.multi_curve;
}

void scan_pathology_row(const Image2D& img, int y, std::vector<Pathology2D>& out) {
    for (int x = -1; x < img.width(); ++x) {
        const bool a = img.at(x, y), b = img.at(x + 1, y);
        const bool c = img.at(x, y + 1), d = img.at(x + 1, y + 1);
        if (a && d && !b && !c) out.push_back({x, y, PathologyKind2D::DiagMain});
        else if (b && c && !a && !d) out.push_back({x, y, PathologyKind2D::DiagAnti});
    }
}

void scan_pathology_slab(const Volume3D& vol, int z, std::vector<Pathology3D>& out) {
    auto at = [&](int x, int y, int zz) { return vol.at(x, y, zz); };
    for (int y = 0; y < vol.ny(); ++y) {
        for (int x = 0; x < vol.nx(); ++x) {
            const Coord3 anchor{x, y, z};
            // Vertex window (2x2x2).
            if (x + 1 < vol.nx() && y + 1 < vol.ny() && z + 1 < vol.nz()) {
                const std::uint8_t m = window8_mask(vol, x, y, z);
                const int ones = std::popcount(static_cast<unsigned>(m));
                auto corner = [&](int i) {
                    return Coord3{x + (i & 1), y + ((i >> 1) & 1), z + ((i >> 2) & 1)};
                };
                if (ones == 2 || ones == 6) {
                    const std::uint8_t probe = ones == 2 ? m : static_cast<std::uint8_t>(~m);
                    for (int i = 0; i < 4; ++i) {
                        if (probe == static_cast<std::uint8_t>((1u << i) | (1u << (7 - i)))) {
                            out.push_back({anchor,
                                           ones == 2 ? PathologyKind3D::VertexPair
                                                     : PathologyKind3D::ComplementVertexPair,
                                           -1, corner(i), corner(7 - i)});
                            break;
                        }
                    }
                }
            }
            // Edge windows: 2x2 squares spanning the two axes other than `axis`.
            for (int axis = 0; axis < 3; ++axis) {
                int du[3] = {0, 0, 0}, dv[3] = {0, 0, 0};
                const int ua = axis == 0 ? 1 : 0;
                const int va = axis == 2 ? 1 : 2;
                du[ua] = 1;
                dv[va] = 1;
                const Coord3 s0 = anchor;
                const Coord3 s1{x + du[0], y + du[1], z + du[2]};
                const Coord3 s2{x + dv[0], y + dv[1], z + dv[2]};
                const Coord3 s3{x + du[0] + dv[0], y + du[1] + dv[1], z + du[2] + dv[2]};
                if (!vol.in_bounds(s3.x, s3.y, s3.z)) continue;
                const bool b0 = at(s0.x, s0.y, s0.z), b1 = at(s1.x, s1.y, s1.z);
                const bool b2 = at(s2.x, s2.y, s2.z), b3 = at(s3.x, s3.y, s3.z);
                if (b0 && b3 && !b1 && !b2)
                    out.push_back({anchor, PathologyKind3D::EdgePair, axis, s0, s3});
                else if (b1 && b2 && !b0 && !b3)
                    out.push_back({anchor, PathologyKind3D::EdgePair, axis, s1, s2});
            }
        }
    }
}

} // namespace detail

namespace serial {

CornerHistogram corner_histogram(const Image2D& img) {
    CornerHistogram h;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) detail::classify_pixel(img, x, y, h);
    return h;
}

std::vector<Pathology2D> pathologies_2d(const Image2D& img) {
    std::vector<Pathology2D> out;
    for (int y = -1; y < img.height(); ++y) detail::scan_pathology_row(img, y, out);
    return out;
}

std::vector<std::uint64_t> surface_points(const Volume3D& vol) {
    const auto g = VertexGrid::of(vol);
    std::vector<std::uint64_t> out;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                if (is_surface_config(vertex_config(vol, i, j, k))) out.push_back(g.index(i, j, k));
    return out;
}

SurfaceHistogram surface_histogram(const Volume3D& vol) {
    const auto g = VertexGrid::of(vol);
    SurfaceHistogram h;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const auto c = vertex_config(vol, i, j, k);
                if (is_surface_config(c)) h.add_degree(surface_degree(c));
            }
    return h;
}

std::vector<std::uint64_t> boundary_voxels_counted(const Volume3D& vol, std::uint64_t& reads) {
    std::vector<std::uint64_t> out;
    for (int z = 0; z < vol.nz(); ++z)
        for (int y = 0; y < vol.ny(); ++y)
            for (int x = 0; x < vol.nx(); ++x) {
                ++reads;
                if (!vol.at(x, y, z)) continue;
                bool boundary = false;
                for (int dz = -1; dz <= 1 && !boundary; ++dz)
                    for (int dy = -1; dy <= 1 && !boundary; ++dy)
                        for (int dx = -1; dx <= 1; ++dx) {
                            if (!dx && !dy && !dz) continue;
                            ++reads;
                            if (!vol.at(x + dx, y + dy, z + dz)) {
                                boundary = true;
                                break;
                            }
                        }
                if (boundary) out.push_back(vol.index(x, y, z));
            }
    return out;
}

std::vector<std::uint64_t> boundary_voxels(const Volume3D& vol) {
    std::uint64_t reads = 0;
    return boundary_voxels_counted(vol, reads);
}

std::vector<Pathology3D> pathologies_3d(const Volume3D& vol) {
    std::vector<Pathology3D> out;
    for (int z = 0; z < vol.nz(); ++z) detail::scan_pathology_slab(vol, z, out);
    return out;
}

} // namespace serial

const char* to_string(PathologyKind2D k) noexcept {
    return k == PathologyKind2D::DiagMain ? "diag_main" : "diag_anti";
}

const char* to_string(PathologyKind3D k) noexcept {
    switch (k) {
    case PathologyKind3D::VertexPair: return "vertex_pair";
    case PathologyKind3D::EdgePair: return "edge_pair";
    case PathologyKind3D::ComplementVertexPair: return "complement_vertex_pair";
    }
    return "?";
}

const char* to_string(RepairOp op) noexcept { return op == RepairOp::Add ? "add" : "delete"; }

const char* to_string(RepairReason r) noexcept {
    switch (r) {
    case RepairReason::Speckle: return "speckle";
    case RepairReason::PathologyFix: return "pathology_fix";
    case RepairReason::VertexContact: return "vertex_contact";
    case RepairReason::EdgeContact: return "edge_contact";
    case RepairReason::ComplementFill: return "complement_fill";
    }
    return "?";
}

} // namespace digitopo
