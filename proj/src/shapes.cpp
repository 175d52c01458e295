#include "digitopo/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "digitopo/error.hpp"
#include "digitopo/kernels.hpp"

namespace digitopo {

Image2D gen_block_2d(int w, int h) {
    if (w <= 0 || h <= 0) throw Error(ErrorKind::InvalidArgument, "block extents must be positive");
    Image2D img(w + 2, h + 2);
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x) img.set(x, y, true);
    return img;
}

Volume3D gen_block_3d(int nx, int ny, int nz) {
    if (nx <= 0 || ny <= 0 || nz <= 0)
        throw Error(ErrorKind::InvalidArgument, "block extents must be positive");
    Volume3D vol(nx + 2, ny + 2, nz + 2);
    for (int z = 1; z <= nz; ++z)
        for (int y = 1; y <= ny; ++y)
            for (int x = 1; x <= nx; ++x) vol.set(x, y, z, true);
    return vol;
}

Volume3D gen_frame(const FrameParams& p) {
    if (p.holes < 0 || p.ring_width < 1 || p.thickness < 1 || p.hole_size < 1)
        throw Error(ErrorKind::InvalidArgument, "invalid frame parameters");
    const int k = std::max(p.holes, 1);
    const int w = k * p.hole_size + (k + 1) * p.ring_width;
    const int h = p.hole_size + 2 * p.ring_width;
    Volume3D vol = gen_block_3d(w, h, p.thickness);
    for (int t = 0; t < p.holes; ++t) {
        const int x0 = 1 + p.ring_width + t * (p.hole_size + p.ring_width);
        for (int z = 1; z <= p.thickness; ++z)
            for (int y = 1 + p.ring_width; y < 1 + p.ring_width + p.hole_size; ++y)
                for (int x = x0; x < x0 + p.hole_size; ++x) vol.set(x, y, z, false);
    }
    return vol;
}

Volume3D gen_random_frame(int holes, std::uint64_t seed) {
    if (holes < 0) throw Error(ErrorKind::InvalidArgument, "negative hole count");
    SeededStream rng(seed);
    constexpr int kCell = 3;
    const int ring = rng.between(1, 2);
    const int thickness = rng.between(1, 3);
    const int cols = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(holes)))));
    const int rows = std::max(1, (holes + cols - 1) / cols);
    const int w = ring + cols * (kCell + ring);
    const int h = ring + rows * (kCell + ring);
    Volume3D vol = gen_block_3d(w, h, thickness);
    for (int t = 0; t < holes; ++t) {
        const int sx = rng.between(1, kCell), sy = rng.between(1, kCell);
        const int ox = rng.between(0, kCell - sx), oy = rng.between(0, kCell - sy);
        const int x0 = 1 + ring + (t % cols) * (kCell + ring) + ox;
        const int y0 = 1 + ring + (t / cols) * (kCell + ring) + oy;
        for (int z = 1; z <= thickness; ++z)
            for (int y = y0; y < y0 + sy; ++y)
                for (int x = x0; x < x0 + sx; ++x) vol.set(x, y, z, false);
    }
    return vol;
}

Volume3D gen_shell(int outer, int cavity) {
    if (outer <= 0 || cavity < 0) throw Error(ErrorKind::InvalidArgument, "invalid shell extents");
    Volume3D vol = gen_block_3d(outer, outer, outer);
    if (cavity == 0) return vol;
    const int off = (outer - cavity) / 2;
    if (off < 1 || off + cavity > outer - 1)
        throw Error(ErrorKind::InvalidArgument, "cavity touches the outer boundary");
    for (int z = off; z < off + cavity; ++z)
        for (int y = off; y < off + cavity; ++y)
            for (int x = off; x < off + cavity; ++x) vol.set(x + 1, y + 1, z + 1, false);
    return vol;
}

// ---- 2D accretion ----------------------------------------------------------

namespace {

// Adding `c` to the super-cell image keeps it free of diagonal-only contacts.
bool keeps_well_composed_2d(const Image2D& grid, int cx, int cy) {
    for (int ay = cy - 1; ay <= cy; ++ay)
        for (int ax = cx - 1; ax <= cx; ++ax) {
            bool w[4];
            const int xs[4] = {ax, ax + 1, ax, ax + 1}, ys[4] = {ay, ay, ay + 1, ay + 1};
            for (int k = 0; k < 4; ++k) w[k] = (xs[k] == cx && ys[k] == cy) || grid.at(xs[k], ys[k]);
            if ((w[0] && w[3] && !w[1] && !w[2]) || (w[1] && w[2] && !w[0] && !w[3])) return false;
        }
    return true;
}

Image2D render_2d(const Image2D& grid, int scale) {
    int x0 = grid.width(), y0 = grid.height(), x1 = -1, y1 = -1;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x)
            if (grid.at(x, y)) {
                x0 = std::min(x0, x); y0 = std::min(y0, y);
                x1 = std::max(x1, x); y1 = std::max(y1, y);
            }
    if (x1 < 0) return Image2D(2, 2);
    Image2D img((x1 - x0 + 1) * scale + 2, (y1 - y0 + 1) * scale + 2);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            if (grid.at(x, y))
                for (int dy = 0; dy < scale; ++dy)
                    for (int dx = 0; dx < scale; ++dx)
                        img.set(1 + (x - x0) * scale + dx, 1 + (y - y0) * scale + dy, true);
    return img;
}

constexpr int kDir4[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

} // namespace

Image2D gen_fat_polyomino_2d(std::uint64_t seed, int target_area, int min_width) {
    if (min_width < 2) throw Error(ErrorKind::InvalidArgument, "min_width must be at least 2");
    SeededStream rng(seed);
    const int cell_area = min_width * min_width;
    const int cells = std::max(1, (target_area + cell_area - 1) / cell_area);
    const int side = 2 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(cells)))) + 4;
    Image2D grid(side, side);
    std::vector<Coord2> frontier;
    auto grow = [&](int x, int y) {
        grid.set(x, y, true);
        for (const auto& d : kDir4) {
            const int nx = x + d[0], ny = y + d[1];
            if (grid.in_bounds(nx, ny) && !grid.at(nx, ny)) frontier.push_back({nx, ny});
        }
    };
    grow(side / 2, side / 2);
    int placed = 1;
    while (placed < cells && !frontier.empty()) {
        const std::size_t pick = rng.below(frontier.size());
        const Coord2 c = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (grid.at(c.x, c.y)) continue;
        // One background run in the ring means the addition neither closes a
        // hole nor touches the shape only diagonally.
        if (!keeps_well_composed_2d(grid, c.x, c.y) || detail::background_runs(grid, c.x, c.y) != 1)
            continue;
        grow(c.x, c.y);
        ++placed;
    }
    return render_2d(grid, min_width);
}

bool drill_hole_2d(Image2D& img, SeededStream& rng) {
    const int w = img.width(), h = img.height();
    if (w < 6 || h < 6) return false;
    const int nx = w - 5, ny = h - 5; // anchors of 6x6 blocks
    const std::uint64_t start = rng.below(static_cast<std::uint64_t>(nx) * ny);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(nx) * ny; ++k) {
        const std::uint64_t a = (start + k) % (static_cast<std::uint64_t>(nx) * ny);
        const int x0 = static_cast<int>(a % nx), y0 = static_cast<int>(a / nx);
        bool solid = true;
        for (int y = y0; y < y0 + 6 && solid; ++y)
            for (int x = x0; x < x0 + 6; ++x)
                if (!img.at(x, y)) {
                    solid = false;
                    break;
                }
        if (!solid) continue;
        for (int y = y0 + 2; y < y0 + 4; ++y)
            for (int x = x0 + 2; x < x0 + 4; ++x) img.set(x, y, false);
        return true;
    }
    return false;
}

Image2D gen_holed_polyomino_2d(std::uint64_t seed, int target_area, int holes) {
    Image2D img = gen_fat_polyomino_2d(seed, target_area);
    SeededStream rng(seed ^ 0x9E3779B97F4A7C15ull);
    for (int k = 0; k < holes; ++k)
        if (!drill_hole_2d(img, rng)) break;
    return img;
}

Image2D gen_scene_2d(std::uint64_t seed, int width, int height, int noise_permille) {
    SeededStream rng(seed);
    Image2D img(width, height);
    const int shapes = rng.between(2, 5);
    for (int s = 0; s < shapes; ++s) {
        const Image2D piece =
            gen_holed_polyomino_2d(rng.next(), rng.between(16, 400), rng.between(0, 3));
        const int ox = rng.between(-2, std::max(0, width - piece.width() + 2));
        const int oy = rng.between(-2, std::max(0, height - piece.height() + 2));
        for (int y = 0; y < piece.height(); ++y)
            for (int x = 0; x < piece.width(); ++x)
                if (piece.at(x, y) && img.in_bounds(x + ox, y + oy)) img.set(x + ox, y + oy, true);
    }
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (rng.chance(static_cast<std::uint64_t>(noise_permille), 1000)) img.set(x, y, !img.at(x, y));
    return img;
}

Image2D gen_noise_2d(std::uint64_t seed, int width, int height, int noise_permille) {
    SeededStream rng(seed);
    Image2D img(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (rng.chance(static_cast<std::uint64_t>(noise_permille), 1000)) img.set(x, y, true);
    return img;
}

// ---- 3D accretion ----------------------------------------------------------

namespace {

bool keeps_well_composed_3d(const Volume3D& grid, const Coord3& c) {
    // Every 2x2x2 window containing c, checked with c set.
    for (int az = c.z - 1; az <= c.z; ++az)
        for (int ay = c.y - 1; ay <= c.y; ++ay)
            for (int ax = c.x - 1; ax <= c.x; ++ax) {
                bool w[8];
                for (int i = 0; i < 8; ++i) {
                    const Coord3 p{ax + (i & 1), ay + ((i >> 1) & 1), az + ((i >> 2) & 1)};
                    w[i] = p == c || grid.at(p);
                }
                int ones = 0;
                for (bool b : w) ones += b;
                for (int i = 0; i < 4; ++i) {
                    const int j = 7 - i;
                    if (ones == 2 && w[i] && w[j]) return false;
                    if (ones == 6 && !w[i] && !w[j]) return false;
                }
                // Edge windows: 2x2 faces of this block.
                for (int axis = 0; axis < 3; ++axis)
                    for (int side = 0; side < 2; ++side) {
                        int idx[4], n = 0;
                        for (int i = 0; i < 8; ++i)
                            if (((i >> axis) & 1) == side) idx[n++] = i;
                        // idx holds the square in bit order: 0-3 and 1-2 are diagonals.
                        const bool a = w[idx[0]], b = w[idx[1]], cc = w[idx[2]], d = w[idx[3]];
                        if ((a && d && !b && !cc) || (b && cc && !a && !d)) return false;
                    }
            }
    return true;
}

// (6,26) simple-point test for adding c: exactly one 6-component of the
// object in N18(c) that is 6-adjacent to c, and exactly one 26-component of
// the background in N26(c).
bool simple_addition_3d(const Volume3D& grid, const Coord3& c) {
    int obj[27], seen[27];
    for (int i = 0; i < 27; ++i) {
        const int dx = i % 3 - 1, dy = (i / 3) % 3 - 1, dz = i / 9 - 1;
        obj[i] = i == 13 ? -1 : grid.at(c.x + dx, c.y + dy, c.z + dz);
    }
    auto l1 = [](int i) { return std::abs(i % 3 - 1) + std::abs((i / 3) % 3 - 1) + std::abs(i / 9 - 1); };
    auto adjacent = [](int a, int b, bool six) {
        const int dx = std::abs(a % 3 - b % 3), dy = std::abs((a / 3) % 3 - (b / 3) % 3),
                  dz = std::abs(a / 9 - b / 9);
        return six ? dx + dy + dz == 1 : std::max({dx, dy, dz}) == 1;
    };
    auto count = [&](bool want_obj, bool six) {
        std::fill(std::begin(seen), std::end(seen), 0);
        int comps = 0;
        for (int s = 0; s < 27; ++s) {
            if (s == 13 || seen[s] || obj[s] != want_obj) continue;
            if (six && l1(s) == 3) continue; // N18 excludes corners
            bool touches = !six || l1(s) == 1;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                const int a = stack.back();
                stack.pop_back();
                for (int b = 0; b < 27; ++b) {
                    if (b == 13 || seen[b] || obj[b] != want_obj || !adjacent(a, b, six)) continue;
                    if (six && l1(b) == 3) continue;
                    seen[b] = 1;
                    if (l1(b) == 1) touches = true;
                    stack.push_back(b);
                }
            }
            if (touches) ++comps;
        }
        return comps;
    };
    return count(true, true) == 1 && count(false, false) == 1;
}

} // namespace

Volume3D gen_fat_blob_3d(std::uint64_t seed, int target_voxels, int min_width) {
    if (min_width < 2) throw Error(ErrorKind::InvalidArgument, "min_width must be at least 2");
    SeededStream rng(seed);
    const int cell_vol = min_width * min_width * min_width;
    const int cells = std::max(1, (target_voxels + cell_vol - 1) / cell_vol);
    const int side = 2 * static_cast<int>(std::ceil(std::cbrt(static_cast<double>(cells)))) + 4;
    Volume3D grid(side, side, side);
    std::vector<Coord3> frontier;
    static constexpr int kDir6[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    auto grow = [&](const Coord3& c) {
        grid.set(c.x, c.y, c.z, true);
        for (const auto& d : kDir6) {
            const Coord3 n{c.x + d[0], c.y + d[1], c.z + d[2]};
            if (grid.in_bounds(n.x, n.y, n.z) && !grid.at(n)) frontier.push_back(n);
        }
    };
    grow({side / 2, side / 2, side / 2});
    int placed = 1;
    while (placed < cells && !frontier.empty()) {
        const std::size_t pick = rng.below(frontier.size());
        const Coord3 c = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (grid.at(c)) continue;
        if (!keeps_well_composed_3d(grid, c) || !simple_addition_3d(grid, c)) continue;
        grow(c);
        ++placed;
    }

    int lo[3] = {side, side, side}, hi[3] = {-1, -1, -1};
    for (int z = 0; z < side; ++z)
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x)
                if (grid.at(x, y, z)) {
                    const int c[3] = {x, y, z};
                    for (int k = 0; k < 3; ++k) {
                        lo[k] = std::min(lo[k], c[k]);
                        hi[k] = std::max(hi[k], c[k]);
                    }
                }
    const int s = min_width;
    Volume3D vol((hi[0] - lo[0] + 1) * s + 2, (hi[1] - lo[1] + 1) * s + 2, (hi[2] - lo[2] + 1) * s + 2);
    for (int z = lo[2]; z <= hi[2]; ++z)
        for (int y = lo[1]; y <= hi[1]; ++y)
            for (int x = lo[0]; x <= hi[0]; ++x) {
                if (!grid.at(x, y, z)) continue;
                for (int dz = 0; dz < s; ++dz)
                    for (int dy = 0; dy < s; ++dy)
                        for (int dx = 0; dx < s; ++dx)
                            vol.set(1 + (x - lo[0]) * s + dx, 1 + (y - lo[1]) * s + dy,
                                    1 + (z - lo[2]) * s + dz, true);
            }
    return vol;
}

Volume3D gen_salted_volume(std::uint64_t seed, int noise_permille) {
    SeededStream rng(seed);
    Volume3D vol = rng.chance(1, 2) ? gen_fat_blob_3d(rng.next(), rng.between(64, 1500))
                                    : gen_random_frame(rng.between(1, 4), rng.next());
    for (int z = 0; z < vol.nz(); ++z)
        for (int y = 0; y < vol.ny(); ++y)
            for (int x = 0; x < vol.nx(); ++x)
                if (rng.chance(static_cast<std::uint64_t>(noise_permille), 1000))
                    vol.set(x, y, z, !vol.at(x, y, z));
    return vol;
}

namespace {
int sponge_lattice(int side) { return side >= 6 ? (side - 6) / 4 + 1 : 0; }
} // namespace

int sponge_tunnels(int side) { return sponge_lattice(side) * sponge_lattice(side); }

Volume3D gen_sponge_3d(int side) {
    Volume3D vol = gen_block_3d(side, side, side);
    const int t = sponge_lattice(side);
    for (int j = 0; j < t; ++j)
        for (int i = 0; i < t; ++i) {
            const int x0 = 1 + 2 + 4 * i, y0 = 1 + 2 + 4 * j;
            for (int z = 1; z <= side; ++z)
                for (int y = y0; y < y0 + 2; ++y)
                    for (int x = x0; x < x0 + 2; ++x) vol.set(x, y, z, false);
        }
    return vol;
}

Volume3D extrude(const Image2D& img, int layers) {
    if (layers < 0) throw Error(ErrorKind::InvalidArgument, "negative layer count");
    Volume3D vol(img.width(), img.height(), layers);
    for (int z = 0; z < layers; ++z)
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x)
                if (img.at(x, y)) vol.set(x, y, z, true);
    return vol;
}

} // namespace digitopo
