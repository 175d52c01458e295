#pragma once

// Deterministic test-corpus generators.
//
// Random stream: std::mt19937_64 seeded with the 64-bit seed; a draw in
// [0, n) is `engine() % n`. Both steps are fully specified by the C++
// standard, so a seed reproduces the same shape on every platform. No
// <random> distributions are used because their output is
// implementation-defined.

#include <cstdint>
#include <random>

#include "digitopo/grid.hpp"

namespace digitopo {

class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform-ish draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    /// Draw in [lo, hi].
    int between(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Solid w x h block with one background cell of padding.
Image2D gen_block_2d(int w, int h);
Volume3D gen_block_3d(int nx, int ny, int nz);

struct FrameParams {
    int holes = 1;      // tunnels, in a row along x
    int ring_width = 1; // material between / around tunnels
    int thickness = 1;  // extent along z
    int hole_size = 1;  // tunnel cross-section edge length
};

/// Slab pierced by `holes` square tunnels; genus = holes. holes = 0 gives the
/// same slab without tunnels. Padded by one cell.
Volume3D gen_frame(const FrameParams& params);
inline Volume3D gen_frame(int holes) { return gen_frame(FrameParams{holes, 1, 1, 1}); }

/// Slab with `holes` tunnels of random sizes laid out on a grid, random
/// ring width and thickness; genus = holes.
Volume3D gen_random_frame(int holes, std::uint64_t seed);

/// outer^3 cube with a centered cavity^3 hole (cavity = 0: solid). Throws
/// InvalidArgument when the cavity would touch the outer boundary.
Volume3D gen_shell(int outer, int cavity);

/// Simply connected, 4-connected component grown from min_width x min_width
/// super-cells; every accretion keeps the shape free of diagonal contacts and
/// holes. Area is target_area rounded up to whole super-cells unless growth
/// gets boxed in.
Image2D gen_fat_polyomino_2d(std::uint64_t seed, int target_area, int min_width = 2);

/// Fat polyomino with up to `holes` 2x2 holes, each drilled where the 6x6
/// block around it is solid (so holes stay two pixels from any background).
Image2D gen_holed_polyomino_2d(std::uint64_t seed, int target_area, int holes);

/// Drills a 2x2 hole at the first scan position (from a seeded start) whose
/// surrounding 6x6 block is solid. Returns false if no such position exists.
bool drill_hole_2d(Image2D& img, SeededStream& rng);

/// Multi-component scene: a few holed polyominoes OR-ed on a canvas plus
/// per-pixel salt noise (noise_permille / 1000 flip probability).
Image2D gen_scene_2d(std::uint64_t seed, int width = 64, int height = 64, int noise_permille = 10);

/// 3D analogue of gen_fat_polyomino_2d: a ball-like (genus 0, one boundary
/// surface), well-composed solid grown from min_width^3 super-cells.
Volume3D gen_fat_blob_3d(std::uint64_t seed, int target_voxels, int min_width = 2);

/// A blob or random frame with `noise_permille` / 1000 of its box flipped.
Volume3D gen_salted_volume(std::uint64_t seed, int noise_permille = 50);

/// Random 2D image with roughly `noise_permille` / 1000 foreground density,
/// unstructured (for repair stress tests).
Image2D gen_noise_2d(std::uint64_t seed, int width, int height, int noise_permille);

/// side^3 cube pierced along z by 2x2 tunnels on a period-4 lattice, each
/// tunnel at least two voxels from the faces; genus = sponge_tunnels(side).
/// Well-composed at any size, so it is the bench workload.
Volume3D gen_sponge_3d(int side);
int sponge_tunnels(int side);

/// Stacks `layers` copies of img along z.
Volume3D extrude(const Image2D& img, int layers = 2);

} // namespace digitopo
