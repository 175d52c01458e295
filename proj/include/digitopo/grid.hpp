#pragma once

// Dense binary grids, adjacency, and connected-component labeling.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace digitopo {

enum class Adjacency : std::uint8_t {
    Direct2D,   // 4-neighbor
    Indirect2D, // 8-neighbor
    Direct3D,   // 6-neighbor
    Indirect3D, // 26-neighbor
};

bool is_2d(Adjacency adj) noexcept;
bool is_direct(Adjacency adj) noexcept;

/// Adjacency predicates on integer coordinates of equal dimension.
/// Direct: L1 distance 1. Indirect: L-infinity distance 1.
bool directly_adjacent(std::span<const int> p, std::span<const int> q) noexcept;
bool indirectly_adjacent(std::span<const int> p, std::span<const int> q) noexcept;

struct Coord2 {
    int x = 0;
    int y = 0;
    friend bool operator==(const Coord2&, const Coord2&) = default;
};

struct Coord3 {
    int x = 0;
    int y = 0;
    int z = 0;
    friend bool operator==(const Coord3&, const Coord3&) = default;
};

/// Row-major binary image. Anything outside [0,width) x [0,height) reads as
/// background.
class Image2D {
public:
    Image2D() = default;
    Image2D(int width, int height);
    /// `rows` is row-major, nonzero = foreground.
    Image2D(int width, int height, std::vector<std::uint8_t> cells);

    /// Build from a list of equal-length rows of '0'/'1' (or 0/1 ints).
    static Image2D from_rows(const std::vector<std::vector<int>>& rows);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    bool in_bounds(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }
    bool at(int x, int y) const noexcept {
        return in_bounds(x, y) && cells_[index(x, y)] != 0;
    }
    void set(int x, int y, bool value);

    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    std::span<const std::uint8_t> cells() const noexcept { return cells_; }
    std::size_t count() const noexcept;

    friend bool operator==(const Image2D&, const Image2D&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Binary volume, x fastest then y then z; one z-slab is contiguous.
class Volume3D {
public:
    Volume3D() = default;
    Volume3D(int nx, int ny, int nz);
    Volume3D(int nx, int ny, int nz, std::vector<std::uint8_t> cells);

    int nx() const noexcept { return nx_; }
    int ny() const noexcept { return ny_; }
    int nz() const noexcept { return nz_; }
    std::size_t size() const noexcept { return cells_.size(); }
    std::size_t slab_size() const noexcept {
        return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
    }

    bool in_bounds(int x, int y, int z) const noexcept {
        return x >= 0 && y >= 0 && z >= 0 && x < nx_ && y < ny_ && z < nz_;
    }
    bool at(int x, int y, int z) const noexcept {
        return in_bounds(x, y, z) && cells_[index(x, y, z)] != 0;
    }
    bool at(const Coord3& c) const noexcept { return at(c.x, c.y, c.z); }
    void set(int x, int y, int z, bool value);

    std::size_t index(int x, int y, int z) const noexcept {
        return (static_cast<std::size_t>(z) * static_cast<std::size_t>(ny_) +
                static_cast<std::size_t>(y)) *
                   static_cast<std::size_t>(nx_) +
               static_cast<std::size_t>(x);
    }
    Coord3 coord(std::size_t index) const noexcept;

    std::span<const std::uint8_t> cells() const noexcept { return cells_; }
    std::span<const std::uint8_t> slab(int z) const noexcept {
        return std::span<const std::uint8_t>(cells_).subspan(
            static_cast<std::size_t>(z) * slab_size(), slab_size());
    }
    std::size_t count() const noexcept;

    friend bool operator==(const Volume3D&, const Volume3D&) = default;

private:
    int nx_ = 0;
    int ny_ = 0;
    int nz_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Per-cell component ids. 0 = background / unlabeled; labels are dense in
/// 1..count and assigned in scan order of each component's first cell.
struct Labeling {
    int width = 0;
    int height = 0;
    int depth = 1;
    std::vector<std::uint32_t> labels;
    std::uint32_t count = 0;
    Adjacency adjacency = Adjacency::Direct2D;

    std::uint32_t at(int x, int y, int z = 0) const noexcept {
        return labels[(static_cast<std::size_t>(z) * height + y) * width + x];
    }
};

Labeling label_components_2d(const Image2D& img, Adjacency adj);
Labeling label_components_3d(const Volume3D& vol, Adjacency adj);

/// Labels the complement of `img`. The implicit background surrounding the
/// image is one region and always receives label 1 (even when no in-image
/// cell belongs to it), so `count` >= 1.
Labeling label_background_2d(const Image2D& img, Adjacency adj);

/// A component copied into a tight bounding box with one background cell of
/// padding on every side. `origin` is where local (0,0) sits in the source.
struct ExtractedImage {
    Image2D image;
    Coord2 origin;
};
struct ExtractedVolume {
    Volume3D volume;
    Coord3 origin;
};

ExtractedImage extract_component_at(const Labeling& labeling, std::uint32_t id);
ExtractedVolume extract_component_3d_at(const Labeling& labeling, std::uint32_t id);

Image2D extract_component(const Labeling& labeling, std::uint32_t id);
Volume3D extract_component_3d(const Labeling& labeling, std::uint32_t id);

/// Every component at once, index k holding label k+1. One pass for the
/// bounding boxes, then one pass per box.
std::vector<ExtractedImage> extract_all_components(const Labeling& labeling);
std::vector<ExtractedVolume> extract_all_components_3d(const Labeling& labeling);

/// 2x2 window anchored at (x,y). Bit order: [0]=(x,y) [1]=(x+1,y)
/// [2]=(x,y+1) [3]=(x+1,y+1).
std::array<bool, 4> window2(const Image2D& img, int x, int y);

/// 2x2x2 window anchored at (x,y,z). Element i covers
/// (x + (i&1), y + ((i>>1)&1), z + ((i>>2)&1)).
std::array<bool, 8> window8(const Volume3D& vol, int x, int y, int z);

/// Same as window8 packed into a byte (bit i = element i).
std::uint8_t window8_mask(const Volume3D& vol, int x, int y, int z) noexcept;

} // namespace digitopo
