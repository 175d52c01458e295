#include "digitopo/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "digitopo/error.hpp"

namespace digitopo {

bool is_2d(Adjacency adj) noexcept {
    return adj == Adjacency::Direct2D || adj == Adjacency::Indirect2D;
}

bool is_direct(Adjacency adj) noexcept {
    return adj == Adjacency::Direct2D || adj == Adjacency::Direct3D;
}

bool directly_adjacent(std::span<const int> p, std::span<const int> q) noexcept {
    if (p.size() != q.size()) return false;
    int l1 = 0;
    for (std::size_t i = 0; i < p.size(); ++i) l1 += std::abs(p[i] - q[i]);
    return l1 == 1;
}

bool indirectly_adjacent(std::span<const int> p, std::span<const int> q) noexcept {
    if (p.size() != q.size()) return false;
    int linf = 0;
    for (std::size_t i = 0; i < p.size(); ++i) linf = std::max(linf, std::abs(p[i] - q[i]));
    return linf == 1;
}

// ---- Image2D ---------------------------------------------------------------

Image2D::Image2D(int width, int height) : Image2D(width, height, {}) {}

Image2D::Image2D(int width, int height, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
    if (width < 0 || height < 0)
        throw Error(ErrorKind::InvalidArgument, "negative image extent");
    const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (cells_.empty()) cells_.assign(n, 0);
    if (cells_.size() != n)
        throw Error(ErrorKind::InvalidArgument, "cell count does not match width*height");
    for (auto& c : cells_) c = c ? 1 : 0;
}

Image2D Image2D::from_rows(const std::vector<std::vector<int>>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = h == 0 ? 0 : static_cast<int>(rows.front().size());
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(w) * h);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != w)
            throw Error(ErrorKind::InvalidArgument, "ragged rows");
        for (int v : row) cells.push_back(v != 0);
    }
    return Image2D(w, h, std::move(cells));
}

void Image2D::set(int x, int y, bool value) {
    if (!in_bounds(x, y)) throw Error(ErrorKind::InvalidArgument, "pixel out of range");
    cells_[index(x, y)] = value ? 1 : 0;
}

std::size_t Image2D::count() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

// ---- Volume3D --------------------------------------------------------------

Volume3D::Volume3D(int nx, int ny, int nz) : Volume3D(nx, ny, nz, {}) {}

Volume3D::Volume3D(int nx, int ny, int nz, std::vector<std::uint8_t> cells)
    : nx_(nx), ny_(ny), nz_(nz), cells_(std::move(cells)) {
    if (nx < 0 || ny < 0 || nz < 0)
        throw Error(ErrorKind::InvalidArgument, "negative volume extent");
    const auto n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
                   static_cast<std::size_t>(nz);
    if (cells_.empty()) cells_.assign(n, 0);
    if (cells_.size() != n)
        throw Error(ErrorKind::InvalidArgument, "cell count does not match nx*ny*nz");
    for (auto& c : cells_) c = c ? 1 : 0;
}

void Volume3D::set(int x, int y, int z, bool value) {
    if (!in_bounds(x, y, z)) throw Error(ErrorKind::InvalidArgument, "voxel out of range");
    cells_[index(x, y, z)] = value ? 1 : 0;
}

Coord3 Volume3D::coord(std::size_t i) const noexcept {
    const auto sx = static_cast<std::size_t>(nx_);
    const auto sy = static_cast<std::size_t>(ny_);
    return {static_cast<int>(i % sx), static_cast<int>((i / sx) % sy),
            static_cast<int>(i / (sx * sy))};
}

std::size_t Volume3D::count() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

// ---- labeling --------------------------------------------------------------

namespace {

struct Offset {
    int dx, dy, dz;
};

std::vector<Offset> neighbor_offsets(Adjacency adj) {
    std::vector<Offset> out;
    const int zr = is_2d(adj) ? 0 : 1;
    for (int dz = -zr; dz <= zr; ++dz)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                const int l1 = std::abs(dx) + std::abs(dy) + std::abs(dz);
                if (l1 == 0) continue;
                if (is_direct(adj) && l1 != 1) continue;
                out.push_back({dx, dy, dz});
            }
    return out;
}

// Breadth-first flood labeling of every cell whose occupancy equals `value`
// over a w*h*d grid. Seeds are visited in linear (scan) order, which fixes
// the label order.
Labeling flood_label(std::span<const std::uint8_t> cells, int w, int h, int d,
                     std::uint8_t value, Adjacency adj) {
    Labeling out;
    out.width = w;
    out.height = h;
    out.depth = d;
    out.adjacency = adj;
    out.labels.assign(cells.size(), 0);

    const auto offsets = neighbor_offsets(adj);
    std::vector<std::size_t> queue;
    const auto sw = static_cast<std::size_t>(w);
    const auto sh = static_cast<std::size_t>(h);

    for (std::size_t seed = 0; seed < cells.size(); ++seed) {
        if (cells[seed] != value || out.labels[seed] != 0) continue;
        const std::uint32_t label = ++out.count;
        out.labels[seed] = label;
        queue.clear();
        queue.push_back(seed);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t i = queue[head];
            const int x = static_cast<int>(i % sw);
            const int y = static_cast<int>((i / sw) % sh);
            const int z = static_cast<int>(i / (sw * sh));
            for (const auto& o : offsets) {
                const int nx = x + o.dx, ny = y + o.dy, nz = z + o.dz;
                if (nx < 0 || ny < 0 || nz < 0 || nx >= w || ny >= h || nz >= d) continue;
                const std::size_t j = (static_cast<std::size_t>(nz) * sh + ny) * sw + nx;
                if (cells[j] != value || out.labels[j] != 0) continue;
                out.labels[j] = label;
                queue.push_back(j);
            }
        }
    }
    return out;
}

} // namespace

Labeling label_components_2d(const Image2D& img, Adjacency adj) {
    if (!is_2d(adj)) throw Error(ErrorKind::InvalidArgument, "2D labeling needs a 2D adjacency");
    return flood_label(img.cells(), img.width(), img.height(), 1, 1, adj);
}

Labeling label_components_3d(const Volume3D& vol, Adjacency adj) {
    if (is_2d(adj)) throw Error(ErrorKind::InvalidArgument, "3D labeling needs a 3D adjacency");
    return flood_label(vol.cells(), vol.nx(), vol.ny(), vol.nz(), 1, adj);
}

Labeling label_background_2d(const Image2D& img, Adjacency adj) {
    if (!is_2d(adj)) throw Error(ErrorKind::InvalidArgument, "2D labeling needs a 2D adjacency");
    // Embed into a canvas with a one-cell ring so the outer region is a
    // single connected seed at padded (0,0).
    const int w = img.width(), h = img.height();
    const int pw = w + 2, ph = h + 2;
    std::vector<std::uint8_t> padded(static_cast<std::size_t>(pw) * ph, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            padded[static_cast<std::size_t>(y + 1) * pw + (x + 1)] = img.at(x, y) ? 1 : 0;
    const Labeling full = flood_label(padded, pw, ph, 1, 0, adj);

    Labeling out;
    out.width = w;
    out.height = h;
    out.adjacency = adj;
    out.count = full.count;
    out.labels.assign(img.size(), 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out.labels[img.index(x, y)] = full.labels[static_cast<std::size_t>(y + 1) * pw + (x + 1)];
    return out;
}

// ---- extraction ------------------------------------------------------------

namespace {

struct Box {
    int lo[3] = {std::numeric_limits<int>::max(), std::numeric_limits<int>::max(),
                 std::numeric_limits<int>::max()};
    int hi[3] = {-1, -1, -1};
};

Box bounding_box(const Labeling& lab, std::uint32_t id) {
    if (id == 0 || id > lab.count) throw Error(ErrorKind::NoSuchComponent, "no such component");
    Box box;
    std::size_t i = 0;
    for (int z = 0; z < lab.depth; ++z)
        for (int y = 0; y < lab.height; ++y)
            for (int x = 0; x < lab.width; ++x, ++i) {
                if (lab.labels[i] != id) continue;
                const int c[3] = {x, y, z};
                for (int k = 0; k < 3; ++k) {
                    box.lo[k] = std::min(box.lo[k], c[k]);
                    box.hi[k] = std::max(box.hi[k], c[k]);
                }
            }
    if (box.hi[0] < 0) throw Error(ErrorKind::NoSuchComponent, "no such component");
    return box;
}

std::vector<Box> all_boxes(const Labeling& lab) {
    std::vector<Box> boxes(lab.count);
    std::size_t i = 0;
    for (int z = 0; z < lab.depth; ++z)
        for (int y = 0; y < lab.height; ++y)
            for (int x = 0; x < lab.width; ++x, ++i) {
                const auto id = lab.labels[i];
                if (id == 0) continue;
                Box& box = boxes[id - 1];
                const int c[3] = {x, y, z};
                for (int k = 0; k < 3; ++k) {
                    box.lo[k] = std::min(box.lo[k], c[k]);
                    box.hi[k] = std::max(box.hi[k], c[k]);
                }
            }
    return boxes;
}

ExtractedImage extract_in_box(const Labeling& lab, std::uint32_t id, const Box& box) {
    const int w = box.hi[0] - box.lo[0] + 3;
    const int h = box.hi[1] - box.lo[1] + 3;
    ExtractedImage out{Image2D(w, h), {box.lo[0] - 1, box.lo[1] - 1}};
    for (int y = box.lo[1]; y <= box.hi[1]; ++y)
        for (int x = box.lo[0]; x <= box.hi[0]; ++x)
            if (lab.at(x, y) == id) out.image.set(x - out.origin.x, y - out.origin.y, true);
    return out;
}

ExtractedVolume extract_in_box_3d(const Labeling& lab, std::uint32_t id, const Box& box) {
    const int nx = box.hi[0] - box.lo[0] + 3;
    const int ny = box.hi[1] - box.lo[1] + 3;
    const int nz = box.hi[2] - box.lo[2] + 3;
    ExtractedVolume out{Volume3D(nx, ny, nz), {box.lo[0] - 1, box.lo[1] - 1, box.lo[2] - 1}};
    for (int z = box.lo[2]; z <= box.hi[2]; ++z)
        for (int y = box.lo[1]; y <= box.hi[1]; ++y)
            for (int x = box.lo[0]; x <= box.hi[0]; ++x)
                if (lab.at(x, y, z) == id)
                    out.volume.set(x - out.origin.x, y - out.origin.y, z - out.origin.z, true);
    return out;
}

} // namespace

std::vector<ExtractedImage> extract_all_components(const Labeling& lab) {
    const auto boxes = all_boxes(lab);
    std::vector<ExtractedImage> out;
    out.reserve(boxes.size());
    for (std::uint32_t id = 1; id <= lab.count; ++id) out.push_back(extract_in_box(lab, id, boxes[id - 1]));
    return out;
}

std::vector<ExtractedVolume> extract_all_components_3d(const Labeling& lab) {
    const auto boxes = all_boxes(lab);
    std::vector<ExtractedVolume> out;
    out.reserve(boxes.size());
    for (std::uint32_t id = 1; id <= lab.count; ++id)
        out.push_back(extract_in_box_3d(lab, id, boxes[id - 1]));
    return out;
}

ExtractedImage extract_component_at(const Labeling& lab, std::uint32_t id) {
    return extract_in_box(lab, id, bounding_box(lab, id));
}

ExtractedVolume extract_component_3d_at(const Labeling& lab, std::uint32_t id) {
    return extract_in_box_3d(lab, id, bounding_box(lab, id));
}

Image2D extract_component(const Labeling& lab, std::uint32_t id) {
    return extract_component_at(lab, id).image;
}

Volume3D extract_component_3d(const Labeling& lab, std::uint32_t id) {
    return extract_component_3d_at(lab, id).volume;
}

// ---- windows ---------------------------------------------------------------

std::array<bool, 4> window2(const Image2D& img, int x, int y) {
    return {img.at(x, y), img.at(x + 1, y), img.at(x, y + 1), img.at(x + 1, y + 1)};
}

std::array<bool, 8> window8(const Volume3D& vol, int x, int y, int z) {
    std::array<bool, 8> out{};
    for (int i = 0; i < 8; ++i) out[i] = vol.at(x + (i & 1), y + ((i >> 1) & 1), z + ((i >> 2) & 1));
    return out;
}

std::uint8_t window8_mask(const Volume3D& vol, int x, int y, int z) noexcept {
    std::uint8_t m = 0;
    for (int i = 0; i < 8; ++i)
        if (vol.at(x + (i & 1), y + ((i >> 1) & 1), z + ((i >> 2) & 1))) m |= std::uint8_t(1u << i);
    return m;
}

} // namespace digitopo
