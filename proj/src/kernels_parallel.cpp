#include <omp.h>

#include "digitopo/kernels.hpp"

namespace digitopo::parallel {

namespace {

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    std::vector<T> out;
    out.reserve(n);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::span<const std::uint8_t> slab_or_empty(const Volume3D& vol, int z) {
    if (z < 0 || z >= vol.nz()) return {};
    return vol.slab(z);
}

} // namespace

CornerHistogram corner_histogram(const Image2D& img) {
    const int h = img.height();
    std::vector<CornerHistogram> rows(static_cast<std::size_t>(h));
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < img.width(); ++x) detail::classify_pixel(img, x, y, rows[y]);
    CornerHistogram total;
    for (const auto& r : rows) total += r;
    return total;
}

std::vector<Pathology2D> pathologies_2d(const Image2D& img) {
    const int h = img.height();
    std::vector<std::vector<Pathology2D>> rows(static_cast<std::size_t>(h) + 1);
#pragma omp parallel for schedule(static)
    for (int y = -1; y < h; ++y) detail::scan_pathology_row(img, y, rows[y + 1]);
    return concat(rows);
}

std::vector<std::uint64_t> surface_points(const Volume3D& vol) {
    const auto g = VertexGrid::of(vol);
    std::vector<std::vector<std::uint64_t>> layers(static_cast<std::size_t>(g.nz));
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < g.nz; ++k) {
        const auto below = slab_or_empty(vol, k - 1);
        const auto above = slab_or_empty(vol, k);
        auto& out = layers[k];
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                if (is_surface_config(vertex_config(below, above, vol.nx(), vol.ny(), i, j)))
                    out.push_back(g.index(i, j, k));
    }
    return concat(layers);
}

SurfaceHistogram surface_histogram(const Volume3D& vol) {
    const auto g = VertexGrid::of(vol);
    std::vector<SurfaceHistogram> layers(static_cast<std::size_t>(g.nz));
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < g.nz; ++k) {
        const auto below = slab_or_empty(vol, k - 1);
        const auto above = slab_or_empty(vol, k);
        SurfaceHistogram h;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const auto c = vertex_config(below, above, vol.nx(), vol.ny(), i, j);
                if (is_surface_config(c)) h.add_degree(surface_degree(c));
            }
        layers[k] = h;
    }
    SurfaceHistogram total;
    for (const auto& h : layers) total += h;
    return total;
}

std::vector<std::uint64_t> boundary_voxels(const Volume3D& vol) {
    std::vector<std::vector<std::uint64_t>> slabs(static_cast<std::size_t>(vol.nz()));
#pragma omp parallel for schedule(dynamic, 1)
    for (int z = 0; z < vol.nz(); ++z) {
        auto& out = slabs[z];
        for (int y = 0; y < vol.ny(); ++y)
            for (int x = 0; x < vol.nx(); ++x) {
                if (!vol.at(x, y, z)) continue;
                bool boundary = false;
                for (int dz = -1; dz <= 1 && !boundary; ++dz)
                    for (int dy = -1; dy <= 1 && !boundary; ++dy)
                        for (int dx = -1; dx <= 1 && !boundary; ++dx)
                            if ((dx || dy || dz) && !vol.at(x + dx, y + dy, z + dz)) boundary = true;
                if (boundary) out.push_back(vol.index(x, y, z));
            }
    }
    return concat(slabs);
}

std::vector<Pathology3D> pathologies_3d(const Volume3D& vol) {
    std::vector<std::vector<Pathology3D>> slabs(static_cast<std::size_t>(vol.nz()));
#pragma omp parallel for schedule(dynamic, 1)
    for (int z = 0; z < vol.nz(); ++z) detail::scan_pathology_slab(vol, z, slabs[z]);
    return concat(slabs);
}

} // namespace digitopo::parallel
