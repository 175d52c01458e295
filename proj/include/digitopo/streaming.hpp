#pragma once

// Slab-streaming surface counter. Voxel z-slabs are pushed in order; vertex
// layer k is classified as soon as slabs k-1 and k are known, and surface
// components are tracked with a union-find that is compacted after every
// layer. Resident state: the previous voxel slab, one vertex-label layer and
// the caller's current slab, plus one counter record per live surface
// fragment.

#include <cstdint>
#include <span>
#include <vector>

#include "digitopo/grid.hpp"
#include "digitopo/types.hpp"

namespace digitopo {

struct StreamedSurface {
    std::uint64_t min_vertex = 0;
    std::size_t points = 0;
    SurfaceHistogram histogram;
};

class StreamingSurfaceCounter {
public:
    StreamingSurfaceCounter(int nx, int ny);

    /// `slab` is nx*ny cells, x fastest.
    void push_slab(std::span<const std::uint8_t> slab);

    /// Classifies the top vertex layer and returns all surfaces ordered by
    /// minimal vertex. The counter is spent afterwards.
    std::vector<StreamedSurface> finish();

    /// Peak bytes held in slab-sized buffers, the caller's slab included.
    std::size_t peak_slab_buffer_bytes() const noexcept { return peak_slab_bytes_; }
    /// Slab-sized buffers resident at once (previous slab, label layer, the
    /// pushed slab).
    static constexpr int kSlabBuffers = 3;
    std::size_t peak_live_fragments() const noexcept { return peak_fragments_; }
    std::size_t slabs_seen() const noexcept { return static_cast<std::size_t>(layer_); }

private:
    void process_layer(std::span<const std::uint8_t> below, std::span<const std::uint8_t> above);
    void compact();
    std::uint32_t find(std::uint32_t a);
    std::uint32_t unite(std::uint32_t a, std::uint32_t b);
    std::uint32_t make_fragment(std::uint64_t vertex);

    int nx_;
    int ny_;
    int layer_ = 0; // next vertex layer to classify
    bool finished_ = false;
    std::vector<std::uint8_t> prev_;     // voxel slab layer_-1
    bool have_prev_ = false;
    std::vector<std::uint32_t> labels_;  // fragment id per vertex of the last layer

    std::vector<std::uint32_t> parent_;
    std::vector<StreamedSurface> frag_;
    std::vector<StreamedSurface> done_;

    std::size_t peak_slab_bytes_ = 0;
    std::size_t peak_fragments_ = 0;
};

/// Streams every slab of `vol` through a counter.
std::vector<StreamedSurface> stream_surfaces(const Volume3D& vol,
                                             std::size_t* peak_slab_bytes = nullptr,
                                             std::size_t* peak_fragments = nullptr);

} // namespace digitopo
