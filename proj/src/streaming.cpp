#include "digitopo/streaming.hpp"

#include <algorithm>
#include <limits>

#include "digitopo/error.hpp"
#include "digitopo/grid.hpp"
#include "digitopo/kernels.hpp"

namespace digitopo {

namespace {
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
}

StreamingSurfaceCounter::StreamingSurfaceCounter(int nx, int ny)
    : nx_(nx), ny_(ny),
      labels_(static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1), kNone) {
    if (nx < 0 || ny < 0) throw Error(ErrorKind::InvalidArgument, "negative slab extent");
    prev_.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
}

std::uint32_t StreamingSurfaceCounter::find(std::uint32_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
}

std::uint32_t StreamingSurfaceCounter::unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    auto& fa = frag_[a];
    const auto& fb = frag_[b];
    fa.min_vertex = std::min(fa.min_vertex, fb.min_vertex);
    fa.points += fb.points;
    fa.histogram += fb.histogram;
    return a;
}

std::uint32_t StreamingSurfaceCounter::make_fragment(std::uint64_t vertex) {
    const auto id = static_cast<std::uint32_t>(frag_.size());
    parent_.push_back(id);
    frag_.push_back({vertex, 0, {}});
    peak_fragments_ = std::max(peak_fragments_, frag_.size());
    return id;
}

void StreamingSurfaceCounter::process_layer(std::span<const std::uint8_t> below,
                                            std::span<const std::uint8_t> above) {
    const int vx = nx_ + 1, vy = ny_ + 1;
    const std::uint64_t layer_base = static_cast<std::uint64_t>(layer_) * vx * vy;
    for (int j = 0; j < vy; ++j) {
        for (int i = 0; i < vx; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * vx + i;
            const std::uint32_t below_label = labels_[idx]; // still layer_-1 here
            const std::uint8_t cfg = vertex_config(below, above, nx_, ny_, i, j);
            if (!is_surface_config(cfg)) {
                labels_[idx] = kNone;
                continue;
            }
            std::uint32_t id = kNone;
            auto join = [&](std::uint32_t other) {
                id = id == kNone ? find(other) : unite(id, other);
            };
            if (surface_edge(cfg, 4) && below_label != kNone) join(below_label);
            if (surface_edge(cfg, 0) && i > 0 && labels_[idx - 1] != kNone) join(labels_[idx - 1]);
            if (surface_edge(cfg, 2) && j > 0 && labels_[idx - vx] != kNone) join(labels_[idx - vx]);
            if (id == kNone) id = make_fragment(layer_base + idx);
            auto& f = frag_[id];
            ++f.points;
            f.histogram.add_degree(surface_degree(cfg));
            labels_[idx] = id;
        }
    }
    ++layer_;
    compact();
}

void StreamingSurfaceCounter::compact() {
    std::vector<std::uint32_t> remap(frag_.size(), kNone);
    std::vector<StreamedSurface> live;
    for (auto& l : labels_) {
        if (l == kNone) continue;
        const auto r = find(l);
        if (remap[r] == kNone) {
            remap[r] = static_cast<std::uint32_t>(live.size());
            live.push_back(frag_[r]);
        }
        l = remap[r];
    }
    for (std::uint32_t r = 0; r < frag_.size(); ++r)
        if (parent_[r] == r && remap[r] == kNone) done_.push_back(frag_[r]);
    frag_ = std::move(live);
    parent_.resize(frag_.size());
    for (std::uint32_t k = 0; k < parent_.size(); ++k) parent_[k] = k;
}

void StreamingSurfaceCounter::push_slab(std::span<const std::uint8_t> slab) {
    if (finished_) throw Error(ErrorKind::InvalidArgument, "counter already finished");
    if (slab.size() != static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_))
        throw Error(ErrorKind::InvalidArgument, "slab size mismatch");
    peak_slab_bytes_ = std::max(peak_slab_bytes_, prev_.capacity() +
                                                      labels_.capacity() * sizeof(std::uint32_t) +
                                                      slab.size());
    process_layer(have_prev_ ? std::span<const std::uint8_t>(prev_) : std::span<const std::uint8_t>{},
                  slab);
    prev_.assign(slab.begin(), slab.end());
    have_prev_ = true;
}

std::vector<StreamedSurface> StreamingSurfaceCounter::finish() {
    if (finished_) throw Error(ErrorKind::InvalidArgument, "counter already finished");
    process_layer(have_prev_ ? std::span<const std::uint8_t>(prev_) : std::span<const std::uint8_t>{},
                  {});
    finished_ = true;
    // The top layer is background above, so every fragment is complete.
    std::fill(labels_.begin(), labels_.end(), kNone);
    compact();
    std::sort(done_.begin(), done_.end(),
              [](const auto& a, const auto& b) { return a.min_vertex < b.min_vertex; });
    return std::move(done_);
}

std::vector<StreamedSurface> stream_surfaces(const Volume3D& vol, std::size_t* peak_slab_bytes,
                                             std::size_t* peak_fragments) {
    StreamingSurfaceCounter counter(vol.nx(), vol.ny());
    for (int z = 0; z < vol.nz(); ++z) counter.push_slab(vol.slab(z));
    auto out = counter.finish();
    if (peak_slab_bytes) *peak_slab_bytes = counter.peak_slab_buffer_bytes();
    if (peak_fragments) *peak_fragments = counter.peak_live_fragments();
    return out;
}

} // namespace digitopo
