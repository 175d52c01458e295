#include <doctest.h>

#include <algorithm>

#include "digitopo/error.hpp"
#include "digitopo/shapes.hpp"
#include "digitopo/streaming.hpp"
#include "digitopo/topo3d.hpp"
#include "fixtures.hpp"

using namespace digitopo;

namespace {

void check_same_as_in_memory(const Volume3D& vol) {
    const auto streamed = stream_surfaces(vol);
    const auto parts = split_surface_components(to_point_space(vol));
    REQUIRE(streamed.size() == parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        CHECK(streamed[k].min_vertex == parts[k].points.front());
        CHECK(streamed[k].points == parts[k].size());
        CHECK(streamed[k].histogram == classify_surface(parts[k]));
    }
}

} // namespace

TEST_CASE("streamed surfaces equal in-memory surfaces") {
    check_same_as_in_memory(fixtures::cube(3));
    check_same_as_in_memory(gen_shell(5, 1));
    check_same_as_in_memory(gen_frame(3));
    for (std::uint64_t seed = 1; seed <= 25; ++seed) check_same_as_in_memory(gen_salted_volume(seed));
}

TEST_CASE("empty and degenerate volumes") {
    CHECK(stream_surfaces(Volume3D(4, 4, 4)).empty());
    CHECK(stream_surfaces(Volume3D(0, 0, 0)).empty());
    // Object touching the volume border on every side.
    const auto full = Volume3D(2, 2, 2, std::vector<std::uint8_t>(8, 1));
    const auto s = stream_surfaces(full);
    REQUIRE(s.size() == 1);
    CHECK(s[0].points == 26);
}

TEST_CASE("slab buffers stay bounded as depth grows") {
    const int side = 12;
    std::size_t shallow = 0, deep = 0, frag_shallow = 0, frag_deep = 0;
    stream_surfaces(gen_block_3d(side, side, 4), &shallow, &frag_shallow);
    stream_surfaces(gen_block_3d(side, side, 200), &deep, &frag_deep);
    CHECK(shallow == deep);
    CHECK(frag_shallow == frag_deep);
    const std::size_t unit = static_cast<std::size_t>(side + 3) * (side + 3) * sizeof(std::uint32_t);
    CHECK(deep <= StreamingSurfaceCounter::kSlabBuffers * unit);
}

TEST_CASE("counter misuse") {
    StreamingSurfaceCounter c(3, 3);
    std::vector<std::uint8_t> wrong(4, 0);
    CHECK_THROWS_AS(c.push_slab(wrong), Error);
    c.finish();
    CHECK_THROWS_AS(c.finish(), Error);
    std::vector<std::uint8_t> ok(9, 0);
    CHECK_THROWS_AS(c.push_slab(ok), Error);
}

TEST_CASE("counter tracks slabs") {
    StreamingSurfaceCounter c(2, 2);
    const std::vector<std::uint8_t> slab{1, 1, 1, 1};
    c.push_slab(slab);
    c.push_slab(slab);
    CHECK(c.slabs_seen() == 2);
    const auto out = c.finish();
    REQUIRE(out.size() == 1);
    CHECK(out[0].histogram.m3 == 8);
}
