#include <doctest.h>

#include "digitopo/error.hpp"
#include "digitopo/oracle.hpp"
#include "digitopo/shapes.hpp"
#include "digitopo/topo3d.hpp"
#include "fixtures.hpp"

using namespace digitopo;

namespace {

Volume3D cube_minus_antipodes() {
    Volume3D vol(4, 4, 4);
    for (int z = 1; z <= 2; ++z)
        for (int y = 1; y <= 2; ++y)
            for (int x = 1; x <= 2; ++x) vol.set(x, y, z, true);
    vol.set(1, 1, 1, false);
    vol.set(2, 2, 2, false);
    return vol;
}

} // namespace

TEST_CASE("find 3D pathologies") {
    CHECK(find_pathologies_3d(fixtures::voxels(3, 3, 3, {{0, 0, 0}, {1, 1, 1}})).size() == 1);
    const auto ep = find_pathologies_3d(fixtures::voxels(3, 3, 3, {{0, 0, 1}, {1, 1, 1}}));
    REQUIRE(ep.size() == 1);
    CHECK(ep[0].kind == PathologyKind3D::EdgePair);
    const auto cp = find_pathologies_3d(cube_minus_antipodes());
    REQUIRE(cp.size() == 1);
    CHECK(cp[0].kind == PathologyKind3D::ComplementVertexPair);
}

TEST_CASE("repair 3D") {
    SUBCASE("vertex pair loses one voxel") {
        const auto r = repair_3d(fixtures::voxels(4, 4, 4, {{1, 1, 1}, {2, 2, 2}}));
        REQUIRE(r.actions.size() == 1);
        CHECK(r.actions[0].op == RepairOp::Delete);
        CHECK(r.actions[0].reason == RepairReason::VertexContact);
        // Equal face counts and neither licensed: the later voxel goes.
        CHECK(r.actions[0] == RepairAction{2, 2, 2, RepairOp::Delete, RepairReason::VertexContact});
        CHECK(find_pathologies_3d(r.volume).empty());
        CHECK(r.volume.count() == 1);
    }
    SUBCASE("complement pair is filled") {
        const auto r = repair_3d(cube_minus_antipodes());
        REQUIRE(r.actions.size() == 1);
        CHECK(r.actions[0].op == RepairOp::Add);
        CHECK(r.actions[0].reason == RepairReason::ComplementFill);
        CHECK(find_pathologies_3d(r.volume).empty());
        CHECK(r.volume.count() == 7);
    }
    SUBCASE("torus frame is already clean") {
        const auto frame = gen_frame(1);
        const auto r = repair_3d(frame);
        CHECK(r.actions.empty());
        CHECK(r.volume == frame);
    }
    SUBCASE("edge pair keeps the better-connected voxel") {
        // (1,1,1) has a face neighbor, (2,2,1) has none.
        const auto r = repair_3d(fixtures::voxels(5, 5, 3, {{1, 1, 1}, {0, 1, 1}, {2, 2, 1}}));
        REQUIRE(r.actions.size() == 1);
        CHECK(r.actions[0] == RepairAction{2, 2, 1, RepairOp::Delete, RepairReason::EdgeContact});
    }
    SUBCASE("salted volumes end clean and repair is idempotent") {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            const auto once = repair_3d(gen_salted_volume(seed));
            CHECK(find_pathologies_3d(once.volume).empty());
            CHECK(repair_3d(once.volume).actions.empty());
        }
    }
}

TEST_CASE("deletion keeps boundary") {
    // Interior voxel: no background neighbor.
    const auto c = fixtures::cube(3);
    CHECK_FALSE(deletion_keeps_boundary(c, {2, 2, 2}));
    // Corner of the cube: its face neighbor (2,1,1) still touches background
    // through an edge.
    CHECK(deletion_keeps_boundary(c, {1, 1, 1}));
    // Background voxel.
    CHECK_FALSE(deletion_keeps_boundary(c, {0, 0, 0}));
}

TEST_CASE("boundary voxels") {
    CHECK(boundary_voxels(fixtures::cube(2)).size() == 8);
    CHECK(boundary_voxels(fixtures::cube(4)).size() == 56);
    CHECK(boundary_voxels(fixtures::frame331()).size() == 8);
}

TEST_CASE("point space") {
    CHECK(to_point_space(fixtures::voxels(1, 1, 1, {{0, 0, 0}})).size() == 8);
    CHECK(to_point_space(fixtures::cube(2)).size() == 26);
    CHECK(to_point_space(fixtures::frame331()).size() == 32);
}

TEST_CASE("surface neighbors") {
    const auto one = fixtures::voxels(1, 1, 1, {{0, 0, 0}});
    const auto s1 = to_point_space(one);
    CHECK(surface_neighbors({0, 0, 0}, s1) == 3);
    const auto cube = fixtures::cube(2);
    const auto s2 = to_point_space(cube);
    // Center of the x = 1 face and midpoint of an outer edge.
    CHECK(surface_neighbors({1, 2, 2}, s2) == 4);
    CHECK(surface_neighbors({1, 1, 2}, s2) == 4);
    CHECK_THROWS_AS(surface_neighbors({2, 2, 2}, s2), Error);
    CHECK_THROWS_AS(surface_neighbors({-1, 0, 0}, s2), Error);
}

TEST_CASE("split surface components") {
    CHECK(split_surface_components(to_point_space(fixtures::cube(3))).size() == 1);
    const auto shell = gen_shell(3, 1);
    const auto parts = split_surface_components(to_point_space(shell));
    REQUIRE(parts.size() == 2);
    CHECK(parts[1].size() == 8);
    CHECK(parts[0].points.front() < parts[1].points.front());

    Volume3D two(7, 3, 3);
    two.set(1, 1, 1, true);
    two.set(5, 1, 1, true);
    CHECK(split_surface_components(to_point_space(two)).size() == 2);
}

TEST_CASE("classify surface") {
    const auto one = fixtures::voxels(1, 1, 1, {{0, 0, 0}});
    const auto h1 = classify_surface(to_point_space(one));
    CHECK(h1.m3 == 8);
    CHECK(h1.total() == 8);
    const auto cube = fixtures::cube(2);
    const auto h2 = classify_surface(to_point_space(cube));
    CHECK(h2.m3 == 8);
    CHECK(h2.m4 == 18);

    Volume3D seven = fixtures::cube(2);
    seven.set(1, 1, 1, false);
    const auto h7 = classify_surface(to_point_space(seven));
    CHECK(h7.m3 == 8 + h7.m5 + 2 * h7.m6);
}

TEST_CASE("genus") {
    SurfaceHistogram sphere;
    sphere.m3 = 8;
    CHECK(genus(sphere) == 0);
    CHECK(genus(classify_surface(to_point_space(fixtures::frame331()))) == 1);
    CHECK(genus(classify_surface(to_point_space(gen_frame(2)))) == 2);

    SurfaceHistogram odd;
    odd.m3 = 9;
    CHECK_THROWS_AS(genus(odd), Error);
    SurfaceHistogram irregular;
    irregular.m3 = 8;
    irregular.irregular = 1;
    CHECK_THROWS_AS(genus(irregular), Error);
}

TEST_CASE("homology") {
    CHECK(homology(fixtures::cube(2)).betti == std::array<long, 4>{1, 0, 0, 0});
    CHECK(homology(fixtures::frame331()).betti == std::array<long, 4>{1, 1, 0, 0});
    CHECK(homology(gen_shell(3, 1)).betti == std::array<long, 4>{1, 0, 1, 0});
    CHECK(homology(gen_frame(2)).betti == std::array<long, 4>{1, 2, 0, 0});
    CHECK_THROWS_AS(homology(Volume3D(2, 2, 2)), Error);
}

TEST_CASE("homology falls back when the histogram is not a closed surface") {
    // Two cubes sharing one vertex: 14 corners and one M6 point, so the
    // genus numerator is not a multiple of 8.
    Volume3D vol(6, 6, 6);
    for (int z = 1; z <= 2; ++z)
        for (int y = 1; y <= 2; ++y)
            for (int x = 1; x <= 2; ++x) {
                vol.set(x, y, z, true);
                vol.set(x + 2, y + 2, z + 2, true);
            }
    const auto rep = homology(vol, true);
    REQUIRE(rep.boundary_surfaces.size() == 2);
    CHECK(rep.boundary_surfaces[0].method == GenusMethod::OracleFallback);
    CHECK(rep.boundary_surfaces[0].genus == 0);
    CHECK_THROWS_AS(homology(vol, false), Error);
}

TEST_CASE("streaming homology matches in-memory homology") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto frame = gen_random_frame(static_cast<int>(seed % 5), seed);
        const auto a = homology(frame), b = homology_streaming(frame);
        CHECK(a.betti == b.betti);
        REQUIRE(a.boundary_surfaces.size() == b.boundary_surfaces.size());
        for (std::size_t k = 0; k < a.boundary_surfaces.size(); ++k) {
            CHECK(a.boundary_surfaces[k].histogram == b.boundary_surfaces[k].histogram);
            CHECK(a.boundary_surfaces[k].min_vertex == b.boundary_surfaces[k].min_vertex);
            CHECK(a.boundary_surfaces[k].points == b.boundary_surfaces[k].points);
        }
    }
}

TEST_CASE("analyze volume") {
    SUBCASE("two separate objects") {
        Volume3D vol(12, 7, 5);
        const auto frame = gen_frame(1);
        for (int z = 0; z < frame.nz(); ++z)
            for (int y = 0; y < frame.ny(); ++y)
                for (int x = 0; x < frame.nx(); ++x)
                    if (frame.at(x, y, z)) vol.set(x, y, z, true);
        vol.set(9, 3, 2, true);
        const auto res = analyze_volume(vol);
        REQUIRE(res.reports.size() == 2);
        CHECK(res.reports[0].betti == std::array<long, 4>{1, 1, 0, 0});
        CHECK(res.reports[1].betti == std::array<long, 4>{1, 0, 0, 0});
        CHECK(res.reports[1].voxel_count == 1);
    }
    SUBCASE("repair splitting a component yields one report per piece") {
        const auto res = analyze_volume(fixtures::voxels(5, 5, 5, {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}));
        CHECK(res.actions.size() >= 1);
        for (const auto& r : res.reports) CHECK(r.source_component == 1);
    }
    SUBCASE("streaming and in-memory reports agree") {
        const auto vol = gen_salted_volume(5);
        const auto a = analyze_volume(vol, {true, true, false});
        const auto b = analyze_volume(vol, {true, true, true});
        REQUIRE(a.reports.size() == b.reports.size());
        for (std::size_t k = 0; k < a.reports.size(); ++k) CHECK(a.reports[k].betti == b.reports[k].betti);
    }
}
