#include <doctest.h>

#include "digitopo/error.hpp"
#include "digitopo/kernels.hpp"
#include "digitopo/oracle.hpp"
#include "digitopo/shapes.hpp"
#include "digitopo/topo2d.hpp"
#include "digitopo/topo3d.hpp"
#include "fixtures.hpp"

using namespace digitopo;

TEST_CASE("seeded stream is the standard 64-bit Mersenne Twister") {
    // The 10000th output of a default-seeded mt19937_64 is fixed by the
    // C++ standard.
    SeededStream s(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = s.next();
    CHECK(v == 9981545732273789042ull);
    SeededStream a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.between(-3, 9) == b.between(-3, 9));
    SeededStream c(1);
    for (int i = 0; i < 1000; ++i) {
        const int x = c.between(2, 5);
        CHECK(x >= 2);
        CHECK(x <= 5);
    }
}

TEST_CASE("blocks") {
    const auto b = gen_block_2d(2, 2);
    CHECK(b.width() == 4);
    CHECK(b.count() == 4);
    CHECK(classify_boundary_2d(b).cp2 == 4);
    CHECK(serial::surface_histogram(gen_block_3d(1, 1, 1)).m3 == 8);
    CHECK(boundary_voxels(gen_block_3d(4, 4, 4)).size() == 56);
    CHECK_THROWS_AS(gen_block_2d(0, 3), Error);
}

TEST_CASE("frames have the requested genus") {
    const auto f1 = gen_frame(1);
    CHECK(f1.count() == 8);
    CHECK(euler_surface_3d(f1)[0].genus() == 1);
    CHECK(euler_surface_3d(gen_frame(2))[0].genus() == 2);
    const auto f0 = gen_frame(0);
    CHECK(f0.count() == 9);
    CHECK(euler_surface_3d(f0)[0].genus() == 0);
    for (int k = 0; k <= 6; ++k) {
        const auto f = gen_frame(FrameParams{k, 2, 3, 2});
        CHECK(label_components_3d(f, Adjacency::Direct3D).count == 1);
        const auto s = euler_surface_3d(f);
        REQUIRE(s.size() == 1);
        CHECK(s[0].genus() == k);
    }
    CHECK_THROWS_AS(gen_frame(FrameParams{1, 0, 1, 1}), Error);
}

TEST_CASE("random frames have the requested genus") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int k = static_cast<int>(seed % 8);
        const auto f = gen_random_frame(k, seed);
        CHECK(find_pathologies_3d(f).empty());
        const auto s = euler_surface_3d(f);
        REQUIRE(s.size() == 1);
        CHECK(s[0].genus() == k);
        CHECK(gen_random_frame(k, seed) == f);
    }
}

TEST_CASE("shells") {
    CHECK(euler_surface_3d(gen_shell(3, 1)).size() == 2);
    CHECK(euler_surface_3d(gen_shell(5, 1)).size() == 2);
    CHECK(euler_surface_3d(gen_shell(4, 0)).size() == 1);
    CHECK_THROWS_AS(gen_shell(3, 2), Error);
    CHECK_THROWS_AS(gen_shell(2, 1), Error);
}

TEST_CASE("fat polyominoes") {
    CHECK(gen_fat_polyomino_2d(1, 200) == gen_fat_polyomino_2d(1, 200));
    CHECK_FALSE(gen_fat_polyomino_2d(1, 200) == gen_fat_polyomino_2d(2, 200));
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto img = gen_fat_polyomino_2d(seed, 16 + static_cast<int>(seed * 37));
        CHECK(label_components_2d(img, Adjacency::Direct2D).count == 1);
        CHECK(find_pathologies_2d(img).empty());
        const auto h = classify_boundary_2d(img);
        CHECK(check_preconditions_2d(img, h).ok);
        CHECK(h.cp2 == h.cp4 + 4);
        CHECK(holes_by_floodfill(img) == 0);
    }
    CHECK_THROWS_AS(gen_fat_polyomino_2d(1, 10, 1), Error);
}

TEST_CASE("fat polyomino area tracks the target") {
    const auto img = gen_fat_polyomino_2d(9, 400);
    CHECK(img.count() == 400);
}

TEST_CASE("holed polyominoes") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto img = gen_holed_polyomino_2d(seed, 600, 3);
        const long holes = holes_by_floodfill(img);
        CHECK(holes >= 0);
        CHECK(holes <= 3);
        const auto r = hole_count(img, false);
        CHECK(r.holes == holes);
    }
}

TEST_CASE("scenes and noise are reproducible") {
    CHECK(gen_scene_2d(4) == gen_scene_2d(4));
    CHECK(gen_noise_2d(4, 20, 20, 100) == gen_noise_2d(4, 20, 20, 100));
    const auto n = gen_noise_2d(4, 100, 100, 100);
    CHECK(n.count() > 700);
    CHECK(n.count() < 1300);
}

TEST_CASE("fat blobs are balls") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto blob = gen_fat_blob_3d(seed, 100 + static_cast<int>(seed * 50));
        CHECK(find_pathologies_3d(blob).empty());
        CHECK(label_components_3d(blob, Adjacency::Direct3D).count == 1);
        const auto s = euler_surface_3d(blob);
        REQUIRE(s.size() == 1);
        CHECK(s[0].genus() == 0);
    }
    CHECK(gen_fat_blob_3d(3, 300) == gen_fat_blob_3d(3, 300));
}

TEST_CASE("sponge genus") {
    CHECK(sponge_tunnels(5) == 0);
    CHECK(sponge_tunnels(6) == 1);
    CHECK(sponge_tunnels(14) == 9);
    const auto s = gen_sponge_3d(14);
    CHECK(find_pathologies_3d(s).empty());
    const auto e = euler_surface_3d(s);
    REQUIRE(e.size() == 1);
    CHECK(e[0].genus() == 9);
}

TEST_CASE("extrude") {
    const auto v10 = extrude(fixtures::matrix10());
    CHECK(v10.nz() == 2);
    CHECK(genus(classify_surface(to_point_space(v10))) == 1);
    CHECK(genus(classify_surface(to_point_space(extrude(fixtures::matrix7())))) == 0);
    CHECK(extrude(Image2D(3, 3)).count() == 0);
    CHECK(extrude(Image2D(0, 0)).size() == 0);
}
