#include <doctest.h>

#include "digitopo/error.hpp"
#include "digitopo/oracle.hpp"
#include "digitopo/shapes.hpp"
#include "fixtures.hpp"

using namespace digitopo;

TEST_CASE("flood fill holes") {
    CHECK(holes_by_floodfill(fixtures::matrix7()) == 0);
    CHECK(holes_by_floodfill(fixtures::matrix10()) == 1);
    CHECK(holes_by_floodfill(fixtures::ring5()) == 1);
    CHECK(holes_by_floodfill(Image2D(3, 3)) == 0);
}

TEST_CASE("euler 2D") {
    const auto s = euler_2d(gen_block_2d(3, 3));
    CHECK(s.v == 16);
    CHECK(s.e == 24);
    CHECK(s.f == 9);
    CHECK(s.chi == 1);
    Image2D px(3, 3);
    px.set(1, 1, true);
    const auto p = euler_2d(px);
    CHECK(p.v == 4);
    CHECK(p.e == 4);
    CHECK(p.f == 1);
    CHECK(p.chi == 1);
    CHECK(euler_2d(fixtures::matrix10()).chi == 0);
    CHECK(euler_2d(fixtures::matrix7()).chi == 1);
}

TEST_CASE("euler surface 3D") {
    const auto one = euler_surface_3d(fixtures::voxels(1, 1, 1, {{0, 0, 0}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].f == 6);
    CHECK(one[0].e == 12);
    CHECK(one[0].v == 8);
    CHECK(one[0].chi == 2);
    CHECK(one[0].genus() == 0);

    const auto frame = euler_surface_3d(fixtures::frame331());
    REQUIRE(frame.size() == 1);
    CHECK(frame[0].f == 32);
    CHECK(frame[0].e == 64);
    CHECK(frame[0].v == 32);
    CHECK(frame[0].chi == 0);
    CHECK(frame[0].genus() == 1);

    const auto shell = euler_surface_3d(gen_shell(3, 1));
    REQUIRE(shell.size() == 2);
    CHECK(shell[0].chi == 2);
    CHECK(shell[1].chi == 2);
    CHECK(shell[0].min_vertex < shell[1].min_vertex);

    CHECK(euler_surface_3d(gen_frame(2))[0].genus() == 2);
    CHECK(euler_surface_3d(Volume3D(3, 3, 3)).empty());
}

TEST_CASE("curvature audit") {
    SurfaceHistogram cube;
    cube.m3 = 8;
    CHECK(curvature_audit(cube, 0));
    SurfaceHistogram torus;
    torus.m3 = 8;
    torus.m4 = 16;
    torus.m5 = 8;
    CHECK(curvature_audit(torus, 1));
    SurfaceHistogram bad;
    bad.m3 = 9;
    CHECK_FALSE(curvature_audit(bad, 0));
    SurfaceHistogram irregular = cube;
    irregular.irregular = 1;
    CHECK_FALSE(curvature_audit(irregular, 0));
}
