#pragma once

// Small hand-checkable inputs shared by the tests.

#include "digitopo/grid.hpp"

namespace fixtures {

using digitopo::Image2D;
using digitopo::Volume3D;

inline Image2D matrix7() {
    return Image2D::from_rows({{0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 1, 1, 1, 0, 0},
                               {0, 1, 1, 1, 1, 1, 0, 0},
                               {0, 1, 1, 1, 0, 0, 0, 0},
                               {0, 0, 1, 1, 0, 0, 0, 0},
                               {0, 0, 1, 1, 1, 0, 0, 0},
                               {0, 0, 1, 1, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0}});
}

inline Image2D matrix10() {
    return Image2D::from_rows({{0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 1, 1, 1, 1, 1},
                               {0, 1, 1, 1, 1, 1, 1, 1},
                               {0, 1, 1, 1, 0, 0, 1, 1},
                               {0, 1, 1, 1, 0, 0, 1, 1},
                               {0, 0, 1, 1, 1, 1, 1, 1},
                               {0, 0, 1, 1, 1, 1, 1, 1},
                               {0, 0, 0, 0, 0, 0, 0, 0}});
}

/// Chained diagonal contacts: on the first window every add and every delete
/// leaves a contact in the surrounding 4x4 region, and the rule then clears
/// the chain with three deletes at (3,1), (4,2), (3,3).
inline Image2D chained_contacts() {
    return Image2D::from_rows({{0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 1, 0, 1, 0},
                               {0, 1, 1, 0, 1, 0, 0},
                               {0, 1, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 1, 1, 0},
                               {0, 0, 1, 1, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0}});
}

/// 5x5 ring of width 1 in a 7x7 canvas.
inline Image2D ring5() {
    Image2D img(7, 7);
    for (int i = 1; i <= 5; ++i) {
        img.set(i, 1, true);
        img.set(i, 5, true);
        img.set(1, i, true);
        img.set(5, i, true);
    }
    return img;
}

/// Unpadded 3x3x1 frame: 8 voxels around an empty center.
inline Volume3D frame331() {
    Volume3D vol(3, 3, 1);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x)
            if (x != 1 || y != 1) vol.set(x, y, 0, true);
    return vol;
}

/// Volume of the given extents with the listed voxels set.
inline Volume3D voxels(int nx, int ny, int nz, std::initializer_list<digitopo::Coord3> cells) {
    Volume3D vol(nx, ny, nz);
    for (const auto& c : cells) vol.set(c.x, c.y, c.z, true);
    return vol;
}

/// Solid cube of side s at offset 1 in an (s+2)^3 canvas.
inline Volume3D cube(int s) {
    Volume3D vol(s + 2, s + 2, s + 2);
    for (int z = 1; z <= s; ++z)
        for (int y = 1; y <= s; ++y)
            for (int x = 1; x <= s; ++x) vol.set(x, y, z, true);
    return vol;
}

} // namespace fixtures
