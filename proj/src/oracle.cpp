#include "digitopo/oracle.hpp"

#include <array>
#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "digitopo/error.hpp"

namespace digitopo {

long holes_by_floodfill(const Image2D& component) {
    const Labeling bg = label_background_2d(component, Adjacency::Direct2D);
    return static_cast<long>(bg.count) - 1;
}

CellComplexSummary euler_2d(const Image2D& img) {
    CellComplexSummary s;
    const int w = img.width(), h = img.height();
    s.f = static_cast<std::int64_t>(img.count());
    // Corner (i,j) touches pixels (i-1..i, j-1..j).
    for (int j = 0; j <= h; ++j)
        for (int i = 0; i <= w; ++i)
            if (img.at(i - 1, j - 1) || img.at(i, j - 1) || img.at(i - 1, j) || img.at(i, j)) ++s.v;
    // Horizontal edge from corner (i,j) to (i+1,j): pixels (i,j-1), (i,j).
    for (int j = 0; j <= h; ++j)
        for (int i = 0; i < w; ++i)
            if (img.at(i, j - 1) || img.at(i, j)) ++s.e;
    // Vertical edge from (i,j) to (i,j+1): pixels (i-1,j), (i,j).
    for (int j = 0; j < h; ++j)
        for (int i = 0; i <= w; ++i)
            if (img.at(i - 1, j) || img.at(i, j)) ++s.e;
    s.chi = s.v - s.e + s.f;
    return s;
}

namespace {

struct DisjointSet {
    std::vector<std::uint32_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// A boundary face: the unit square with normal `axis` at grid position
// (x,y,z) = its minimal corner.
struct Face {
    int x, y, z, axis;
};

} // namespace

std::vector<CellComplexSummary> euler_surface_3d(const Volume3D& vol) {
    const std::int64_t vx = vol.nx() + 1, vy = vol.ny() + 1;
    auto vertex_id = [&](int i, int j, int k) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<std::int64_t>(k) * vy + j) * vx + i);
    };

    // Enumerate faces between differing voxels across each axis, including
    // the faces against the implicit outside.
    std::vector<Face> faces;
    for (int axis = 0; axis < 3; ++axis)
        for (int z = 0; z <= vol.nz(); ++z)
            for (int y = 0; y <= vol.ny(); ++y)
                for (int x = 0; x <= vol.nx(); ++x) {
                    const int d[3] = {axis == 0, axis == 1, axis == 2};
                    // Face at plane coordinate along axis between voxel (p - d) and p.
                    if ((axis != 0 && x == vol.nx()) || (axis != 1 && y == vol.ny()) ||
                        (axis != 2 && z == vol.nz()))
                        continue;
                    if (vol.at(x - d[0], y - d[1], z - d[2]) != vol.at(x, y, z))
                        faces.push_back({x, y, z, axis});
                }

    // Corners of a face in order, and its 4 edges as (corner a, corner b).
    auto corners = [&](const Face& f) {
        const int ua = f.axis == 0 ? 1 : 0;
        const int va = f.axis == 2 ? 1 : 2;
        std::array<std::array<int, 3>, 4> c{};
        for (int k = 0; k < 4; ++k) {
            std::array<int, 3> p = {f.x, f.y, f.z};
            p[ua] += k & 1;
            p[va] += (k >> 1) & 1;
            c[k] = p;
        }
        return c;
    };
    auto edge_key = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        const auto ia = vertex_id(a[0], a[1], a[2]);
        const auto ib = vertex_id(b[0], b[1], b[2]);
        return std::min(ia, ib) * 3 + (a[0] != b[0] ? 0 : a[1] != b[1] ? 1 : 2);
    };
    static constexpr int kEdges[4][2] = {{0, 1}, {2, 3}, {0, 2}, {1, 3}};

    DisjointSet ds(faces.size());
    std::unordered_map<std::uint64_t, std::uint32_t> first_face;
    first_face.reserve(faces.size() * 2);
    for (std::uint32_t fi = 0; fi < faces.size(); ++fi) {
        const auto c = corners(faces[fi]);
        for (const auto& e : kEdges) {
            auto [it, inserted] = first_face.try_emplace(edge_key(c[e[0]], c[e[1]]), fi);
            if (!inserted) ds.unite(fi, it->second);
        }
    }

    // Per-component distinct vertices / edges by sort + unique.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> verts, edges;
    std::unordered_map<std::uint32_t, std::size_t> slot;
    std::vector<CellComplexSummary> out;
    for (std::uint32_t fi = 0; fi < faces.size(); ++fi) {
        const auto root = ds.find(fi);
        auto [it, inserted] = slot.try_emplace(root, out.size());
        if (inserted) {
            out.push_back({});
            out.back().min_vertex = ~std::uint64_t{0};
        }
        auto& s = out[it->second];
        ++s.f;
        const auto c = corners(faces[fi]);
        for (const auto& p : c) {
            const auto id = vertex_id(p[0], p[1], p[2]);
            verts.emplace_back(root, id);
            s.min_vertex = std::min(s.min_vertex, id);
        }
        for (const auto& e : kEdges) edges.emplace_back(root, edge_key(c[e[0]], c[e[1]]));
    }
    for (auto* list : {&verts, &edges}) {
        std::sort(list->begin(), list->end());
        list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    for (const auto& [root, id] : verts) ++out[slot[root]].v;
    for (const auto& [root, id] : edges) ++out[slot[root]].e;

    for (auto& s : out) {
        s.chi = s.v - s.e + s.f;
        if (s.chi % 2 != 0)
            throw Error(ErrorKind::NonManifold, "non-orientable or non-manifold boundary");
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.min_vertex < b.min_vertex; });
    return out;
}

bool curvature_audit(const SurfaceHistogram& h, std::int64_t genus) {
    const auto total = 2 * static_cast<std::int64_t>(h.m3) - 2 * static_cast<std::int64_t>(h.m5) -
                       4 * static_cast<std::int64_t>(h.m6);
    return h.irregular == 0 && total == 8 * (2 - 2 * genus);
}

} // namespace digitopo
