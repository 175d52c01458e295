#include <doctest.h>

#include "digitopo/report.hpp"
#include "digitopo/shapes.hpp"
#include "fixtures.hpp"

using namespace digitopo;

namespace {

// Every number in the report is an integer.
bool all_integers(const Json& j) {
    if (j.is_number_float()) return false;
    if (j.is_structured())
        for (const auto& v : j)
            if (!all_integers(v)) return false;
    return true;
}

} // namespace

TEST_CASE("fnv1a reference vectors") {
    CHECK(fnv1a64({}) == 0xcbf29ce484222325ull);
    const std::uint8_t a[] = {'a'};
    CHECK(fnv1a64(a) == 0xaf63dc4c8601ec8cull);
    const std::uint8_t foobar[] = {'f', 'o', 'o', 'b', 'a', 'r'};
    CHECK(fnv1a64(foobar) == 0x85944171f73967e8ull);
}

TEST_CASE("digests depend on extents and cells") {
    const auto d = grid_digest(fixtures::matrix7());
    CHECK(d.starts_with("fnv1a64:"));
    CHECK(d.size() == 8 + 16);
    CHECK(d == grid_digest(fixtures::matrix7()));
    CHECK(d != grid_digest(fixtures::matrix10()));
    CHECK(grid_digest(Image2D(2, 3)) != grid_digest(Image2D(3, 2)));
    CHECK(grid_digest(Volume3D(1, 1, 6)) != grid_digest(Volume3D(6, 1, 1)));
}

TEST_CASE("holes report") {
    const auto img = fixtures::matrix10();
    const auto j = holes_report("holes", img, {}, holes_pipeline(img));
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["input"]["digest"] == grid_digest(img));
    CHECK(j["total_holes"] == 1);
    REQUIRE(j["components"].size() == 1);
    CHECK(j["components"][0]["method"] == "formula");
    CHECK(j["components"][0]["histogram"]["cp4"] == 6);
    CHECK(j["repair_actions"].is_array());
    CHECK(all_integers(j));
    CHECK_FALSE(j.contains("timestamp"));
}

TEST_CASE("volume report") {
    const auto vol = gen_shell(5, 1);
    const auto j = volume_report("homology", vol, {}, analyze_volume(vol));
    CHECK(j["betti"] == Json::array({1, 0, 1, 0}));
    CHECK(j["components"][0]["boundary_surfaces"].size() == 2);
    CHECK(j["components"][0]["boundary_surfaces"][0]["method"] == "formula");
    CHECK(all_integers(j));
}

TEST_CASE("reports are byte-stable") {
    const auto vol = gen_salted_volume(9);
    const auto a = dump(volume_report("genus", vol, {}, analyze_volume(vol)));
    const auto b = dump(volume_report("genus", vol, {}, analyze_volume(vol)));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}
