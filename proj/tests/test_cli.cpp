#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "digitopo/io.hpp"
#include "digitopo/shapes.hpp"

using namespace digitopo;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("digitopo_cli_" + name)).string();
}

} // namespace

TEST_CASE("holes on the worked matrices") {
    auto r = run({"holes", DIGITOPO_DATA_DIR "/matrix7.pbm", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["total_holes"] == 0);
    CHECK(j["components"][0]["histogram"]["cp2"] == 8);

    r = run({"--json", "holes", DIGITOPO_DATA_DIR "/matrix10.pbm"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["total_holes"] == 1);

    r = run({"holes", DIGITOPO_DATA_DIR "/matrix10.pbm"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total holes: 1") != std::string::npos);
    CHECK(r.out.find("generated: ") != std::string::npos);
}

TEST_CASE("json output is byte-stable and has no timestamp") {
    const auto a = run({"holes", DIGITOPO_DATA_DIR "/matrix7.pbm", "--json"});
    const auto b = run({"holes", DIGITOPO_DATA_DIR "/matrix7.pbm", "--json"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("generated") == std::string::npos);
    CHECK(a.out.find("timestamp") == std::string::npos);
}

TEST_CASE("gen then genus and homology") {
    const auto frame = temp_path("frame1.vox3");
    REQUIRE(run({"gen", "frame", "--holes", "1", "-o", frame}).code == 0);
    auto r = run({"genus", frame, "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["components"][0]["boundary_surfaces"][0]["genus"] == 1);
    CHECK(j["betti"] == nlohmann::json::array({1, 1, 0, 0}));

    const auto shell = temp_path("shell.vox3");
    REQUIRE(run({"gen", "shell", "--outer", "5", "--cavity", "1", "-o", shell}).code == 0);
    r = run({"homology", shell});
    CHECK(r.code == 0);
    CHECK(r.out.find("betti: (1,0,1,0)") != std::string::npos);

    const auto streamed = run({"homology", shell, "--json", "--streaming"});
    const auto plain = run({"homology", shell, "--json"});
    auto js = nlohmann::json::parse(streamed.out), jp = nlohmann::json::parse(plain.out);
    js.erase("options");
    jp.erase("options");
    CHECK(js == jp);
    std::filesystem::remove(frame);
    std::filesystem::remove(shell);
}

TEST_CASE("gen writes to stdout and reproduces with a seed") {
    const auto a = run({"gen", "polyomino", "--area", "100", "--seed", "3"});
    const auto b = run({"gen", "polyomino", "--area", "100", "--seed", "3"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_pbm(a.out) == gen_fat_polyomino_2d(3, 100));
    CHECK(run({"gen", "teapot"}).code == cli::kUsage);
}

TEST_CASE("components") {
    auto r = run({"components", DIGITOPO_DATA_DIR "/matrix7.pbm", "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["component_count"] == 1);
    const auto diag = temp_path("diag.pbm");
    write_file(diag, "P1\n2 2\n1 0\n0 1\n");
    CHECK(nlohmann::json::parse(run({"components", diag, "--json"}).out)["component_count"] == 2);
    CHECK(nlohmann::json::parse(run({"components", diag, "--adjacency", "8", "--json"}).out)["component_count"] == 1);
    CHECK(run({"components", diag, "--adjacency", "26"}).code == cli::kUsage);
    std::filesystem::remove(diag);
}

TEST_CASE("repair writes a clean file") {
    const auto in = temp_path("salted.vox3");
    const auto out = temp_path("salted_fixed.vox3");
    write_vox3(in, gen_salted_volume(2));
    auto r = run({"repair", in, "-o", out, "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["remaining_pathologies"] == 0);
    r = run({"repair", out, "--json"});
    CHECK(nlohmann::json::parse(r.out)["repair_actions"].empty());
    std::filesystem::remove(in);
    std::filesystem::remove(out);
}

TEST_CASE("precondition failure without fallback exits 2") {
    const auto ring = temp_path("ring.pbm");
    write_file(ring, "P1\n5 5\n00000\n01110\n01010\n01110\n00000\n");
    // The one-pixel hole is a speckle, so use a 5x5 width-1 ring.
    write_file(ring, "P1\n7 7\n0000000\n0111110\n0100010\n0100010\n0100010\n0111110\n0000000\n");
    CHECK(run({"holes", ring}).code == 0);
    CHECK(run({"holes", ring, "--no-fallback-oracle"}).code == cli::kPrecondition);
    auto r = run({"holes", ring, "--json"});
    CHECK(nlohmann::json::parse(r.out)["components"][0]["method"] == "oracle_fallback");
    std::filesystem::remove(ring);
}

TEST_CASE("validate") {
    CHECK(run({"validate", "--count", "50"}).code == 0);
    CHECK(run({"validate", "--corpus", "salted", "--count", "10", "--json"}).code == 0);
    CHECK(run({"validate", DIGITOPO_DATA_DIR "/matrix10.pbm"}).code == 0);
    CHECK(run({"validate", "--corpus", "nonsense", "--count", "1"}).code == cli::kUsage);
}

TEST_CASE("bench rows") {
    const auto r = run({"bench", "--sizes", "4096", "32768", "--repeat", "1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 2);
    for (const auto& row : j["rows"]) {
        CHECK(row["genus"] == row["expected_genus"]);
        CHECK(row["time_us"].is_number_integer());
        CHECK(row["peak_rss_kib"].get<long>() > 0);
    }
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"holes", "--bogus-flag", "x.pbm"}).code == cli::kUsage);
    const auto r = run({"holes"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("input errors") {
    CHECK(run({"holes", temp_path("does_not_exist.pbm")}).code == cli::kIoError);
    const auto bad = temp_path("bad.pbm");
    write_file(bad, "P1\n3 3\n1 1\n");
    CHECK(run({"holes", bad}).code == cli::kDataError);
    CHECK(run({"genus", DIGITOPO_DATA_DIR "/matrix7.pbm"}).code == cli::kDataError);
    std::filesystem::remove(bad);
}
