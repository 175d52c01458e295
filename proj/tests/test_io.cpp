#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "digitopo/error.hpp"
#include "digitopo/io.hpp"
#include "digitopo/shapes.hpp"
#include "fixtures.hpp"

using namespace digitopo;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

std::string error_text(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("PBM round trips") {
    const Image2D m = fixtures::matrix7();
    CHECK(parse_pbm(format_pbm(m, PbmVariant::Plain)) == m);
    CHECK(parse_pbm(format_pbm(m, PbmVariant::Raw)) == m);
    // Width not a multiple of 8 exercises row padding in P4.
    const Image2D odd = gen_scene_2d(3, 13, 5, 200);
    CHECK(parse_pbm(format_pbm(odd, PbmVariant::Raw)) == odd);
    CHECK(format_pbm(parse_pbm(format_pbm(odd, PbmVariant::Raw)), PbmVariant::Plain) ==
          format_pbm(odd, PbmVariant::Plain));
}

TEST_CASE("PBM comments and free-form whitespace") {
    const auto img = parse_pbm("P1 # magic\n# size follows\n3 2\n1 0 1\n# row\n011\n");
    CHECK(img.width() == 3);
    CHECK(img.height() == 2);
    CHECK(img.at(0, 0));
    CHECK_FALSE(img.at(1, 0));
    CHECK(img.at(2, 1));
}

TEST_CASE("PBM raw bit order is most significant first") {
    std::string text = "P4\n10 1\n";
    text += static_cast<char>(0x81);
    text += static_cast<char>(0x40);
    const auto img = parse_pbm(text);
    CHECK(img.at(0, 0));
    CHECK(img.at(7, 0));
    CHECK(img.at(9, 0));
    CHECK(img.count() == 3);
}

TEST_CASE("PBM errors") {
    CHECK(kind_of([] { parse_pbm("P2\n1 1\n1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_pbm("P1\n2 2\n1 1 1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_pbm("P1\nx 2\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_pbm("P4\n16 2\nab"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_pbm("P1\n1 1\n2\n"); }) == ErrorKind::Parse);
    CHECK(error_text([] { parse_pbm("P1\n2 2\n1 1\n1 1\n\n1\n"); }).starts_with("line 6:"));
    CHECK(error_text([] { parse_pbm("P1\n# c\n2 -2\n"); }).starts_with("line 3:"));
}

TEST_CASE("Vox3 round trips") {
    const Volume3D frame = fixtures::frame331();
    const std::string text = format_vox3(frame);
    CHECK(text == "vox3 3 3 1\n111\n101\n111\n");
    CHECK(parse_vox3(text) == frame);
    const Volume3D empty(2, 3, 2);
    CHECK(parse_vox3(format_vox3(empty)) == empty);
    const Volume3D salted = gen_salted_volume(4);
    CHECK(parse_vox3(format_vox3(salted)) == salted);
    CHECK(format_vox3(Volume3D(2, 1, 2)) == "vox3 2 1 2\n00\n\n00\n");
}

TEST_CASE("Vox3 errors") {
    CHECK(kind_of([] { parse_vox3("vox3 2 2 1\n11\n1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_vox3("vox3 2 1 1\n11"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_vox3("vox3 2 1 2\n11\n11\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_vox3("vox3 2 1 1\n1x\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_vox3("vox3 2 1\n11\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_vox3("vox3 1 1 1\n1\n1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_vox3("vox 1 1 1\n1\n"); }) == ErrorKind::Parse);
    CHECK(error_text([] { parse_vox3("vox3 2 2 2\n11\n11\n\n11\n1\n"); }).starts_with("line 6:"));
    CHECK(error_text([] { parse_vox3("vox3 2 1 2\n11\nxx\n11\n"); }).starts_with("line 3:"));
}

TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string pbm = (dir / "digitopo_io_test.pbm").string();
    const std::string vox = (dir / "digitopo_io_test.vox3").string();
    write_pbm(pbm, fixtures::matrix10(), PbmVariant::Raw);
    CHECK(read_pbm(pbm) == fixtures::matrix10());
    CHECK(std::holds_alternative<Image2D>(read_any(pbm)));
    write_vox3(vox, gen_frame(2));
    CHECK(read_vox3(vox) == gen_frame(2));
    CHECK(std::holds_alternative<Volume3D>(read_any(vox)));
    std::remove(pbm.c_str());
    std::remove(vox.c_str());
    CHECK(kind_of([&] { read_any((dir / "digitopo_missing_file").string()); }) == ErrorKind::Io);
    CHECK(kind_of([] { parse_any("GIF89a"); }) == ErrorKind::Parse);
}

TEST_CASE("shipped sample files") {
    CHECK(read_pbm(DIGITOPO_DATA_DIR "/matrix7.pbm") == fixtures::matrix7());
    CHECK(read_pbm(DIGITOPO_DATA_DIR "/matrix10.pbm") == fixtures::matrix10());
}
