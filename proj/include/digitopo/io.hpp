#pragma once

// PBM (P1/P4) and Vox3 readers and writers.
//
// Vox3 layout: an ASCII header line "vox3 <nx> <ny> <nz>", then nz slabs of
// ny lines with nx characters from {0,1}. Consecutive slabs are separated by
// exactly one blank line and the file ends with a newline. Anything else is a
// parse error.

#include <string>
#include <string_view>
#include <variant>

#include "digitopo/grid.hpp"

namespace digitopo {

enum class PbmVariant { Plain, Raw }; // P1, P4

/// Errors carry ErrorKind::Parse and a "line N:" prefix.
Image2D parse_pbm(std::string_view text);
std::string format_pbm(const Image2D& img, PbmVariant variant = PbmVariant::Plain);

Volume3D parse_vox3(std::string_view text);
std::string format_vox3(const Volume3D& vol);

/// File wrappers; ErrorKind::Io when the file cannot be opened or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

Image2D read_pbm(const std::string& path);
void write_pbm(const std::string& path, const Image2D& img, PbmVariant variant = PbmVariant::Plain);
Volume3D read_vox3(const std::string& path);
void write_vox3(const std::string& path, const Volume3D& vol);

using AnyGrid = std::variant<Image2D, Volume3D>;

/// Dispatches on the magic: "P1"/"P4" -> image, "vox3" -> volume.
AnyGrid parse_any(std::string_view text);
AnyGrid read_any(const std::string& path);

} // namespace digitopo
