#include "digitopo/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "digitopo/error.hpp"

namespace digitopo {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

// Cursor over PBM text that skips whitespace and '#' comments and tracks
// the current line.
class PbmCursor {
public:
    explicit PbmCursor(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view token() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '#')
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    int positive_int(const char* what) {
        const auto t = token();
        int v = 0;
        const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || p != t.data() + t.size() || v < 0)
            parse_error(line_, std::string("bad ") + what);
        return v;
    }

    // P1 body digit; whitespace and comments may separate digits.
    bool digit() {
        skip_space();
        if (pos_ >= s_.size()) parse_error(line_, "truncated body");
        const char c = s_[pos_++];
        if (c != '0' && c != '1') parse_error(line_, std::string("unexpected character '") + c + "'");
        return c == '1';
    }

    // Exactly one whitespace byte separates the P4 header from the raster.
    void single_space() {
        if (pos_ >= s_.size() || !std::isspace(static_cast<unsigned char>(s_[pos_])))
            parse_error(line_, "missing separator before raster");
        if (s_[pos_] == '\n') ++line_;
        ++pos_;
    }

    std::string_view rest() const { return s_.substr(pos_); }
    int line() const { return line_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

} // namespace

Image2D parse_pbm(std::string_view text) {
    PbmCursor cur(text);
    const auto magic = cur.token();
    if (magic != "P1" && magic != "P4") parse_error(cur.line(), "bad magic, expected P1 or P4");
    const int w = cur.positive_int("width");
    const int h = cur.positive_int("height");
    Image2D img(w, h);
    if (magic == "P1") {
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) img.set(x, y, cur.digit());
        cur.skip_space();
        if (!cur.rest().empty()) parse_error(cur.line(), "trailing data after raster");
        return img;
    }
    cur.single_space();
    const auto raster = cur.rest();
    const std::size_t stride = (static_cast<std::size_t>(w) + 7) / 8;
    if (raster.size() < stride * static_cast<std::size_t>(h)) parse_error(cur.line(), "truncated body");
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const auto byte = static_cast<unsigned char>(raster[y * stride + x / 8]);
            img.set(x, y, (byte >> (7 - x % 8)) & 1);
        }
    return img;
}

std::string format_pbm(const Image2D& img, PbmVariant variant) {
    const int w = img.width(), h = img.height();
    std::string out = (variant == PbmVariant::Plain ? "P1\n" : "P4\n") + std::to_string(w) + " " +
                      std::to_string(h) + "\n";
    if (variant == PbmVariant::Plain) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) out += img.at(x, y) ? '1' : '0';
            out += '\n';
        }
        return out;
    }
    const std::size_t stride = (static_cast<std::size_t>(w) + 7) / 8;
    for (int y = 0; y < h; ++y) {
        std::string row(stride, '\0');
        for (int x = 0; x < w; ++x)
            if (img.at(x, y)) row[x / 8] = static_cast<char>(row[x / 8] | (0x80 >> (x % 8)));
        out += row;
    }
    return out;
}

Volume3D parse_vox3(std::string_view text) {
    int line = 1;
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& out) {
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) parse_error(line, "missing trailing newline");
            parse_error(line, "truncated body");
        }
        out = text.substr(pos, nl - pos);
        pos = nl + 1;
    };

    std::string_view header;
    next_line(header);
    int dims[3] = {0, 0, 0};
    {
        std::string h(header);
        std::istringstream in(h);
        std::string magic, extra;
        if (!(in >> magic) || magic != "vox3") parse_error(line, "bad magic, expected vox3");
        for (int& d : dims) {
            std::string tok;
            if (!(in >> tok)) parse_error(line, "missing dimension");
            const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
            if (ec != std::errc() || p != tok.data() + tok.size() || d < 0)
                parse_error(line, "bad dimension '" + tok + "'");
        }
        if (in >> extra) parse_error(line, "unexpected header field '" + extra + "'");
    }
    const int nx = dims[0], ny = dims[1], nz = dims[2];
    Volume3D vol(nx, ny, nz);
    for (int z = 0; z < nz; ++z) {
        if (z > 0) {
            ++line;
            std::string_view blank;
            next_line(blank);
            if (!blank.empty()) parse_error(line, "expected blank line between slabs");
        }
        for (int y = 0; y < ny; ++y) {
            ++line;
            std::string_view row;
            next_line(row);
            if (row.size() != static_cast<std::size_t>(nx))
                parse_error(line, "row has " + std::to_string(row.size()) + " cells, expected " +
                                      std::to_string(nx));
            for (int x = 0; x < nx; ++x) {
                const char c = row[x];
                if (c != '0' && c != '1') parse_error(line, std::string("unexpected character '") + c + "'");
                vol.set(x, y, z, c == '1');
            }
        }
    }
    if (pos != text.size()) parse_error(line + 1, "trailing data after last slab");
    return vol;
}

std::string format_vox3(const Volume3D& vol) {
    std::string out = "vox3 " + std::to_string(vol.nx()) + " " + std::to_string(vol.ny()) + " " +
                      std::to_string(vol.nz()) + "\n";
    for (int z = 0; z < vol.nz(); ++z) {
        if (z > 0) out += '\n';
        for (int y = 0; y < vol.ny(); ++y) {
            for (int x = 0; x < vol.nx(); ++x) out += vol.at(x, y, z) ? '1' : '0';
            out += '\n';
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

Image2D read_pbm(const std::string& path) { return parse_pbm(read_file(path)); }
void write_pbm(const std::string& path, const Image2D& img, PbmVariant variant) {
    write_file(path, format_pbm(img, variant));
}
Volume3D read_vox3(const std::string& path) { return parse_vox3(read_file(path)); }
void write_vox3(const std::string& path, const Volume3D& vol) { write_file(path, format_vox3(vol)); }

AnyGrid parse_any(std::string_view text) {
    if (text.starts_with("vox3")) return parse_vox3(text);
    if (text.starts_with("P1") || text.starts_with("P4")) return parse_pbm(text);
    parse_error(1, "unrecognized format (expected P1, P4 or vox3)");
}

AnyGrid read_any(const std::string& path) { return parse_any(read_file(path)); }

} // namespace digitopo
