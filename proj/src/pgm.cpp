#include "pgm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace glyphrec {
namespace {

// Next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    return tok;
}

int parse_header_int(std::istream& in, const std::string& path, const char* what) {
    std::string tok = next_token(in);
    if (tok.empty()) fail(ErrorCode::Parse, path + ": truncated PGM header (missing " + what + ")");
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(ErrorCode::Parse, path + ": bad PGM " + what + " '" + tok + "'");
    return std::stoi(tok);
}

} // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, path + ": cannot open file");

    std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5")
        fail(ErrorCode::Parse, path + ": not a PGM file (magic '" + magic + "')");

    GrayImage img;
    img.width = parse_header_int(in, path, "width");
    img.height = parse_header_int(in, path, "height");
    int maxval = parse_header_int(in, path, "maxval");
    if (img.width < 1 || img.height < 1)
        fail(ErrorCode::Parse, path + ": bad PGM dimensions");
    if (maxval < 1 || maxval > 255)
        fail(ErrorCode::Parse, path + ": unsupported PGM maxval " + std::to_string(maxval));

    std::size_t count = static_cast<std::size_t>(img.width) * img.height;
    img.pixels.resize(count);

    if (magic == "P5") {
        // Exactly one whitespace byte separates maxval from the raster.
        in.read(reinterpret_cast<char*>(img.pixels.data()),
                static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count)
            fail(ErrorCode::Parse, path + ": truncated P5 pixel data");
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            int v = parse_header_int(in, path, "pixel");
            if (v > maxval)
                fail(ErrorCode::Parse, path + ": pixel value " + std::to_string(v) +
                                           " exceeds maxval");
            img.pixels[i] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

void write_pgm(const BinaryImage& img, const std::string& path) {
    std::ostringstream out;
    out << "P2\n" << img.width << " " << img.height << "\n255\n";
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            out << (img.at(r, c) ? 0 : 255);
            // keep lines within the 70-char limit of the plain format
            out << (((c + 1) % 16 == 0 || c + 1 == img.width) ? '\n' : ' ');
        }
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::Io, path + ": cannot open file for writing");
    f << out.str();
    if (!f) fail(ErrorCode::Io, path + ": write failed");
}

} // namespace glyphrec
