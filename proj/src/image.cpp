#include "xrv/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "xrv/errors.hpp"

namespace xrv {

namespace {

// Skips whitespace and '#' comments between PGM header tokens.
int next_pgm_token(std::istream& in, const std::string& path) {
    for (;;) {
        int c = in.peek();
        if (c == EOF) throw InvalidImage("pgm: truncated header in '" + path + "'");
        if (c == '#') {
            std::string comment;
            std::getline(in, comment);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value = 0;
    in >> value;
    if (!in) throw InvalidImage("pgm: malformed header in '" + path + "'");
    return value;
}

} // namespace

Image8 read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidImage("pgm: cannot open '" + path + "'");
    std::string magic(2, '\0');
    in.read(magic.data(), 2);
    if (magic != "P5" && magic != "P2") throw InvalidImage("pgm: '" + path + "' is not a PGM file");

    Image8 img;
    img.w = next_pgm_token(in, path);
    img.h = next_pgm_token(in, path);
    const int maxval = next_pgm_token(in, path);
    if (img.w <= 0 || img.h <= 0) throw InvalidImage("pgm: non-positive dimensions in '" + path + "'");
    if (maxval <= 0 || maxval > 255)
        throw InvalidImage("pgm: unsupported maxval " + std::to_string(maxval) + " in '" + path +
                           "' (pixels must fit [0,255])");

    const size_t n = static_cast<size_t>(img.w) * img.h;
    img.px.resize(n);
    if (magic == "P5") {
        in.get(); // single whitespace after maxval
        in.read(reinterpret_cast<char*>(img.px.data()), static_cast<std::streamsize>(n));
        if (static_cast<size_t>(in.gcount()) != n)
            throw InvalidImage("pgm: truncated pixel data in '" + path + "'");
    } else {
        for (size_t i = 0; i < n; ++i) {
            int value = 0;
            in >> value;
            if (!in || value < 0 || value > maxval)
                throw InvalidImage("pgm: bad ascii pixel in '" + path + "'");
            img.px[i] = static_cast<uint8_t>(value);
        }
    }
    return img;
}

void write_pgm(const std::string& path, const Image8& img) {
    if (img.w <= 0 || img.h <= 0 || img.px.size() != static_cast<size_t>(img.w) * img.h)
        throw InvalidImage("pgm: refusing to write malformed image '" + path + "'");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("pgm: cannot write '" + path + "'");
    out << "P5\n" << img.w << " " << img.h << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.px.data()),
              static_cast<std::streamsize>(img.px.size()));
    if (!out) throw DataError("pgm: short write to '" + path + "'");
}

FloatImage preprocess_image(const Image8& img, int target_side) {
    if (img.w <= 0 || img.h <= 0) throw InvalidImage("preprocess: non-positive image dimensions");
    if (img.px.size() != static_cast<size_t>(img.w) * img.h)
        throw InvalidImage("preprocess: pixel buffer does not match dimensions");
    if (target_side <= 0) throw InvalidImage("preprocess: non-positive target side");

    // Centered square crop of side min(w,h); offset = floor((len-side)/2).
    const int side = std::min(img.w, img.h);
    const int x0 = (img.w - side) / 2;
    const int y0 = (img.h - side) / 2;

    FloatImage out;
    out.side = target_side;
    out.v.resize(static_cast<size_t>(target_side) * target_side);

    // Bilinear with half-pixel centers; scale 1 degenerates to an exact copy.
    const double scale = static_cast<double>(side) / target_side;
    for (int oy = 0; oy < target_side; ++oy) {
        const double sy = (oy + 0.5) * scale - 0.5;
        const double syc = std::clamp(sy, 0.0, static_cast<double>(side - 1));
        const int y1 = static_cast<int>(std::floor(syc));
        const int y2 = std::min(y1 + 1, side - 1);
        const double fy = syc - y1;
        for (int ox = 0; ox < target_side; ++ox) {
            const double sx = (ox + 0.5) * scale - 0.5;
            const double sxc = std::clamp(sx, 0.0, static_cast<double>(side - 1));
            const int x1 = static_cast<int>(std::floor(sxc));
            const int x2 = std::min(x1 + 1, side - 1);
            const double fx = sxc - x1;

            const double p11 = img.at(y0 + y1, x0 + x1);
            const double p12 = img.at(y0 + y1, x0 + x2);
            const double p21 = img.at(y0 + y2, x0 + x1);
            const double p22 = img.at(y0 + y2, x0 + x2);
            const double top = p11 + (p12 - p11) * fx;
            const double bot = p21 + (p22 - p21) * fx;
            const double p = top + (bot - top) * fy;
            out.v[static_cast<size_t>(oy) * target_side + ox] = static_cast<float>(p / 127.5 - 1.0);
        }
    }
    return out;
}

} // namespace xrv
