#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xrv {

// 8-bit grayscale, row-major.
struct Image8 {
    int w = 0;
    int h = 0;
    std::vector<uint8_t> px;

    uint8_t at(int y, int x) const { return px[static_cast<size_t>(y) * w + x]; }
    uint8_t& at(int y, int x) { return px[static_cast<size_t>(y) * w + x]; }
};

Image8 read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Image8& img);

// Square float image in [-1, 1].
struct FloatImage {
    int side = 0;
    std::vector<float> v;
};

// Center-crop to the min-side square, bilinear-resize to target_side, map p -> p/127.5 - 1.
FloatImage preprocess_image(const Image8& img, int target_side = 224);

} // namespace xrv
