#pragma once

#include <string>

#include "monomap/raster.hpp"

namespace monomap::io {

// 8-bit RGB image IO. Supported containers: PNG (RGB or RGBA/gray promoted
// to RGB on read, written as RGB8) and binary PPM (P6, maxval 255). The
// format is chosen by file extension: ".png" or ".ppm".
ColorImage read_image(const std::string& path);
void write_image(const ColorImage& image, const std::string& path);

}  // namespace monomap::io
